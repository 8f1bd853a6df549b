#pragma once

#include "tk/laurent.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tk {

/// Parses the polynomial expression grammar
///
///   expr     := term (('+'|'-') term)*
///   term     := '-'? factor ('*' factor)*
///   factor   := rational | var ('^' int)? | '(' expr ')' ('^' int)?
///   rational := int ('/' posint)?
///
/// over the variables in `allowed`. Whitespace is ignored. Errors are
/// ParseError carrying the 1-based byte offset of the offending character.
LaurentPoly parse_expression(std::string_view text, const std::vector<std::string>& allowed);

}  // namespace tk
