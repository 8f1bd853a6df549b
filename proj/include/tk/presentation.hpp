// Finitely presented Z/2-graded modules over the truncated ring, and
// their JSON document format.
#pragma once

#include "tk/beta_poly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tk {

inline constexpr unsigned kDefaultTruncation = 8;

struct Generator {
  std::string name;
  int parity = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// generator index -> coefficient; zero coefficients are never stored.
using Relation = std::map<std::size_t, BetaPoly>;

struct Presentation {
  unsigned truncation = kDefaultTruncation;
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  /// Parity of a relation row: the common parity of its generators (t is
  /// an even unit, so coefficients never shift parity). Empty rows are
  /// assigned parity 0.
  int parity(const Relation& r) const;
  /// Largest beta index used by any coefficient.
  unsigned max_index() const;
  /// Throws MalformedPresentation on inhomogeneous rows, indices above the
  /// truncation, bad parities or generator references out of range.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// ParseError (with line and column) for malformed JSON; ValidationError for
/// well-formed documents that break the format or the invariants.
Presentation parse_presentation(std::string_view document);
/// Canonical document: fixed key order, relation terms by generator order,
/// coefficients in canonical BetaPoly text, two-space indentation.
std::string serialize_presentation(const Presentation& p);

}  // namespace tk
