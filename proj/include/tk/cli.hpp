// Commands behind the `tk` binary. Each returns its exit code and both
// renderings; the binary prints one of them.
#pragma once

#include "tk/tor.hpp"

#include <json.hpp>
#include <functional>
#include <string>

namespace tk {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kInconsistent = 3 };

struct CommandResult {
  int code = kOk;
  std::string text;
  nlohmann::ordered_json json;

  /// Two-space indented JSON with a trailing newline, or the text.
  std::string render(bool as_json) const;
};

CommandResult cmd_twist(const std::string& document);
CommandResult cmd_kk(const std::string& subcommand, const std::string& expression);
CommandResult cmd_fgl_nseries(long n, long order);
CommandResult cmd_fgl_identity(long m, long order);
/// `truncation` < 0 multiplies in the full ring.
CommandResult cmd_cp_mult(long i, long j, long truncation);
/// `truncation` 0 uses the document's own.
CommandResult cmd_tor(const std::string& document, long max_s, const std::string& mode, long truncation);
CommandResult cmd_selftest(const std::string& depth, bool inject_fault);

/// Maps library exceptions to the exit-code contract around `body`.
CommandResult guarded(const std::function<CommandResult()>& body);

}  // namespace tk
