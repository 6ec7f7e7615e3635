#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace transfun::cli {

/// Process exit codes. Nothing else is ever returned.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,        // unreadable file, malformed JSON, bad flags
  kSpecError = 3,         // SpaceMismatch, InvalidSpec and other semantic errors
  kInconsistent = 4,      // a statically proved axiom was refuted by trials
};

/// Runs one invocation; `args` excludes the program name. Documents go to
/// `out` (or --output), one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transfun::cli
