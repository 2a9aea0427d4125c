#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upair::cli {

/// Exit codes: 0 success / pass, 1 input error, 2 mathematical negative
/// (lemma violation, certificate failure, no null vector in a demo).
enum ExitCode : int { kOk = 0, kInputError = 1, kNegative = 2 };

inline constexpr unsigned long long kDefaultSeed = 42;

/// Runs one command line (args excludes the program name). JSON results go
/// to --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upair::cli
