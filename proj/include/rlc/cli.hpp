#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlc::cli {

inline constexpr const char* kToolName = "rlcdist";
inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kCsvSchemaVersion = 1;

enum ExitCode : int { ok = 0, failure = 1, parameter_error = 2, budget_error = 3, version_mismatch = 4 };

/// Runs one command line (without the program name) and returns the exit
/// code. Results go to `out`; diagnostics, and the manifest for the
/// single-value formats, go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlc::cli
