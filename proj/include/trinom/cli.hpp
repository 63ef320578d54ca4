#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <iosfwd>
#include <string>
#include <vector>

namespace trinom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sequence identifiers accepted by the bfile subcommand.
inline constexpr const char* kSequenceA = "A391468";
inline constexpr const char* kSequenceB = "A391469";
inline constexpr const char* kSequenceC = "A391470";

}  // namespace trinom::cli
