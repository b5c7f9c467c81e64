#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcs::cli {

// Exit codes returned by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Environment variable that overrides the output directory unless
// --output-dir is given on the command line.
inline constexpr const char* kOutputDirEnv = "LCS_OUTPUT_DIR";

// Parses and executes one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcs::cli
