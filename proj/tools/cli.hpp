#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace eigencone::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kPrecondition = 3,
  kGoldenMismatch = 4,
  kResource = 5,
};

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Embedded golden data by target name; empty if unknown.
std::string_view golden(std::string_view name);
std::vector<std::string> golden_names();

/// Runs one reproduction target; returns kOk or kGoldenMismatch.
int reproduce(std::string_view target, bool json, std::ostream& out, std::ostream& err);
/// Same, comparing against the given table text instead of the embedded one.
int reproduce_against(std::string_view target, std::string_view table, bool json, std::ostream& out,
                      std::ostream& err);

}  // namespace eigencone::cli
