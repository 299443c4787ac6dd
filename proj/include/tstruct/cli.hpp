#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tstruct::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kMalformedInput = 2,
};

/// Environment variable overriding the enumeration size bound.
inline constexpr const char* kMaxPointsEnv = "TSTRUCT_MAX_POINTS";

/// Runs one command line (without the program name). Results go to `out`;
/// findings and errors go to `err` as one JSON record per line.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tstruct::cli
