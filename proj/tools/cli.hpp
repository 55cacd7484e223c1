#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enclose::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,  ///< parse or validation failure
  kRuntimeFailure = 2,  ///< I/O, numerical failure, or oracle violations
  kUsage = 64,
};

/// A swept parameter: `count` evenly spaced values from `first` to `last`
/// inclusive.
struct SweepAxis {
  std::string name;
  double first = 0.0;
  double last = 0.0;
  std::size_t count = 0;

  std::vector<double> values() const;
};

/// Parses NAME=a:b:n. Throws std::invalid_argument on malformed text.
SweepAxis parse_sweep_axis(const std::string& text);

/// Entry point behind the `enclose` executable.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace enclose::cli
