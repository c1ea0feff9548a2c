#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ciprng/bits.hpp"

namespace ciprng::cli {

enum ExitCode : int {
  kSuccess = 0,
  kStatisticalFailure = 1,
  kUsageError = 2,
  kRuntimeError = 3,
};

// Forced driver read from a --transcript file:
//   x0=10100            (optional; otherwise taken from the seed)
//   S=2,4,2,2,5,1,1     (1-based cell indices)
//   m=4,5,4
//   cyclic=false
struct Transcript {
  std::optional<BitSequence> x0;
  std::vector<std::size_t> strategy;
  std::vector<unsigned> gaps;
  bool cyclic = false;
};

Transcript parse_transcript(std::string_view text);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ciprng::cli
