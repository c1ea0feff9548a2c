#pragma once

#include <stdexcept>
#include <string>

namespace ciprng {

// Invalid parameters or malformed input (bad config, bad seed literal, wrong
// vector length, sequence too short for a test).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The logistic driver collapsed onto a fixed point, or a seed was rejected
// because it would. The caller has to pick another seed.
class DegenerateSeedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A forced transcript ran out of values before the requested output was
// produced.
class TranscriptExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ciprng
