#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "ciprng/bits.hpp"

namespace ciprng::battery {

struct TestResult {
  std::string test_name;
  double statistic = 0.0;
  double p_value = 0.0;
  // Test parameters and intermediate quantities, e.g. {"M", 20000}.
  std::map<std::string, double> params;

  bool gate_failed() const {
    auto it = params.find("gate_failed");
    return it != params.end() && it->second != 0.0;
  }
};

struct TestOptions {
  // Lowers the recommended minimum lengths so short sequences can be
  // examined. Hard structural limits (block sizes, lookup tables) still apply.
  bool relaxed = false;
};

inline constexpr std::size_t kDefaultBlockLength = 20000;
inline constexpr unsigned kDefaultSerialLength = 10;
inline constexpr unsigned kDefaultEntropyLength = 10;

// Frequency (monobit): s_obs = |sum(2b - 1)| / sqrt(n), p = erfc(s_obs / sqrt 2).
TestResult frequency_monobit(BitView bits, const TestOptions& options = {});

// Frequency within blocks of `block_len` bits; chi-square over block
// proportions, p = Q(blocks / 2, chi2 / 2). Trailing partial block is dropped.
TestResult block_frequency(BitView bits, std::size_t block_len = kDefaultBlockLength,
                           const TestOptions& options = {});

// Total number of runs. If the monobit prerequisite |pi - 1/2| < 2/sqrt(n)
// fails the result has p = 0 and params["gate_failed"] = 1.
TestResult runs_test(BitView bits, const TestOptions& options = {});

// Longest run of ones per block. Block size follows the length: 8 bits below
// 6272, 128 below 750000, 10^4 otherwise. Needs n >= 128.
TestResult longest_run(BitView bits, const TestOptions& options = {});

// Spectral test: fraction of DFT magnitudes in the first half below the 95%
// threshold sqrt(n ln(1/0.05)).
TestResult spectral_dft(BitView bits, const TestOptions& options = {});

// Maximal excursion of the +/-1 random walk, forward and backward.
std::pair<TestResult, TestResult> cumulative_sums(BitView bits, const TestOptions& options = {});

// Overlapping m-bit pattern counts with wraparound; returns the p-values of
// the first and second differences of psi^2.
std::pair<TestResult, TestResult> serial(BitView bits, unsigned m = kDefaultSerialLength,
                                         const TestOptions& options = {});

// ApEn(m) = phi(m) - phi(m+1), chi2 = 2n(ln 2 - ApEn), p = Q(2^(m-1), chi2/2).
TestResult approximate_entropy(BitView bits, unsigned m = kDefaultEntropyLength,
                               const TestOptions& options = {});

}  // namespace ciprng::battery
