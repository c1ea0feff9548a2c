#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ciprng/battery/tests.hpp"
#include "ciprng/bits.hpp"
#include "ciprng/config.hpp"

namespace ciprng::battery {

// P_T at or above this value means the p-values are accepted as uniform.
inline constexpr double kUniformityThreshold = 0.0001;
inline constexpr std::size_t kRecommendedSequences = 55;

struct UniformityResult {
  std::array<std::size_t, 10> bins{};
  double chi_square = 0.0;
  double p_t = 0.0;
  // Fewer p-values than the recommended minimum.
  bool small_sample = false;
};

// Ten equal bins over [0,1] (p = 1 goes to the last bin),
// chi2 = sum (F_i - s/10)^2 / (s/10), P_T = Q(9/2, chi2/2).
// Throws ConfigError on an empty list or a p-value outside [0,1].
UniformityResult uniformity(std::span<const double> p_values,
                            std::size_t min_recommended = kRecommendedSequences);

double p_uniformity(std::span<const double> p_values);

struct BatteryOptions {
  std::size_t n_sequences = 100;
  std::size_t sequence_length = 1'000'000;
  std::size_t block_length = kDefaultBlockLength;
  unsigned serial_m = kDefaultSerialLength;
  unsigned entropy_m = kDefaultEntropyLength;
  // Allows sequences shorter than the recommended 10^6 bits (and the
  // per-test minima); the report then carries a warning.
  bool relaxed = false;
  std::size_t min_recommended_sequences = kRecommendedSequences;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

inline constexpr std::size_t kRecommendedSequenceLength = 1'000'000;

// P-values of one test statistic across all sequences.
struct TestSeries {
  std::string test;
  // Sub-statistic label ("forward", "backward", "d1", "d2") or empty.
  std::string param;
  std::vector<double> p_values;
  double p_t = 0.0;
  bool pass = false;

  // Sequences whose p-value is >= alpha.
  std::size_t count_at_least(double alpha) const;
};

// Mean of the sub-statistic P_T values of a test that yields more than one
// statistic per sequence (serial, cumulative sums).
struct AveragedSeries {
  std::string test;
  double p_t = 0.0;
  bool pass = false;
};

struct BatteryReport {
  std::size_t n_sequences = 0;
  std::size_t sequence_length = 0;
  bool relaxed = false;
  std::uint64_t master_seed = 0;
  std::vector<std::string> warnings;
  // Sorted by test name, then param.
  std::vector<TestSeries> series;
  std::vector<AveragedSeries> averaged;

  // Every series has P_T >= kUniformityThreshold.
  bool all_pass() const;
  // Throws std::out_of_range if absent.
  const TestSeries& find(std::string_view test, std::string_view param = {}) const;

  std::string to_text() const;
  // Detail section "test,param,seq_index,p_value", then a summary section
  // "test,P_T,pass" (summary test names carry the param as "test:param").
  std::string to_csv() const;
};

// Runs every test on each sequence and aggregates. Sequences are evaluated in
// parallel; the report does not depend on scheduling.
BatteryReport evaluate_sequences(std::span<const BitSequence> sequences, const BatteryOptions& options);

// Generates options.n_sequences sequences from `config`, sequence i seeded
// with the time seed t + i where t is the config's seed.t, and evaluates them.
// Explicit (x0, y0) seeds are rejected: the schedule needs an integer master.
BatteryReport run_battery(const GeneratorConfig& config, const BatteryOptions& options);

}  // namespace ciprng::battery
