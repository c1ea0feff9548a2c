#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ciprng/config.hpp"
#include "ciprng/generator.hpp"

namespace ciprng::analysis {

// Indices refer to the sequence of emitted blocks: block 0 is the first block
// the generator emits (x0 when emit_initial is set).
struct CycleReport {
  std::uint64_t transient_length = 0;
  std::uint64_t cycle_period = 1;
  std::uint64_t orbit_length = 1;
  // Blocks re-simulated to confirm state(l + k) == state(l + k + period).
  std::uint64_t verified_steps = 0;
};

struct CycleOptions {
  // Maximum block steps spent on period and transient search.
  std::uint64_t budget = 100'000'000;
  // Verification window in multiples of the period.
  std::uint64_t verify_periods = 3;
};

struct CycleOutcome {
  // Empty when no period was found within the budget.
  std::optional<CycleReport> report;
  std::uint64_t steps_used = 0;

  bool found() const { return report.has_value(); }
};

// Brent cycle detection over the full generator state (cells, driver state
// including the exact binary64 logistic value, emission phase). Throws
// std::logic_error if verification fails; propagates driver errors.
CycleOutcome detect_cycle(const Generator& start, const CycleOptions& options = {});
CycleOutcome detect_cycle(const GeneratorConfig& config, const CycleOptions& options = {});

// 2 * n_m * n_s: period of the block sequence for periodic drivers of
// periods n_m and n_s in the ideal case. The measured period divides it.
std::uint64_t ideal_period(std::uint64_t n_m, std::uint64_t n_s);

// First `count` emitted blocks.
std::vector<BitSequence> emitted_blocks(Generator generator, std::size_t count);

std::string to_text(const CycleOutcome& outcome);

}  // namespace ciprng::analysis
