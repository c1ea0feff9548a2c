#include "ciprng/analysis/cycle.hpp"

#include <sstream>
#include <stdexcept>

#include "ciprng/errors.hpp"

namespace ciprng::analysis {

CycleOutcome detect_cycle(const Generator& start, const CycleOptions& options) {
  CycleOutcome outcome;
  // Block 0 of the emitted sequence; from here on every step consumes the driver.
  Generator origin = start;
  origin.next_block();

  // Brent: find the period with a power-of-two tortoise.
  std::uint64_t power = 1;
  std::uint64_t period = 1;
  Generator tortoise = origin;
  Generator hare = origin;
  hare.next_block();
  std::uint64_t steps = 1;
  while (!tortoise.same_dynamics(hare)) {
    if (steps >= options.budget) {
      outcome.steps_used = steps;
      return outcome;
    }
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare.next_block();
    ++period;
    ++steps;
  }

  // Transient: advance two walkers `period` apart until they meet.
  tortoise = origin;
  hare = origin;
  for (std::uint64_t i = 0; i < period; ++i) hare.next_block();
  steps += period;
  std::uint64_t transient = 0;
  while (!tortoise.same_dynamics(hare)) {
    if (steps >= options.budget) {
      outcome.steps_used = steps;
      return outcome;
    }
    tortoise.next_block();
    hare.next_block();
    ++transient;
    steps += 2;
  }
  outcome.steps_used = steps;

  // Re-simulate the window after the transient and check the recurrence.
  const std::uint64_t window = options.verify_periods * period;
  for (std::uint64_t k = 0; k < window; ++k) {
    if (!tortoise.same_dynamics(hare) || tortoise.x() != hare.x()) {
      throw std::logic_error("detect_cycle: recurrence check failed");
    }
    tortoise.next_block();
    hare.next_block();
  }

  outcome.report = CycleReport{transient, period, transient + period, window};
  return outcome;
}

CycleOutcome detect_cycle(const GeneratorConfig& config, const CycleOptions& options) {
  return detect_cycle(Generator(config), options);
}

std::uint64_t ideal_period(std::uint64_t n_m, std::uint64_t n_s) {
  if (n_m == 0 || n_s == 0) throw ConfigError("ideal_period: driver periods must be positive");
  return 2 * n_m * n_s;
}

std::vector<BitSequence> emitted_blocks(Generator generator, std::size_t count) {
  std::vector<BitSequence> blocks;
  blocks.reserve(count);
  for (std::size_t i = 0; i < count; ++i) blocks.push_back(generator.next_block());
  return blocks;
}

std::string to_text(const CycleOutcome& outcome) {
  std::ostringstream out;
  if (!outcome.found()) {
    out << "status: period not found within budget\n"
        << "steps_used: " << outcome.steps_used << '\n';
    return out.str();
  }
  const auto& r = *outcome.report;
  out << "status: found\n"
      << "transient_length: " << r.transient_length << '\n'
      << "cycle_period: " << r.cycle_period << '\n'
      << "orbit_length: " << r.orbit_length << '\n'
      << "verified_steps: " << r.verified_steps << '\n'
      << "steps_used: " << outcome.steps_used << '\n';
  return out.str();
}

}  // namespace ciprng::analysis
