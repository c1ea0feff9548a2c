#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ciprng/bits.hpp"

namespace ciprng {

// Seed given directly as the initial cell state and logistic value.
struct ExplicitSeed {
  BitSequence x0;
  double y0 = 0.0;

  friend bool operator==(const ExplicitSeed&, const ExplicitSeed&) = default;
};

// Seed given as the fractional part of an epoch timestamp, written as an
// integer (e.g. the microseconds 484076 of 1237632934.484076).
struct TimeSeed {
  std::uint64_t t = 0;

  friend bool operator==(const TimeSeed&, const TimeSeed&) = default;
};

using SeedSpec = std::variant<ExplicitSeed, TimeSeed>;

// Resolved initial values of a generator.
struct SeedValues {
  BitSequence x0;
  double y0 = 0.0;
};

// Logistic seeds that reach a fixed point within two steps: 0, 1/4, 1/2,
// 3/4 and 1, plus anything outside the unit interval.
bool is_degenerate_y0(double y0);

// y0 = 0.t (t divided by 10^digits(t)); x0 = t mod 2^n_cells written
// big-endian, most significant bit in cell 1. Throws DegenerateSeedError if
// y0 is degenerate.
SeedValues seed_from_time(std::uint64_t t, std::size_t n_cells);

SeedValues resolve_seed(const SeedSpec& seed, std::size_t n_cells);

// Parameters of one generator instance. Construction validates everything,
// including the seed, so a live GeneratorConfig always yields a generator.
class GeneratorConfig {
 public:
  GeneratorConfig(std::size_t n_cells, std::vector<unsigned> m_set, SeedSpec seed,
                  bool emit_initial = true);

  std::size_t n_cells() const { return n_cells_; }
  // Sorted ascending, no duplicates.
  std::span<const unsigned> m_set() const { return m_set_; }
  const SeedSpec& seed() const { return seed_; }
  bool emit_initial() const { return emit_initial_; }
  const SeedValues& initial_values() const { return initial_; }

  GeneratorConfig with_seed(SeedSpec seed) const;

  // key=value text: n_cells, m_set (comma separated), seed.t or
  // seed.x0/seed.y0, emit_initial. Blank lines and '#' comments are ignored.
  static GeneratorConfig parse(std::string_view text);
  std::string serialize() const;

  friend bool operator==(const GeneratorConfig& a, const GeneratorConfig& b);

 private:
  std::size_t n_cells_;
  std::vector<unsigned> m_set_;
  SeedSpec seed_;
  bool emit_initial_;
  SeedValues initial_;
};

// The six (N, M) parameterizations the generator was evaluated with.
struct SchemeParams {
  std::string name;
  std::size_t n_cells;
  std::vector<unsigned> m_set;
};

const std::vector<SchemeParams>& named_schemes();

// Accepts "scheme-1" .. "scheme-6" (or just the digit). Throws ConfigError
// for anything else.
const SchemeParams& scheme_params(std::string_view name);

GeneratorConfig scheme_config(std::string_view name, SeedSpec seed, bool emit_initial = true);

// Parses "14,15" into {14, 15}; validation is left to GeneratorConfig.
std::vector<unsigned> parse_m_set(std::string_view text);

// Strict decimal literal parse of a double, whole string must be consumed.
double parse_real(std::string_view text);
std::uint64_t parse_unsigned(std::string_view text);
// Shortest decimal that round-trips to the same binary64 value.
std::string format_real(double value);

}  // namespace ciprng
