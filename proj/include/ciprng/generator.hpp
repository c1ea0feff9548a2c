#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ciprng/bits.hpp"
#include "ciprng/config.hpp"

namespace ciprng {

// y -> 4y(1-y) in binary64, round-to-nearest.
double logistic_step(double y);

// Cell index in [1, n_cells]: floor(1e7 * y) mod n_cells + 1, where the
// product is the binary64 product and the floor truncates it exactly.
std::size_t strategy_from_y(double y, std::size_t n_cells);

// m_set[min(floor(y * |M|), |M| - 1)]. With M = {a, b} this is a for y < 0.5
// and b otherwise.
unsigned m_from_y(double y, std::span<const unsigned> m_set);

// Negates cell `cell` (1-based) in place. Throws std::out_of_range.
void flip_cell(BitSequence& x, std::size_t cell);

// Copying variant of flip_cell.
BitSequence chaotic_step(BitView x, std::size_t cell);

// Shared logistic stream. Holds the next unused sample; every draw returns it
// and advances the map once. A block draws one sample for its gap m and then
// one per cell update.
class LogisticDriver {
 public:
  explicit LogisticDriver(double y0);

  double current() const { return y_; }

  // Throws DegenerateSeedError when the map has reached a fixed point.
  double draw();

  unsigned next_gap(std::span<const unsigned> m_set) { return m_from_y(draw(), m_set); }
  std::size_t next_strategy(std::size_t n_cells) { return strategy_from_y(draw(), n_cells); }

  friend bool operator==(const LogisticDriver&, const LogisticDriver&) = default;

 private:
  double y_;
};

// Explicit S and m sequences. Used to replay worked examples exactly and to
// study cycle structure with periodic drivers.
class TranscriptDriver {
 public:
  // Strategy entries are 1-based cell indices, gaps are >= 1. When `cyclic`
  // is false, running past the end throws TranscriptExhausted.
  TranscriptDriver(std::vector<std::size_t> strategy, std::vector<unsigned> gaps,
                   bool cyclic = false);

  unsigned next_gap(std::span<const unsigned> /*m_set*/);
  std::size_t next_strategy(std::size_t n_cells);

  const std::vector<std::size_t>& strategy() const { return strategy_; }
  const std::vector<unsigned>& gaps() const { return gaps_; }
  bool cyclic() const { return cyclic_; }
  // Read positions into the two sequences (reduced modulo length if cyclic).
  std::pair<std::size_t, std::size_t> phase() const { return {gap_pos_, strategy_pos_}; }

  friend bool operator==(const TranscriptDriver&, const TranscriptDriver&) = default;

 private:
  std::vector<std::size_t> strategy_;
  std::vector<unsigned> gaps_;
  bool cyclic_;
  std::size_t strategy_pos_ = 0;
  std::size_t gap_pos_ = 0;
};

using Driver = std::variant<LogisticDriver, TranscriptDriver>;

struct GeneratorState {
  BitSequence x;
  // Next unused logistic sample; NaN for transcript-driven generators.
  double y = 0.0;
  std::uint64_t iter_count = 0;
  std::uint64_t blocks_emitted = 0;
};

// Chaotic-iterations bit generator. Value type: copying it forks the stream.
class Generator {
 public:
  explicit Generator(const GeneratorConfig& config);

  // Transcript-driven generator. Allows n_cells == 1 (x0.size()), which the
  // logistic configuration does not.
  Generator(BitSequence x0, TranscriptDriver driver, bool emit_initial = true);

  // Advances to the next emitted state and returns it. When emit_initial is
  // set, the first call returns x0 without consuming the driver.
  const BitSequence& next_block();

  // Fills `out` with the next bits of the stream, continuing inside a
  // partially consumed block if needed.
  void read_bits(std::span<std::uint8_t> out);
  BitSequence read_bits(std::size_t count);

  std::size_t n_cells() const { return x_.size(); }
  const BitSequence& x() const { return x_; }
  const Driver& driver() const { return driver_; }
  std::uint64_t iter_count() const { return iter_count_; }
  std::uint64_t blocks_emitted() const { return blocks_emitted_; }
  // Gap used by the most recent block (0 for the initial block).
  unsigned last_gap() const { return last_gap_; }
  GeneratorState state() const;

  // The next `count` cell indices this generator will update, in order,
  // without advancing it. This is the strategy component of the current
  // phase-space point.
  std::vector<std::size_t> upcoming_strategy(std::size_t count) const;

  // True when both generators will produce identical futures: same cell
  // state, same driver state and same emission phase. Counters are ignored.
  bool same_dynamics(const Generator& other) const;

 private:
  BitSequence x_;
  Driver driver_;
  std::vector<unsigned> m_set_;
  bool pending_initial_;
  std::uint64_t iter_count_ = 0;
  std::uint64_t blocks_emitted_ = 0;
  unsigned last_gap_ = 0;
  // Bits of x_ not yet handed out by read_bits.
  std::size_t unread_ = 0;
};

// Bit k is cell (k mod N) + 1 of block floor(k / N).
BitSequence generate_bits(const GeneratorConfig& config, std::size_t count);

}  // namespace ciprng
