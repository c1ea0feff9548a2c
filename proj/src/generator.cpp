#include "ciprng/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ciprng/errors.hpp"

namespace ciprng {

double logistic_step(double y) { return 4.0 * y * (1.0 - y); }

std::size_t strategy_from_y(double y, std::size_t n_cells) {
  // The product is at most 1e7, so the conversion truncates exactly.
  const double scaled = 1e7 * y;
  const auto whole = static_cast<std::uint64_t>(scaled);
  return static_cast<std::size_t>(whole % n_cells) + 1;
}

unsigned m_from_y(double y, std::span<const unsigned> m_set) {
  const std::size_t size = m_set.size();
  const auto index = static_cast<std::size_t>(y * static_cast<double>(size));
  return m_set[std::min(index, size - 1)];
}

void flip_cell(BitSequence& x, std::size_t cell) {
  if (cell < 1 || cell > x.size()) {
    throw std::out_of_range("cell index " + std::to_string(cell) + " outside [1, " +
                            std::to_string(x.size()) + "]");
  }
  x[cell - 1] ^= 1u;
}

BitSequence chaotic_step(BitView x, std::size_t cell) {
  BitSequence next(x.begin(), x.end());
  flip_cell(next, cell);
  return next;
}

LogisticDriver::LogisticDriver(double y0) : y_(y0) {
  if (!(y0 >= 0.0 && y0 <= 1.0)) throw ConfigError("logistic value must lie in [0, 1]");
}

double LogisticDriver::draw() {
  const double sample = y_;
  const double next = logistic_step(y_);
  if (next == y_) {
    throw DegenerateSeedError("logistic driver reached the fixed point " + format_real(y_) +
                              "; the seed is dead, re-seed the generator");
  }
  y_ = next;
  return sample;
}

TranscriptDriver::TranscriptDriver(std::vector<std::size_t> strategy, std::vector<unsigned> gaps,
                                   bool cyclic)
    : strategy_(std::move(strategy)), gaps_(std::move(gaps)), cyclic_(cyclic) {
  if (strategy_.empty() || gaps_.empty()) throw ConfigError("transcript needs at least one S and one m value");
  if (std::find(strategy_.begin(), strategy_.end(), 0u) != strategy_.end()) {
    throw ConfigError("transcript strategy values are 1-based cell indices");
  }
  if (std::find(gaps_.begin(), gaps_.end(), 0u) != gaps_.end()) {
    throw ConfigError("transcript m values must be positive");
  }
}

unsigned TranscriptDriver::next_gap(std::span<const unsigned>) {
  if (gap_pos_ >= gaps_.size()) throw TranscriptExhausted("m transcript exhausted");
  const unsigned value = gaps_[gap_pos_++];
  if (cyclic_ && gap_pos_ == gaps_.size()) gap_pos_ = 0;
  return value;
}

std::size_t TranscriptDriver::next_strategy(std::size_t n_cells) {
  if (strategy_pos_ >= strategy_.size()) throw TranscriptExhausted("S transcript exhausted");
  const std::size_t value = strategy_[strategy_pos_++];
  if (cyclic_ && strategy_pos_ == strategy_.size()) strategy_pos_ = 0;
  if (value > n_cells) throw ConfigError("transcript strategy value exceeds the number of cells");
  return value;
}

Generator::Generator(const GeneratorConfig& config)
    : x_(config.initial_values().x0),
      driver_(LogisticDriver(config.initial_values().y0)),
      m_set_(config.m_set().begin(), config.m_set().end()),
      pending_initial_(config.emit_initial()) {}

Generator::Generator(BitSequence x0, TranscriptDriver driver, bool emit_initial)
    : x_(std::move(x0)), driver_(std::move(driver)), pending_initial_(emit_initial) {
  if (x_.empty()) throw ConfigError("initial state must have at least one cell");
  const auto& s = std::get<TranscriptDriver>(driver_).strategy();
  if (std::any_of(s.begin(), s.end(), [&](std::size_t v) { return v > x_.size(); })) {
    throw ConfigError("transcript strategy value exceeds the number of cells");
  }
}

const BitSequence& Generator::next_block() {
  if (pending_initial_) {
    pending_initial_ = false;
  } else {
    const std::size_t n = x_.size();
    const unsigned gap = std::visit([&](auto& d) { return d.next_gap(m_set_); }, driver_);
    for (unsigned step = 0; step < gap; ++step) {
      flip_cell(x_, std::visit([&](auto& d) { return d.next_strategy(n); }, driver_));
    }
    iter_count_ += gap;
    last_gap_ = gap;
  }
  ++blocks_emitted_;
  unread_ = x_.size();
  return x_;
}

void Generator::read_bits(std::span<std::uint8_t> out) {
  std::size_t filled = 0;
  while (filled < out.size()) {
    if (unread_ == 0) next_block();
    const std::size_t take = std::min(unread_, out.size() - filled);
    const auto first = x_.begin() + static_cast<std::ptrdiff_t>(x_.size() - unread_);
    std::copy(first, first + static_cast<std::ptrdiff_t>(take), out.begin() + static_cast<std::ptrdiff_t>(filled));
    unread_ -= take;
    filled += take;
  }
}

BitSequence Generator::read_bits(std::size_t count) {
  BitSequence bits(count);
  read_bits(std::span<std::uint8_t>(bits));
  return bits;
}

GeneratorState Generator::state() const {
  GeneratorState s;
  s.x = x_;
  if (const auto* logistic = std::get_if<LogisticDriver>(&driver_)) {
    s.y = logistic->current();
  } else {
    s.y = std::numeric_limits<double>::quiet_NaN();
  }
  s.iter_count = iter_count_;
  s.blocks_emitted = blocks_emitted_;
  return s;
}

std::vector<std::size_t> Generator::upcoming_strategy(std::size_t count) const {
  std::vector<std::size_t> out;
  out.reserve(count);
  Driver driver = driver_;
  const std::size_t n = x_.size();
  while (out.size() < count) {
    const unsigned gap = std::visit([&](auto& d) { return d.next_gap(m_set_); }, driver);
    for (unsigned step = 0; step < gap && out.size() < count; ++step) {
      out.push_back(std::visit([&](auto& d) { return d.next_strategy(n); }, driver));
    }
  }
  return out;
}

bool Generator::same_dynamics(const Generator& other) const {
  return pending_initial_ == other.pending_initial_ && x_ == other.x_ && driver_ == other.driver_ &&
         m_set_ == other.m_set_;
}

BitSequence generate_bits(const GeneratorConfig& config, std::size_t count) {
  Generator gen(config);
  return gen.read_bits(count);
}

}  // namespace ciprng
