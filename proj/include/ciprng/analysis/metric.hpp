#pragma once

#include <cstddef>
#include <span>

#include "ciprng/bits.hpp"

namespace ciprng::analysis {

inline constexpr std::size_t kDefaultStrategyPrefix = 30;

struct PhaseDistance {
  // Number of differing cells, in [0, N].
  std::size_t cell_distance = 0;
  // (9/N) sum_{k=1}^{K} |S^k - S'^k| / 10^k over the compared prefix, in [0, 1].
  double strategy_distance = 0.0;
  // Upper bound on the strategy terms beyond the prefix: (N-1)/N * 10^-K.
  double tail_bound = 0.0;
  // Number of strategy terms compared.
  std::size_t prefix_length = 0;

  double total() const { return static_cast<double>(cell_distance) + strategy_distance; }
};

// Distance between phase-space points (S, E) and (S', E'). Strategies are
// 1-based cell indices; element 0 of each span is S^1. Compares the first
// min(prefix_k, |s_a|, |s_b|) terms. Throws ConfigError on mismatched cell
// counts or strategy values outside [1, N].
PhaseDistance phase_distance(std::span<const std::size_t> s_a, BitView e_a, std::span<const std::size_t> s_b,
                             BitView e_b, std::size_t prefix_k = kDefaultStrategyPrefix);

}  // namespace ciprng::analysis
