#include "ciprng/analysis/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ciprng/errors.hpp"

namespace ciprng::analysis {

PhaseDistance phase_distance(std::span<const std::size_t> s_a, BitView e_a, std::span<const std::size_t> s_b,
                             BitView e_b, std::size_t prefix_k) {
  const std::size_t n = e_a.size();
  if (n == 0 || e_b.size() != n) {
    throw ConfigError("phase_distance: cell vectors must be non-empty and of equal length");
  }
  const std::size_t k_max = std::min({prefix_k, s_a.size(), s_b.size()});
  auto check = [n](std::size_t s) {
    if (s < 1 || s > n) throw ConfigError("phase_distance: strategy value " + std::to_string(s) + " outside [1, N]");
  };

  PhaseDistance d;
  for (std::size_t i = 0; i < n; ++i) d.cell_distance += (e_a[i] != 0) != (e_b[i] != 0);

  double sum = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t a = s_a[k - 1];
    const std::size_t b = s_b[k - 1];
    check(a);
    check(b);
    const double diff = static_cast<double>(a > b ? a - b : b - a);
    sum += diff * std::pow(10.0, -static_cast<double>(k));
  }
  const double nd = static_cast<double>(n);
  d.strategy_distance = 9.0 / nd * sum;
  d.tail_bound = (nd - 1.0) / nd * std::pow(10.0, -static_cast<double>(k_max));
  d.prefix_length = k_max;
  return d;
}

}  // namespace ciprng::analysis
