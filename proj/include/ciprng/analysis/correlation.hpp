#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ciprng/bits.hpp"

namespace ciprng::analysis {

// Correlation values for the consecutive lags first_lag .. first_lag + size - 1.
struct CorrelationSeries {
  long first_lag = 0;
  std::vector<double> values;
  // Set when an input was constant, so the normalization is undefined.
  bool degenerate = false;

  long last_lag() const { return first_lag + static_cast<long>(values.size()) - 1; }
  // Throws std::out_of_range for lags outside the series.
  double at(long lag) const;
};

// Bits are mapped to +/-1 and mean-centred. r(tau) = sum_{i < L - tau} a_i a_{i+tau} / sum_i a_i^2,
// i.e. the biased estimator normalized by full-length energy. Lags 0 .. max_lag.
// Requires 1 <= max_lag < L. A constant sequence yields r(0) = 1, r(tau) = 0
// and `degenerate`.
CorrelationSeries autocorrelation(BitView bits, std::size_t max_lag);

// Same estimator across two equal-length sequences, normalized by
// sqrt(E_a E_b); lags -max_lag .. max_lag, where positive tau pairs a_i with
// b_{i+tau}. A constant input yields all zeros and `degenerate`.
CorrelationSeries cross_correlation(BitView a, BitView b, std::size_t max_lag);

// "lag,value" with a header row.
std::string to_csv(const CorrelationSeries& series);

}  // namespace ciprng::analysis
