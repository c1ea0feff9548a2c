#include "ciprng/analysis/correlation.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ciprng/errors.hpp"

namespace ciprng::analysis {

namespace {

// +/-1 mapping minus its mean; returns the energy sum a_i^2 via `energy`.
std::vector<double> centred(BitView bits, double& energy) {
  const double n = static_cast<double>(bits.size());
  const double mean = (2.0 * static_cast<double>(count_ones(bits)) - n) / n;
  std::vector<double> a(bits.size());
  energy = 0.0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    a[i] = (bits[i] ? 1.0 : -1.0) - mean;
    energy += a[i] * a[i];
  }
  return a;
}

bool is_constant(BitView bits) {
  const auto ones = count_ones(bits);
  return ones == 0 || ones == bits.size();
}

double lagged_sum(const std::vector<double>& a, const std::vector<double>& b, std::size_t lag) {
  double sum = 0.0;
  for (std::size_t i = 0; i + lag < a.size(); ++i) sum += a[i] * b[i + lag];
  return sum;
}

}  // namespace

double CorrelationSeries::at(long lag) const {
  if (lag < first_lag || lag > last_lag()) throw std::out_of_range("lag outside correlation series");
  return values[static_cast<std::size_t>(lag - first_lag)];
}

CorrelationSeries autocorrelation(BitView bits, std::size_t max_lag) {
  if (max_lag < 1 || max_lag >= bits.size()) {
    throw ConfigError("autocorrelation: need 1 <= max_lag < sequence length");
  }
  CorrelationSeries out;
  out.values.assign(max_lag + 1, 0.0);
  out.values[0] = 1.0;
  if (is_constant(bits)) {
    out.degenerate = true;
    return out;
  }
  double energy = 0.0;
  const auto a = centred(bits, energy);
  for (std::size_t lag = 1; lag <= max_lag; ++lag) out.values[lag] = lagged_sum(a, a, lag) / energy;
  return out;
}

CorrelationSeries cross_correlation(BitView a_bits, BitView b_bits, std::size_t max_lag) {
  if (a_bits.size() != b_bits.size()) throw ConfigError("cross_correlation: sequences differ in length");
  if (max_lag < 1 || max_lag >= a_bits.size()) {
    throw ConfigError("cross_correlation: need 1 <= max_lag < sequence length");
  }
  CorrelationSeries out;
  out.first_lag = -static_cast<long>(max_lag);
  out.values.assign(2 * max_lag + 1, 0.0);
  if (is_constant(a_bits) || is_constant(b_bits)) {
    out.degenerate = true;
    return out;
  }
  double energy_a = 0.0;
  double energy_b = 0.0;
  const auto a = centred(a_bits, energy_a);
  const auto b = centred(b_bits, energy_b);
  const double norm = std::sqrt(energy_a * energy_b);
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    out.values[max_lag + lag] = lagged_sum(a, b, lag) / norm;
    if (lag != 0) out.values[max_lag - lag] = lagged_sum(b, a, lag) / norm;
  }
  return out;
}

std::string to_csv(const CorrelationSeries& series) {
  std::ostringstream out;
  out << "lag,value\n";
  char buf[40];
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", series.values[i]);
    out << series.first_lag + static_cast<long>(i) << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace ciprng::analysis
