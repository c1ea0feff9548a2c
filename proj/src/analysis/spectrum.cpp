#include "ciprng/analysis/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "../fft.hpp"
#include "ciprng/errors.hpp"

namespace ciprng::analysis {

double PowerSpectrum::total_energy() const {
  double total = 0.0;
  for (std::size_t k = 0; k < power.size(); ++k) {
    const bool unpaired = k == 0 || (length % 2 == 0 && k == length / 2);
    total += unpaired ? power[k] : 2.0 * power[k];
  }
  return total;
}

PowerSpectrum power_spectrum(BitView bits) {
  if (bits.size() < 64) throw ConfigError("power_spectrum: need at least 64 bits");
  const std::size_t n = bits.size();
  std::vector<double> signal(n);
  std::transform(bits.begin(), bits.end(), signal.begin(), [](auto b) { return b ? 1.0 : -1.0; });
  const auto dft = detail::real_dft(signal);

  PowerSpectrum out;
  out.length = n;
  out.power.resize(dft.size());
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < dft.size(); ++k) out.power[k] = std::norm(dft[k]) * scale;

  double peak = 0.0;
  double sum = 0.0;
  for (std::size_t k = 1; k < out.power.size(); ++k) {
    peak = std::max(peak, out.power[k]);
    sum += out.power[k];
  }
  const double mean = sum / static_cast<double>(out.power.size() - 1);
  out.flatness = mean > 0.0 ? peak / mean : 0.0;
  return out;
}

double flatness_bound(std::size_t n) { return std::log(static_cast<double>(n) / 2.0) + 5.0; }

std::string to_csv(const PowerSpectrum& spectrum) {
  std::ostringstream out;
  out << "bin,power\n";
  char buf[40];
  for (std::size_t k = 0; k < spectrum.power.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", spectrum.power[k]);
    out << k << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace ciprng::analysis
