#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ciprng/bits.hpp"

namespace ciprng::analysis {

struct PowerSpectrum {
  std::size_t length = 0;
  // |X_k|^2 / n for k = 0 .. n/2 of the +/-1 mapped sequence. With this
  // scaling a random sequence has unit expected power per bin.
  std::vector<double> power;
  // Largest non-DC bin divided by the mean non-DC bin.
  double flatness = 0.0;

  // Two-sided energy reconstructed from the half spectrum; equals n by
  // Parseval.
  double total_energy() const;
};

// Requires n >= 64.
PowerSpectrum power_spectrum(BitView bits);

// Flatness bound for an n-bit random sequence: the maximum of n/2 unit
// exponentials exceeds ln(n/2) + 5 with probability below 1%.
double flatness_bound(std::size_t n);

// "bin,power" with a header row.
std::string to_csv(const PowerSpectrum& spectrum);

}  // namespace ciprng::analysis
