#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ciprng::detail {

// Forward DFT of a real sequence, X_k = sum_j x_j exp(-2 pi i j k / n), for
// k = 0 .. n/2 (the non-redundant half). Any length n >= 1.
std::vector<std::complex<double>> real_dft(std::span<const double> input);

}  // namespace ciprng::detail
