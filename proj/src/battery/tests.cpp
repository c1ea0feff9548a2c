#include "ciprng/battery/tests.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "../fft.hpp"
#include "ciprng/battery/special_functions.hpp"
#include "ciprng/errors.hpp"

namespace ciprng::battery {

namespace {

void require_length(std::string_view test, std::size_t n, std::size_t strict_min, std::size_t relaxed_min,
                    const TestOptions& options) {
  const std::size_t min = options.relaxed ? relaxed_min : strict_min;
  if (n < min) {
    throw ConfigError(std::string(test) + ": sequence of " + std::to_string(n) + " bits is too short (need " +
                      std::to_string(min) + (options.relaxed ? ")" : "; --relaxed lowers this)"));
  }
}

double clamp_p(double p) {
  if (std::isnan(p)) return 0.0;
  return std::clamp(p, 0.0, 1.0);
}

// Counts of every overlapping `width`-bit pattern, reading cyclically.
std::vector<std::uint64_t> cyclic_pattern_counts(BitView bits, unsigned width) {
  std::vector<std::uint64_t> counts(std::size_t{1} << width, 0);
  if (width == 0) {
    counts[0] = bits.size();
    return counts;
  }
  const std::size_t n = bits.size();
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  std::uint64_t window = 0;
  for (unsigned i = 0; i + 1 < width; ++i) window = (window << 1) | bits[i % n];
  for (std::size_t i = 0; i < n; ++i) {
    window = ((window << 1) | bits[(i + width - 1) % n]) & mask;
    ++counts[window];
  }
  return counts;
}

double psi_squared(BitView bits, unsigned width) {
  if (width == 0) return 0.0;
  const auto counts = cyclic_pattern_counts(bits, width);
  const double n = static_cast<double>(bits.size());
  double sum = 0.0;
  for (auto c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
  return sum * std::ldexp(1.0, static_cast<int>(width)) / n - n;
}

double entropy_phi(BitView bits, unsigned width) {
  const auto counts = cyclic_pattern_counts(bits, width);
  const double n = static_cast<double>(bits.size());
  double phi = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    phi += p * std::log(p);
  }
  return phi;
}

int floor_log2(std::size_t n) {
  int k = -1;
  while (n != 0) {
    n >>= 1;
    ++k;
  }
  return k;
}

}  // namespace

TestResult frequency_monobit(BitView bits, const TestOptions& options) {
  require_length("frequency", bits.size(), 100, 1, options);
  const double n = static_cast<double>(bits.size());
  const double ones = static_cast<double>(count_ones(bits));
  const double s_obs = std::fabs(2.0 * ones - n) / std::sqrt(n);
  TestResult r{"frequency", s_obs, clamp_p(erfc(s_obs / std::sqrt(2.0))), {{"n", n}}};
  return r;
}

TestResult block_frequency(BitView bits, std::size_t block_len, const TestOptions& options) {
  if (block_len < 20) throw ConfigError("block_frequency: block length must be at least 20");
  const std::size_t blocks = bits.size() / block_len;
  if (blocks < 1) throw ConfigError("block_frequency: sequence shorter than one block");
  require_length("block_frequency", bits.size(), 100, 20, options);
  double chi2 = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto block = bits.subspan(b * block_len, block_len);
    const double pi = static_cast<double>(count_ones(block)) / static_cast<double>(block_len);
    chi2 += (pi - 0.5) * (pi - 0.5);
  }
  chi2 *= 4.0 * static_cast<double>(block_len);
  const double p = gamma_q(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
  return {"block_frequency", chi2, clamp_p(p),
          {{"M", static_cast<double>(block_len)}, {"blocks", static_cast<double>(blocks)}}};
}

TestResult runs_test(BitView bits, const TestOptions& options) {
  require_length("runs", bits.size(), 100, 2, options);
  const double n = static_cast<double>(bits.size());
  const double pi = static_cast<double>(count_ones(bits)) / n;
  TestResult r{"runs", 0.0, 0.0, {{"n", n}, {"pi", pi}, {"gate_failed", 0.0}}};
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n)) {
    r.params["gate_failed"] = 1.0;
    return r;
  }
  std::size_t runs = 1;
  for (std::size_t k = 0; k + 1 < bits.size(); ++k) runs += bits[k] != bits[k + 1];
  const double v_obs = static_cast<double>(runs);
  const double spread = pi * (1.0 - pi);
  r.statistic = v_obs;
  r.p_value = clamp_p(erfc(std::fabs(v_obs - 2.0 * n * spread) / (2.0 * std::sqrt(2.0 * n) * spread)));
  return r;
}

TestResult longest_run(BitView bits, const TestOptions& options) {
  (void)options;
  const std::size_t n = bits.size();
  if (n < 128) throw ConfigError("longest_run: need at least 128 bits");

  std::size_t block = 0;
  unsigned lowest = 0;  // run lengths <= lowest share the first class
  std::vector<double> pi;
  if (n < 6272) {
    block = 8;
    lowest = 1;
    pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
  } else if (n < 750000) {
    block = 128;
    lowest = 4;
    pi = {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847};
  } else {
    block = 10000;
    lowest = 10;
    pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }
  const std::size_t classes = pi.size();
  const std::size_t blocks = n / block;
  std::vector<double> observed(classes, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    unsigned longest = 0;
    unsigned current = 0;
    for (std::size_t i = b * block; i < (b + 1) * block; ++i) {
      current = bits[i] ? current + 1 : 0;
      longest = std::max(longest, current);
    }
    const std::size_t cls =
        longest <= lowest ? 0 : std::min<std::size_t>(longest - lowest, classes - 1);
    observed[cls] += 1.0;
  }
  double chi2 = 0.0;
  for (std::size_t i = 0; i < classes; ++i) {
    const double expected = static_cast<double>(blocks) * pi[i];
    chi2 += (observed[i] - expected) * (observed[i] - expected) / expected;
  }
  const double k = static_cast<double>(classes - 1);
  return {"longest_run", chi2, clamp_p(gamma_q(k / 2.0, chi2 / 2.0)),
          {{"M", static_cast<double>(block)}, {"K", k}, {"blocks", static_cast<double>(blocks)}}};
}

TestResult spectral_dft(BitView bits, const TestOptions& options) {
  require_length("fft", bits.size(), 1000, 8, options);
  const std::size_t n = bits.size();
  std::vector<double> signal(n);
  std::transform(bits.begin(), bits.end(), signal.begin(), [](auto b) { return b ? 1.0 : -1.0; });
  const auto spectrum = detail::real_dft(signal);

  const double nd = static_cast<double>(n);
  const double threshold = std::sqrt(std::log(1.0 / 0.05) * nd);
  std::size_t below = 0;
  for (std::size_t k = 0; k < n / 2; ++k) below += std::abs(spectrum[k]) < threshold;
  const double expected = 0.95 * nd / 2.0;
  const double d = (static_cast<double>(below) - expected) / std::sqrt(nd * 0.95 * 0.05 / 4.0);
  return {"fft", d, clamp_p(erfc(std::fabs(d) / std::sqrt(2.0))),
          {{"n", nd}, {"N0", expected}, {"N1", static_cast<double>(below)}, {"threshold", threshold}}};
}

namespace {

TestResult cusum_one(BitView bits, bool forward) {
  const auto n = static_cast<std::int64_t>(bits.size());
  std::int64_t sum = 0;
  std::int64_t z = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto bit = bits[static_cast<std::size_t>(forward ? i : n - 1 - i)];
    sum += bit ? 1 : -1;
    z = std::max(z, sum < 0 ? -sum : sum);
  }
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double zd = static_cast<double>(z);
  const std::int64_t ratio = n / z;

  double sum1 = 0.0;
  for (std::int64_t k = (-ratio + 1) / 4; k <= (ratio - 1) / 4; ++k) {
    sum1 += normal_cdf(static_cast<double>(4 * k + 1) * zd / sqrt_n) -
            normal_cdf(static_cast<double>(4 * k - 1) * zd / sqrt_n);
  }
  double sum2 = 0.0;
  for (std::int64_t k = (-ratio - 3) / 4; k <= (ratio - 1) / 4; ++k) {
    sum2 += normal_cdf(static_cast<double>(4 * k + 3) * zd / sqrt_n) -
            normal_cdf(static_cast<double>(4 * k + 1) * zd / sqrt_n);
  }
  return {"cumulative_sums", zd, clamp_p(1.0 - sum1 + sum2),
          {{"forward", forward ? 1.0 : 0.0}, {"n", static_cast<double>(n)}}};
}

}  // namespace

std::pair<TestResult, TestResult> cumulative_sums(BitView bits, const TestOptions& options) {
  require_length("cumulative_sums", bits.size(), 100, 1, options);
  return {cusum_one(bits, true), cusum_one(bits, false)};
}

std::pair<TestResult, TestResult> serial(BitView bits, unsigned m, const TestOptions& options) {
  if (m < 2 || m > 24) throw ConfigError("serial: pattern length must be in [2, 24]");
  const std::size_t n = bits.size();
  if (n < m) throw ConfigError("serial: sequence shorter than the pattern length");
  if (!options.relaxed && static_cast<int>(m) >= floor_log2(n) - 2) {
    throw ConfigError("serial: m must be below floor(log2 n) - 2 (--relaxed lowers this)");
  }
  const double psi_m = psi_squared(bits, m);
  const double psi_m1 = psi_squared(bits, m - 1);
  const double psi_m2 = psi_squared(bits, m - 2);
  const double del1 = psi_m - psi_m1;
  const double del2 = psi_m - 2.0 * psi_m1 + psi_m2;
  const double md = static_cast<double>(m);
  TestResult first{"serial", del1,
                   clamp_p(gamma_q(std::ldexp(1.0, static_cast<int>(m) - 2), del1 / 2.0)),
                   {{"m", md}, {"difference", 1.0}}};
  TestResult second{"serial", del2,
                    clamp_p(gamma_q(std::ldexp(1.0, static_cast<int>(m) - 3), del2 / 2.0)),
                    {{"m", md}, {"difference", 2.0}}};
  return {first, second};
}

TestResult approximate_entropy(BitView bits, unsigned m, const TestOptions& options) {
  if (m < 1 || m > 23) throw ConfigError("approximate_entropy: pattern length must be in [1, 23]");
  const std::size_t n = bits.size();
  if (n < m + 1) throw ConfigError("approximate_entropy: sequence shorter than m + 1");
  if (!options.relaxed && static_cast<int>(m) >= floor_log2(n) - 5) {
    throw ConfigError("approximate_entropy: m must be below floor(log2 n) - 5 (--relaxed lowers this)");
  }
  const double apen = entropy_phi(bits, m) - entropy_phi(bits, m + 1);
  const double chi2 = 2.0 * static_cast<double>(n) * (std::log(2.0) - apen);
  const double p = gamma_q(std::ldexp(1.0, static_cast<int>(m) - 1), chi2 / 2.0);
  return {"approximate_entropy", chi2, clamp_p(p), {{"m", static_cast<double>(m)}, {"apen", apen}}};
}

}  // namespace ciprng::battery
