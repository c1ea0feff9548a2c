#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ciprng/analysis/correlation.hpp"
#include "ciprng/config.hpp"
#include "ciprng/errors.hpp"
#include "ciprng/generator.hpp"

namespace ciprng::analysis {
namespace {

BitSequence random_bits(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitSequence bits(n);
  for (auto& b : bits) b = rng() & 1;
  return bits;
}

// Direct evaluation of the documented estimator.
double naive_autocorr(const BitSequence& bits, std::size_t lag) {
  const std::size_t n = bits.size();
  double mean = 0.0;
  for (auto b : bits) mean += b ? 1.0 : -1.0;
  mean /= static_cast<double>(n);
  double num = 0.0;
  double energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = (bits[i] ? 1.0 : -1.0) - mean;
    energy += a * a;
    if (i + lag < n) num += a * ((bits[i + lag] ? 1.0 : -1.0) - mean);
  }
  return num / energy;
}

TEST(Autocorrelation, Examples) {
  BitSequence alt(1000);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2;
  const auto r = autocorrelation(alt, 4);
  EXPECT_EQ(r.first_lag, 0);
  EXPECT_EQ(r.last_lag(), 4);
  EXPECT_DOUBLE_EQ(r.at(0), 1.0);
  EXPECT_NEAR(r.at(1), -999.0 / 1000.0, 1e-12);
  EXPECT_NEAR(r.at(2), 998.0 / 1000.0, 1e-12);
  EXPECT_FALSE(r.degenerate);
  EXPECT_THROW(r.at(5), std::out_of_range);
}

TEST(Autocorrelation, ConstantIsDegenerate) {
  const auto r = autocorrelation(BitSequence(100, 1), 3);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.at(0), 1.0);
  EXPECT_EQ(r.at(3), 0.0);
}

TEST(Autocorrelation, MatchesNaiveEstimatorProperty) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto bits = random_bits(500 + seed * 37, seed);
    const auto r = autocorrelation(bits, 40);
    for (long lag = 0; lag <= 40; ++lag) {
      EXPECT_NEAR(r.at(lag), naive_autocorr(bits, static_cast<std::size_t>(lag)), 1e-12);
      EXPECT_LE(std::fabs(r.at(lag)), 1.0 + 1e-12);
    }
  }
}

TEST(Autocorrelation, GeneratorOutputIsUncorrelated) {
  const std::size_t n = 100000;
  const auto bits = generate_bits(scheme_config("scheme-6", TimeSeed{484076}), n);
  const auto r = autocorrelation(bits, 1000);
  const double bound = 4.0 / std::sqrt(static_cast<double>(n));
  for (long lag = 1; lag <= 1000; ++lag) EXPECT_LT(std::fabs(r.at(lag)), bound) << lag;
}

TEST(Autocorrelation, Errors) {
  EXPECT_THROW(autocorrelation(BitSequence(10, 1), 0), ConfigError);
  EXPECT_THROW(autocorrelation(BitSequence(10, 1), 10), ConfigError);
}

TEST(CrossCorrelation, SelfAndShift) {
  const auto a = random_bits(2000, 11);
  const auto self = cross_correlation(a, a, 10);
  EXPECT_EQ(self.first_lag, -10);
  EXPECT_EQ(self.last_lag(), 10);
  EXPECT_NEAR(self.at(0), 1.0, 1e-12);
  const auto auto_r = autocorrelation(a, 10);
  for (long lag = 1; lag <= 10; ++lag) {
    EXPECT_NEAR(self.at(lag), auto_r.at(lag), 1e-12);
    EXPECT_NEAR(self.at(-lag), auto_r.at(lag), 1e-12);
  }

  // b is a delayed by 3: a_i pairs with b_{i+3}.
  BitSequence b(a.size(), 0);
  for (std::size_t i = 0; i + 3 < a.size(); ++i) b[i + 3] = a[i];
  EXPECT_GT(cross_correlation(a, b, 5).at(3), 0.95);

  BitSequence inverted = a;
  for (auto& bit : inverted) bit ^= 1;
  EXPECT_NEAR(cross_correlation(a, inverted, 2).at(0), -1.0, 1e-12);
}

TEST(CrossCorrelation, NearbySeedsAreUncorrelated) {
  const std::size_t n = 100000;
  const auto a = generate_bits(scheme_config("scheme-6", TimeSeed{484076}), n);
  const auto b = generate_bits(scheme_config("scheme-6", TimeSeed{484077}), n);
  const auto r = cross_correlation(a, b, 200);
  const double bound = 4.0 / std::sqrt(static_cast<double>(n));
  for (long lag = -200; lag <= 200; ++lag) EXPECT_LT(std::fabs(r.at(lag)), bound) << lag;
}

TEST(CrossCorrelation, ErrorsAndDegenerate) {
  EXPECT_THROW(cross_correlation(BitSequence(10, 1), BitSequence(11, 1), 2), ConfigError);
  const auto r = cross_correlation(BitSequence(10, 1), random_bits(10, 1), 2);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.at(0), 0.0);
}

TEST(CorrelationCsv, Layout) {
  BitSequence alt(10);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2;
  const auto csv = to_csv(autocorrelation(alt, 2));
  EXPECT_EQ(csv.rfind("lag,value\n0,1\n1,", 0), 0u);
}

}  // namespace
}  // namespace ciprng::analysis
