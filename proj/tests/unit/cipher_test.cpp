#include <gtest/gtest.h>

#include <bit>
#include <filesystem>
#include <sstream>

#include "ciprng/cipher/cipher.hpp"
#include "ciprng/errors.hpp"

namespace ciprng::cipher {
namespace {

const std::filesystem::path kFixture = std::filesystem::path(CIPRNG_TEST_DATA_DIR) / "fixture.pgm";

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

GeneratorConfig default_key(std::uint64_t t = 484076) { return scheme_config("scheme-6", TimeSeed{t}); }

TEST(Pgm, ReadsFixtureWithComment) {
  const auto image = read_pgm(kFixture);
  EXPECT_EQ(image.width(), 128u);
  EXPECT_EQ(image.height(), 128u);
  const auto h = histogram(image);
  EXPECT_EQ(h.total(), 128u * 128u);
  EXPECT_EQ(h.bins[220], 914u);
  EXPECT_EQ(h.bins[15], 697u);
  EXPECT_EQ(h.bins[40], 0u);
  std::size_t distinct = 0;
  for (auto c : h.bins) distinct += c != 0;
  EXPECT_EQ(distinct, 123u);
}

TEST(Pgm, RoundTrip) {
  GrayscaleImage image(3, 2, {0, 1, 2, 253, 254, 255});
  std::stringstream buffer;
  write_pgm(buffer, image);
  EXPECT_EQ(buffer.str().rfind("P5\n3 2\n255\n", 0), 0u);
  EXPECT_EQ(read_pgm(buffer), image);

  std::istringstream spaced(std::string("P5 # c1\n3\n# c2\n 2 255\n") + std::string("\0\1\2\3\4\5", 6));
  EXPECT_EQ(read_pgm(spaced).at(2, 1), 5);
}

TEST(Pgm, RejectsMalformedInput) {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_pgm(in);
  };
  EXPECT_THROW(parse("P2\n1 1\n255\n0"), ConfigError);
  EXPECT_THROW(parse("P5\n1 1\n65535\n00"), ConfigError);
  EXPECT_THROW(parse("P5\n2 2\n255\nabc"), ConfigError);
  EXPECT_THROW(parse("P5\n0 2\n255\n"), ConfigError);
  EXPECT_THROW(parse("P5\nx 2\n255\n"), ConfigError);
  EXPECT_THROW(read_pgm(std::filesystem::path("/nonexistent/none.pgm")), ConfigError);
  EXPECT_THROW(GrayscaleImage(2, 2, std::vector<std::uint8_t>(3)), ConfigError);
}

TEST(Keystream, ForcedTranscriptBytes) {
  Generator g({1, 0, 1, 0, 0}, TranscriptDriver({2, 4, 2, 2, 5, 1, 1, 5, 5, 3, 2, 3, 3}, {4, 5, 4}));
  const auto bytes = keystream_bytes(g, 2);
  ASSERT_EQ(bytes.size(), 2u);
  EXPECT_EQ(bytes[0], 0xA7);
  EXPECT_EQ(bytes[1], 0xBF);
}

TEST(Keystream, FrozenHashes) {
  EXPECT_EQ(fnv1a64(keystream_bytes(default_key(), 4096)), 0xb9d3cea4b6b36ca6ULL);
  EXPECT_EQ(fnv1a64(keystream_bytes(default_key(), 1000000)), 0x3c60e2fb768cdf28ULL);
}

TEST(XorCipher, InvolutionAndZeroImage) {
  const auto image = read_pgm(kFixture);
  const auto encrypted = xor_cipher(image, default_key());
  EXPECT_NE(encrypted, image);
  EXPECT_EQ(xor_cipher(encrypted, default_key()), image);

  const GrayscaleImage zero(64, 64, 0);
  const auto key = keystream_bytes(default_key(), zero.size());
  const auto z = xor_cipher(zero, default_key());
  EXPECT_TRUE(std::equal(key.begin(), key.end(), z.pixels().begin()));
}

TEST(XorCipher, EncryptedHistogramIsFlat) {
  const auto image = read_pgm(kFixture);
  EXPECT_GT(chi_square_uniformity(histogram(image)), 10 * kChiSquare255Critical1Percent);
  const auto encrypted = xor_cipher(image, default_key());
  EXPECT_LT(chi_square_uniformity(histogram(encrypted)), kChiSquare255Critical1Percent);
}

TEST(XorCipher, KeySensitivity) {
  const auto image = read_pgm(kFixture);
  const auto a = xor_cipher(image, default_key(484076));
  const auto b = xor_cipher(image, default_key(484077));
  std::size_t differing_bits = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    differing_bits += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(a.pixels()[i] ^ b.pixels()[i])));
  }
  const double fraction = static_cast<double>(differing_bits) / (8.0 * static_cast<double>(a.size()));
  EXPECT_GT(fraction, 0.45);
  EXPECT_LT(fraction, 0.55);
}

TEST(Histogram, OracleAndCsv) {
  GrayscaleImage image(4, 1, {7, 7, 0, 255});
  const auto h = histogram(image);
  EXPECT_EQ(h.bins[7], 2u);
  EXPECT_EQ(h.bins[0], 1u);
  EXPECT_EQ(h.bins[255], 1u);
  // Expected 4/256 per bin.
  const double e = 4.0 / 256.0;
  const double chi2 = 253 * e + 2 * (1 - e) * (1 - e) / e + (2 - e) * (2 - e) / e;
  EXPECT_NEAR(chi_square_uniformity(h), chi2, 1e-9);
  const auto csv = to_csv(h);
  EXPECT_EQ(csv.rfind("value,count\n0,1\n1,0\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 257);
  EXPECT_THROW(chi_square_uniformity(Histogram{}), ConfigError);
}

}  // namespace
}  // namespace ciprng::cipher
