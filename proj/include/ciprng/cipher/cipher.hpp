#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ciprng/cipher/image.hpp"
#include "ciprng/config.hpp"
#include "ciprng/generator.hpp"

namespace ciprng::cipher {

// The first 8 * count bits of a fresh generator, packed MSB-first.
std::vector<std::uint8_t> keystream_bytes(const GeneratorConfig& config, std::size_t count);
// The next 8 * count bits of `generator`.
std::vector<std::uint8_t> keystream_bytes(Generator& generator, std::size_t count);

// One-time pad: pixel i (row-major) is XORed with keystream byte i. Applying
// it twice with the same config restores the image. Never reuse a config for
// two different images.
GrayscaleImage xor_cipher(const GrayscaleImage& image, const GeneratorConfig& config);

struct Histogram {
  std::array<std::uint64_t, 256> bins{};

  std::uint64_t total() const;
};

Histogram histogram(const GrayscaleImage& image);

// sum (b_i - n/256)^2 / (n/256). Throws ConfigError for an empty histogram.
double chi_square_uniformity(const Histogram& hist);

// 1% critical value of chi-square with 255 degrees of freedom.
inline constexpr double kChiSquare255Critical1Percent = 310.46;

// "value,count" with a header row, 256 data rows.
std::string to_csv(const Histogram& hist);

}  // namespace ciprng::cipher
