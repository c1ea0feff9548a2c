#include "ciprng/cipher/cipher.hpp"

#include <numeric>
#include <sstream>

#include "ciprng/errors.hpp"
#include "ciprng/generator.hpp"

namespace ciprng::cipher {

std::vector<std::uint8_t> keystream_bytes(const GeneratorConfig& config, std::size_t count) {
  return pack_bits(generate_bits(config, 8 * count));
}

std::vector<std::uint8_t> keystream_bytes(Generator& generator, std::size_t count) {
  return pack_bits(generator.read_bits(8 * count));
}

GrayscaleImage xor_cipher(const GrayscaleImage& image, const GeneratorConfig& config) {
  const auto key = keystream_bytes(config, image.size());
  GrayscaleImage out = image;
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) px[i] ^= key[i];
  return out;
}

std::uint64_t Histogram::total() const { return std::accumulate(bins.begin(), bins.end(), std::uint64_t{0}); }

Histogram histogram(const GrayscaleImage& image) {
  Histogram h;
  for (auto p : image.pixels()) ++h.bins[p];
  return h;
}

double chi_square_uniformity(const Histogram& hist) {
  const auto n = hist.total();
  if (n == 0) throw ConfigError("chi_square_uniformity: empty histogram");
  const double expected = static_cast<double>(n) / 256.0;
  double chi2 = 0.0;
  for (auto count : hist.bins) {
    const double diff = static_cast<double>(count) - expected;
    chi2 += diff * diff / expected;
  }
  return chi2;
}

std::string to_csv(const Histogram& hist) {
  std::ostringstream out;
  out << "value,count\n";
  for (std::size_t v = 0; v < hist.bins.size(); ++v) out << v << ',' << hist.bins[v] << '\n';
  return out.str();
}

}  // namespace ciprng::cipher
