#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace ciprng::cipher {

// 8-bit grayscale raster, row-major.
class GrayscaleImage {
 public:
  // Throws ConfigError for a zero dimension or a pixel count mismatch.
  GrayscaleImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
  GrayscaleImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }
  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }
  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }

  friend bool operator==(const GrayscaleImage&, const GrayscaleImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

// Binary PGM (P5) with maxval 255. Header tokens may be separated by any
// whitespace and interleaved with '#' comment lines; exactly one whitespace
// byte separates maxval from the raster.
GrayscaleImage read_pgm(std::istream& in);
GrayscaleImage read_pgm(const std::filesystem::path& path);
void write_pgm(std::ostream& out, const GrayscaleImage& image);
void write_pgm(const std::filesystem::path& path, const GrayscaleImage& image);

}  // namespace ciprng::cipher
