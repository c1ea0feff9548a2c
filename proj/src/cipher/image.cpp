#include "ciprng/cipher/image.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "ciprng/errors.hpp"

namespace ciprng::cipher {

GrayscaleImage::GrayscaleImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) throw ConfigError("image dimensions must be positive");
  if (pixels_.size() != width_ * height_) throw ConfigError("pixel count does not match image dimensions");
}

GrayscaleImage::GrayscaleImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayscaleImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

namespace {

// Skips whitespace and '#'-to-end-of-line comments, then reads a decimal token.
std::size_t read_header_number(std::istream& in, const char* what) {
  int c = in.peek();
  while (c != EOF) {
    if (c == '#') {
      std::string ignored;
      std::getline(in, ignored);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
    c = in.peek();
  }
  if (c == EOF || !std::isdigit(c)) throw ConfigError(std::string("PGM: expected ") + what);
  std::size_t value = 0;
  while (std::isdigit(in.peek())) {
    value = value * 10 + static_cast<std::size_t>(in.get() - '0');
    if (value > (1u << 30)) throw ConfigError(std::string("PGM: ") + what + " too large");
  }
  return value;
}

}  // namespace

GrayscaleImage read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5') throw ConfigError("PGM: missing P5 magic");
  const std::size_t width = read_header_number(in, "width");
  const std::size_t height = read_header_number(in, "height");
  const std::size_t maxval = read_header_number(in, "maxval");
  if (maxval != 255) throw ConfigError("PGM: only maxval 255 is supported");
  if (!std::isspace(in.get())) throw ConfigError("PGM: expected whitespace after maxval");
  std::vector<std::uint8_t> pixels(width * height);
  in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != pixels.size()) throw ConfigError("PGM: truncated raster");
  return GrayscaleImage(width, height, std::move(pixels));
}

GrayscaleImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayscaleImage& image) {
  out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
  const auto px = image.pixels();
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

void write_pgm(const std::filesystem::path& path, const GrayscaleImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  write_pgm(out, image);
  if (!out) throw ConfigError("write failed: " + path.string());
}

}  // namespace ciprng::cipher
