#include "ciprng/bits.hpp"

#include <algorithm>

#include "ciprng/errors.hpp"

namespace ciprng {

std::vector<std::uint8_t> pack_bits(BitView bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return bytes;
}

BitSequence unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  if (bit_count > bytes.size() * 8) throw ConfigError("unpack_bits: not enough bytes");
  BitSequence bits(bit_count);
  for (std::size_t i = 0; i < bit_count; ++i) bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1u;
  return bits;
}

std::string to_ascii(BitView bits, std::size_t wrap) {
  std::string out;
  out.reserve(bits.size() + (wrap ? bits.size() / wrap : 0));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (wrap != 0 && i != 0 && i % wrap == 0) out.push_back('\n');
    out.push_back(bits[i] ? '1' : '0');
  }
  return out;
}

BitSequence from_ascii(std::string_view text) {
  BitSequence bits;
  bits.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': bits.push_back(0); break;
      case '1': bits.push_back(1); break;
      case ' ': case '\t': case '\n': case '\r': break;
      default: throw ConfigError(std::string("invalid bit character '") + c + "'");
    }
  }
  return bits;
}

std::size_t count_ones(BitView bits) {
  return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](auto b) { return b != 0; }));
}

}  // namespace ciprng
