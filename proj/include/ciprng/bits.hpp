#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ciprng {

// One bit per element, each element 0 or 1. Used for both cell states and
// emitted bitstreams.
using BitSequence = std::vector<std::uint8_t>;
using BitView = std::span<const std::uint8_t>;

// Packs bits MSB-first: bit 0 lands in the most significant position of
// byte 0. A trailing partial byte is zero-padded in its low bits.
std::vector<std::uint8_t> pack_bits(BitView bits);

// Inverse of pack_bits for the first `bit_count` bits of `bytes`.
BitSequence unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_count);

// '0'/'1' characters. `wrap` > 0 inserts a newline after every `wrap`
// characters; a final newline is never added.
std::string to_ascii(BitView bits, std::size_t wrap = 0);

// Parses '0'/'1' characters, skipping ASCII whitespace. Throws ConfigError on
// any other character.
BitSequence from_ascii(std::string_view text);

std::size_t count_ones(BitView bits);

}  // namespace ciprng
