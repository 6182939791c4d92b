#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqchain {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline constexpr std::size_t kHashSize = 32;
using Hash256 = std::array<std::uint8_t, kHashSize>;

std::string to_hex(ByteView bytes);

// Throws std::invalid_argument on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

inline void flip_bit(std::span<std::uint8_t> bytes, std::size_t bit_index) {
  bytes[bit_index / 8] ^= static_cast<std::uint8_t>(1u << (bit_index % 8));
}

}  // namespace pqchain
