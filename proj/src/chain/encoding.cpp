#include "pqchain/chain/encoding.hpp"

#include <limits>
#include <string>

#include "pqchain/errors.hpp"

namespace pqchain {

void ByteWriter::u32(std::uint32_t value) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t value) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

void ByteWriter::raw(ByteView bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }

void ByteWriter::prefixed(ByteView bytes) {
  if (bytes.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw MalformedEncoding("byte string too long for a u32 length prefix");
  }
  u32(static_cast<std::uint32_t>(bytes.size()));
  raw(bytes);
}

ByteView ByteReader::raw(std::size_t count) {
  if (count > remaining()) {
    throw MalformedEncoding("need " + std::to_string(count) + " bytes at offset " +
                            std::to_string(pos_) + ", have " + std::to_string(remaining()));
  }
  ByteView out = input_.subspan(pos_, count);
  pos_ += count;
  return out;
}

std::uint32_t ByteReader::u32() {
  ByteView b = raw(4);
  std::uint32_t value = 0;
  for (int i = 3; i >= 0; --i) value = (value << 8) | b[static_cast<std::size_t>(i)];
  return value;
}

std::uint64_t ByteReader::u64() {
  ByteView b = raw(8);
  std::uint64_t value = 0;
  for (int i = 7; i >= 0; --i) value = (value << 8) | b[static_cast<std::size_t>(i)];
  return value;
}

Bytes ByteReader::prefixed() {
  const std::uint32_t len = u32();
  if (len > remaining()) {
    throw MalformedEncoding("length prefix " + std::to_string(len) + " exceeds the " +
                            std::to_string(remaining()) + " remaining bytes");
  }
  ByteView b = raw(len);
  return Bytes(b.begin(), b.end());
}

void ByteReader::expect_end() const {
  if (remaining() != 0) {
    throw MalformedEncoding(std::to_string(remaining()) + " trailing bytes");
  }
}

}  // namespace pqchain
