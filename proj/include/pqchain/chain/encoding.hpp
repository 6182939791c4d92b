#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "pqchain/bytes.hpp"

namespace pqchain {

/// Appends little-endian integers and u32-length-prefixed byte strings.
class ByteWriter {
 public:
  ByteWriter() = default;
  explicit ByteWriter(std::size_t reserve) { out_.reserve(reserve); }

  void u32(std::uint32_t value);
  void u64(std::uint64_t value);
  void raw(ByteView bytes);
  // Throws MalformedEncoding if bytes does not fit a u32 length.
  void prefixed(ByteView bytes);

  // Keeps capacity, for reuse as a scratch buffer.
  void clear() { out_.clear(); }

  const Bytes& bytes() const& { return out_; }
  Bytes take() && { return std::move(out_); }

 private:
  Bytes out_;
};

/// Reads the ByteWriter encoding back. Every read throws MalformedEncoding
/// when the buffer is too short; a length prefix is checked against the
/// remaining bytes before anything is allocated.
class ByteReader {
 public:
  explicit ByteReader(ByteView input) : input_(input) {}

  std::uint32_t u32();
  std::uint64_t u64();
  ByteView raw(std::size_t count);
  Bytes prefixed();

  std::size_t remaining() const { return input_.size() - pos_; }
  std::size_t position() const { return pos_; }

  // Throws MalformedEncoding if any bytes are left over.
  void expect_end() const;

 private:
  ByteView input_;
  std::size_t pos_ = 0;
};

}  // namespace pqchain
