#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pqchain/bytes.hpp"
#include "pqchain/chain/transaction.hpp"

namespace pqchain {

struct Block {
  std::uint64_t index = 0;
  Hash256 prev_hash{};
  // Microseconds since the Unix epoch.
  std::uint64_t timestamp = 0;
  std::vector<Transaction> transactions;
  Hash256 hash{};

  friend bool operator==(const Block&, const Block&) = default;
};

/// [u64 index][u64 timestamp][prev_hash][u32 tx_count]
inline constexpr std::size_t kBlockHeaderSize = 8 + 8 + kHashSize + 4;

/// Serialized bytes beyond the transactions: the header plus the trailing hash.
inline constexpr std::size_t kBlockOverhead = kBlockHeaderSize + kHashSize;

/// SHA3-256 over the header followed by every serialized transaction,
/// signatures included. The hash field itself is not part of the preimage.
Hash256 compute_block_hash(const Block& block);

/// Header, transactions, then the 32-byte block hash.
Bytes serialize_block(const Block& block);

std::size_t serialized_block_size(const Block& block);

/// Throws MalformedEncoding on truncation, length-prefix overflow, a
/// transaction count the buffer cannot hold, or trailing bytes.
Block deserialize_block(ByteView bytes);

/// Index 0, zero prev_hash, timestamp 0, no transactions, hash computed.
Block make_genesis_block();

}  // namespace pqchain
