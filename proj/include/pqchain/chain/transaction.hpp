#pragma once

#include <cstddef>
#include <cstdint>

#include "pqchain/bytes.hpp"
#include "pqchain/crypto/crypto.hpp"

namespace pqchain {

class ByteWriter;
class ByteReader;

/// Account-model transfer from sender_pk to recipient_pk.
struct Transaction {
  Bytes sender_pk;
  Bytes recipient_pk;
  std::uint64_t amount = 0;
  std::uint64_t nonce = 0;
  // Detached signature over serialize_transaction_body().
  Bytes signature;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// Fixed framing bytes in a serialized transaction: three u32 length
/// prefixes plus the u64 amount and nonce.
inline constexpr std::size_t kTransactionOverhead = 3 * 4 + 2 * 8;

/// The signed message. Layout, integers little-endian:
///   [u32 len][sender_pk] [u32 len][recipient_pk] [u64 amount] [u64 nonce]
Bytes serialize_transaction_body(const Transaction& tx);

/// The body followed by [u32 len][signature].
Bytes serialize_transaction(const Transaction& tx);

std::size_t serialized_transaction_size(const Transaction& tx);

/// Exact inverse of serialize_transaction. Throws MalformedEncoding on
/// truncation, oversized length prefixes or trailing bytes.
Transaction deserialize_transaction(ByteView bytes);

void write_transaction(ByteWriter& out, const Transaction& tx);
Transaction read_transaction(ByteReader& in);

/// Checks the signature over the body under sender_pk. A sender key of the
/// wrong length counts as an invalid signature.
bool verify_transaction(const Crypto& crypto, const Transaction& tx);

}  // namespace pqchain
