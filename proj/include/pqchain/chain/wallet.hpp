#pragma once

#include <cstdint>
#include <utility>

#include "pqchain/chain/transaction.hpp"
#include "pqchain/crypto/crypto.hpp"

namespace pqchain {

/// A key pair plus the sender nonce counter. Nonces run 0, 1, 2, ... with no
/// gaps; a failed signing does not consume one.
class Wallet {
 public:
  explicit Wallet(KeyPair keypair) : keypair_(std::move(keypair)) {}

  static Wallet generate(Crypto& crypto) { return Wallet(crypto.generate_keypair()); }

  const KeyPair& keypair() const { return keypair_; }
  const Bytes& public_key() const { return keypair_.public_key; }
  std::uint64_t next_nonce() const { return next_nonce_; }

  /// Builds and signs a transfer to recipient_pk. Throws KeyLengthMismatch if
  /// recipient_pk is not the scheme's public key size; propagates
  /// BackendFailure from signing.
  Transaction create_transaction(ByteView recipient_pk, std::uint64_t amount, Crypto& crypto);

 private:
  KeyPair keypair_;
  std::uint64_t next_nonce_ = 0;
};

}  // namespace pqchain
