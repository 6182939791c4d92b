#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pqchain/chain/block.hpp"
#include "pqchain/crypto/crypto.hpp"

namespace pqchain {

enum class ValidationStatus { Ok, BadLinkage, BadBlockHash, BadSignature };

/// Outcome of validate_block: Ok or the first check that failed.
struct ValidationResult {
  ValidationStatus status = ValidationStatus::Ok;
  // Index of the offending transaction; meaningful for BadSignature only.
  std::size_t tx_index = 0;

  bool ok() const { return status == ValidationStatus::Ok; }

  static ValidationResult accepted() { return {}; }
  static ValidationResult bad_linkage() { return {ValidationStatus::BadLinkage, 0}; }
  static ValidationResult bad_block_hash() { return {ValidationStatus::BadBlockHash, 0}; }
  static ValidationResult bad_signature(std::size_t i) { return {ValidationStatus::BadSignature, i}; }

  friend bool operator==(const ValidationResult&, const ValidationResult&) = default;
};

std::string to_string(const ValidationResult& result);

/// In-memory chain anchored at the fixed genesis block and bound to one
/// signature scheme.
class Blockchain {
 public:
  explicit Blockchain(std::shared_ptr<const Crypto> crypto);

  const Crypto& crypto() const { return *crypto_; }
  std::span<const Block> blocks() const { return blocks_; }
  const Block& genesis() const { return blocks_.front(); }
  const Block& tip() const { return blocks_.back(); }
  std::size_t height() const { return blocks_.size(); }

  /// A block on top of the tip holding txs in order, stamped with the current
  /// wall clock. It is not appended.
  Block create_block(std::vector<Transaction> txs) const;

  /// Runs, in order: (i) index and prev_hash link to the tip; (ii) the stored
  /// hash matches a recomputation; (iii) every transaction signature verifies
  /// under its sender key. Reports the first failure.
  ValidationResult validate_block(const Block& block) const;

  /// Appends block only if it validates.
  ValidationResult append_block(Block block);

 private:
  std::shared_ptr<const Crypto> crypto_;
  std::vector<Block> blocks_;
};

std::uint64_t now_micros();

}  // namespace pqchain
