#include "pqchain/chain/blockchain.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "pqchain/errors.hpp"

namespace pqchain {

std::string to_string(const ValidationResult& result) {
  switch (result.status) {
    case ValidationStatus::Ok:
      return "Ok";
    case ValidationStatus::BadLinkage:
      return "BadLinkage";
    case ValidationStatus::BadBlockHash:
      return "BadBlockHash";
    case ValidationStatus::BadSignature:
      return "BadSignature(" + std::to_string(result.tx_index) + ")";
  }
  return "?";
}

std::uint64_t now_micros() {
  using namespace std::chrono;
  return static_cast<std::uint64_t>(
      duration_cast<microseconds>(system_clock::now().time_since_epoch()).count());
}

Blockchain::Blockchain(std::shared_ptr<const Crypto> crypto) : crypto_(std::move(crypto)) {
  if (!crypto_) throw std::invalid_argument("Blockchain needs a crypto backend");
  blocks_.push_back(make_genesis_block());
}

Block Blockchain::create_block(std::vector<Transaction> txs) const {
  Block block;
  block.index = tip().index + 1;
  block.prev_hash = tip().hash;
  block.timestamp = now_micros();
  block.transactions = std::move(txs);
  block.hash = compute_block_hash(block);
  return block;
}

ValidationResult Blockchain::validate_block(const Block& block) const {
  const Block& last = tip();
  if (block.index != last.index + 1 || block.prev_hash != last.hash) {
    return ValidationResult::bad_linkage();
  }
  if (compute_block_hash(block) != block.hash) {
    return ValidationResult::bad_block_hash();
  }
  for (std::size_t i = 0; i < block.transactions.size(); ++i) {
    if (!verify_transaction(*crypto_, block.transactions[i])) {
      return ValidationResult::bad_signature(i);
    }
  }
  return ValidationResult::accepted();
}

ValidationResult Blockchain::append_block(Block block) {
  ValidationResult result = validate_block(block);
  if (result.ok()) blocks_.push_back(std::move(block));
  return result;
}

}  // namespace pqchain
