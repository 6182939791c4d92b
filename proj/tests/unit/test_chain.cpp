#include <doctest.h>

#include <memory>
#include <random>

#include "pqchain/chain/blockchain.hpp"
#include "pqchain/chain/wallet.hpp"
#include "pqchain/errors.hpp"
#include "test_support.hpp"

using namespace pqchain;

namespace {

struct Fixture {
  std::shared_ptr<Crypto> crypto;
  Blockchain chain;
  Wallet alice;
  Wallet bob;

  explicit Fixture(const AlgoConfig& scheme = AlgoConfig(Family::MlDsa, "44"))
      : crypto(create_crypto(scheme)),
        chain(crypto),
        alice(Wallet::generate(*crypto)),
        bob(Wallet::generate(*crypto)) {}

  std::vector<Transaction> transfers(std::size_t n, std::uint64_t amount = 1) {
    std::vector<Transaction> txs;
    for (std::size_t i = 0; i < n; ++i) {
      txs.push_back(alice.create_transaction(bob.public_key(), amount, *crypto));
    }
    return txs;
  }
};

}  // namespace

TEST_CASE("wallet nonces start at zero and never skip") {
  Fixture f;
  CHECK(f.alice.next_nonce() == 0);
  const Transaction first = f.alice.create_transaction(f.bob.public_key(), 5, *f.crypto);
  CHECK(first.nonce == 0);
  CHECK(first.amount == 5);
  CHECK(first.sender_pk == f.alice.public_key());
  CHECK(first.recipient_pk == f.bob.public_key());
  CHECK(verify_transaction(*f.crypto, first));
  CHECK(f.crypto->verify(serialize_transaction_body(first), first.signature, f.alice.public_key()));

  const auto txs = f.transfers(999);
  for (std::size_t i = 0; i < txs.size(); ++i) CHECK(txs[i].nonce == i + 1);
  CHECK(f.alice.next_nonce() == 1000);

  // Bad recipient key: rejected, nonce untouched.
  CHECK_THROWS_AS(f.alice.create_transaction(Bytes(10), 1, *f.crypto), KeyLengthMismatch);
  CHECK(f.alice.next_nonce() == 1000);
}

TEST_CASE("a fresh chain holds only the genesis block") {
  Fixture f;
  CHECK(f.chain.height() == 1);
  CHECK(f.chain.genesis() == make_genesis_block());
  CHECK(&f.chain.tip() == &f.chain.genesis());
}

TEST_CASE("create_block links to the tip and does not append") {
  Fixture f;
  const Block b = f.chain.create_block(f.transfers(3));
  CHECK(b.index == 1);
  CHECK(b.prev_hash == f.chain.genesis().hash);
  CHECK(b.hash == compute_block_hash(b));
  CHECK(b.transactions.size() == 3);
  CHECK(b.timestamp > 0);
  CHECK(f.chain.height() == 1);

  const Block empty = f.chain.create_block({});
  CHECK(serialize_block(empty).size() == 84);
  CHECK(f.chain.validate_block(empty).ok());
}

TEST_CASE("validate_block reports the first failing check") {
  Fixture f;
  const Block good = f.chain.create_block(f.transfers(4));
  CHECK(f.chain.validate_block(good) == ValidationResult::accepted());

  SUBCASE("signature bit flip with the hash re-sealed") {
    Block b = good;
    flip_bit(b.transactions[0].signature, 0);
    b.hash = compute_block_hash(b);
    CHECK(f.chain.validate_block(b) == ValidationResult::bad_signature(0));
    Block c = good;
    flip_bit(c.transactions[2].signature, 100);
    c.hash = compute_block_hash(c);
    CHECK(f.chain.validate_block(c) == ValidationResult::bad_signature(2));
  }
  SUBCASE("signature bit flip without re-sealing fails the hash check") {
    Block b = good;
    flip_bit(b.transactions[0].signature, 0);
    CHECK(f.chain.validate_block(b) == ValidationResult::bad_block_hash());
  }
  SUBCASE("stored hash corrupted") {
    Block b = good;
    b.hash[31] ^= 0x80;
    CHECK(f.chain.validate_block(b) == ValidationResult::bad_block_hash());
  }
  SUBCASE("wrong index") {
    Block b = good;
    b.index = 2;
    CHECK(f.chain.validate_block(b) == ValidationResult::bad_linkage());
  }
  SUBCASE("linkage is checked before the hash") {
    Block b = good;
    b.prev_hash[0] ^= 1;
    b.hash[0] ^= 1;
    CHECK(f.chain.validate_block(b) == ValidationResult::bad_linkage());
  }
  SUBCASE("sender key of the wrong length is a bad signature, not an exception") {
    Block b = good;
    b.transactions[1].sender_pk.pop_back();
    b.hash = compute_block_hash(b);
    CHECK(f.chain.validate_block(b) == ValidationResult::bad_signature(1));
  }
  SUBCASE("transaction re-signed by someone else") {
    Block b = good;
    Wallet mallory = Wallet::generate(*f.crypto);
    Transaction forged = mallory.create_transaction(f.bob.public_key(), 1, *f.crypto);
    b.transactions[3].signature = forged.signature;
    b.hash = compute_block_hash(b);
    CHECK(f.chain.validate_block(b) == ValidationResult::bad_signature(3));
  }
}

TEST_CASE("zero prev_hash on a two-block chain is a broken link") {
  Fixture f;
  REQUIRE(f.chain.append_block(f.chain.create_block(f.transfers(1))).ok());
  REQUIRE(f.chain.height() == 2);
  Block b = f.chain.create_block(f.transfers(1));
  b.prev_hash = Hash256{};
  b.hash = compute_block_hash(b);
  CHECK(f.chain.validate_block(b) == ValidationResult::bad_linkage());
}

TEST_CASE("property: appending only validated blocks keeps the chain linked") {
  Fixture f;
  std::mt19937_64 rng(21);
  for (int step = 0; step < 30; ++step) {
    Block b = f.chain.create_block(f.transfers(rng() % 3));
    switch (rng() % 4) {
      case 0:
        b.prev_hash[rng() % kHashSize] ^= 1;
        break;
      case 1:
        b.hash[rng() % kHashSize] ^= 1;
        break;
      case 2:
        if (!b.transactions.empty()) {
          flip_bit(b.transactions[0].signature, rng() % 64);
          b.hash = compute_block_hash(b);
        } else {
          b.index += 1;
        }
        break;
      default:
        break;  // untouched
    }
    const std::size_t before = f.chain.height();
    const ValidationResult r = f.chain.append_block(b);
    CHECK(f.chain.height() == before + (r.ok() ? 1 : 0));

    const auto blocks = f.chain.blocks();
    CHECK(blocks[0] == make_genesis_block());
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      CHECK(blocks[i].index == blocks[i - 1].index + 1);
      CHECK(blocks[i].prev_hash == blocks[i - 1].hash);
      CHECK(blocks[i].hash == compute_block_hash(blocks[i]));
    }
  }
}

TEST_CASE("property: every single-bit mutation of an accepted block is rejected") {
  Fixture f(AlgoConfig(Family::Falcon, "512"));
  const Block good = f.chain.create_block(f.transfers(3));
  REQUIRE(f.chain.validate_block(good).ok());
  const Bytes enc = serialize_block(good);

  auto rejected = [&](std::size_t bit) {
    Bytes mutated = enc;
    flip_bit(mutated, bit);
    try {
      return !f.chain.validate_block(deserialize_block(mutated)).ok();
    } catch (const MalformedEncoding&) {
      return true;
    }
  };

  // Exhaustive over header and trailing hash bytes.
  for (std::size_t byte = 0; byte < kBlockHeaderSize; ++byte) {
    for (std::size_t bit = 0; bit < 8; ++bit) CHECK(rejected(byte * 8 + bit));
  }
  for (std::size_t byte = enc.size() - kHashSize; byte < enc.size(); ++byte) {
    for (std::size_t bit = 0; bit < 8; ++bit) CHECK(rejected(byte * 8 + bit));
  }
  // Sampled over the transaction bytes.
  std::mt19937_64 rng(99);
  const std::size_t tx_bits = (enc.size() - kBlockOverhead) * 8;
  for (int i = 0; i < 1000; ++i) CHECK(rejected(kBlockHeaderSize * 8 + rng() % tx_bits));
}
