#include <doctest.h>

#include <random>
#include <set>

#include "pqchain/chain/block.hpp"
#include "pqchain/chain/encoding.hpp"
#include "pqchain/chain/sha3.hpp"
#include "pqchain/chain/transaction.hpp"
#include "pqchain/errors.hpp"
#include "test_support.hpp"

using namespace pqchain;
using pqchain::testing::random_bytes;
using pqchain::testing::read_fixture;

namespace {

// Layout oracle, assembled byte by byte.
void push_le(Bytes& out, std::uint64_t v, int width) {
  for (int i = 0; i < width; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}
void push_prefixed(Bytes& out, const Bytes& b) {
  push_le(out, b.size(), 4);
  out.insert(out.end(), b.begin(), b.end());
}
Bytes oracle_body(const Transaction& tx) {
  Bytes out;
  push_prefixed(out, tx.sender_pk);
  push_prefixed(out, tx.recipient_pk);
  push_le(out, tx.amount, 8);
  push_le(out, tx.nonce, 8);
  return out;
}
Bytes oracle_tx(const Transaction& tx) {
  Bytes out = oracle_body(tx);
  push_prefixed(out, tx.signature);
  return out;
}
Bytes oracle_block(const Block& b) {
  Bytes out;
  push_le(out, b.index, 8);
  push_le(out, b.timestamp, 8);
  out.insert(out.end(), b.prev_hash.begin(), b.prev_hash.end());
  push_le(out, b.transactions.size(), 4);
  for (const auto& tx : b.transactions) {
    const Bytes t = oracle_tx(tx);
    out.insert(out.end(), t.begin(), t.end());
  }
  out.insert(out.end(), b.hash.begin(), b.hash.end());
  return out;
}

Transaction random_tx(std::mt19937_64& rng, std::size_t pk_len, std::size_t sig_len) {
  Transaction tx;
  tx.sender_pk = random_bytes(rng, pk_len);
  tx.recipient_pk = random_bytes(rng, pk_len);
  tx.amount = rng();
  tx.nonce = rng();
  tx.signature = random_bytes(rng, sig_len);
  return tx;
}

Block random_block(std::mt19937_64& rng, std::size_t n_tx) {
  Block b;
  b.index = rng();
  b.timestamp = rng();
  const Bytes ph = random_bytes(rng, kHashSize);
  std::copy(ph.begin(), ph.end(), b.prev_hash.begin());
  for (std::size_t i = 0; i < n_tx; ++i) {
    b.transactions.push_back(random_tx(rng, 1 + rng() % 64, 1 + rng() % 96));
  }
  b.hash = compute_block_hash(b);
  return b;
}

}  // namespace

TEST_CASE("SHA3-256 matches the NIST vectors") {
  CHECK(to_hex(sha3_256(Bytes{})) ==
        "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
  const std::string abc = "abc";
  CHECK(to_hex(sha3_256(Bytes(abc.begin(), abc.end()))) ==
        "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
  // Incremental absorption in uneven pieces gives the one-shot digest.
  Sha3_256 hasher;
  const Bytes a(200, 'a');
  hasher.update(ByteView(a).first(1));
  hasher.update(ByteView(a).subspan(1, 135));
  hasher.update(ByteView(a).subspan(136));
  CHECK(to_hex(hasher.finish()) ==
        "cce34485baf2bf2aca99b94833892a4f52896d3d153f7b840cc4f9fe695f1387");
}

TEST_CASE("hex helpers") {
  CHECK(to_hex(Bytes{0x00, 0xab, 0xff}) == "00abff");
  CHECK(from_hex("00ABff") == Bytes{0x00, 0xab, 0xff});
  CHECK_THROWS_AS(from_hex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("zz"), std::invalid_argument);
}

TEST_CASE("transaction body layout") {
  std::mt19937_64 rng(1);
  Transaction tx = random_tx(rng, 1312, 2420);
  const Bytes body = serialize_transaction_body(tx);
  CHECK(body.size() == 2 * 4 + 2 * 1312 + 8 + 8);
  CHECK(body.size() == 2648);
  CHECK(body == oracle_body(tx));
  CHECK(serialize_transaction_body(tx) == body);

  Transaction other = tx;
  other.nonce ^= 0x0102030405060708ull;
  const Bytes other_body = serialize_transaction_body(other);
  REQUIRE(other_body.size() == body.size());
  const std::size_t nonce_at = body.size() - 8;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i < nonce_at) {
      CHECK(body[i] == other_body[i]);
    } else {
      CHECK(body[i] != other_body[i]);
    }
  }
  // Signature is not part of the body.
  other = tx;
  other.signature.clear();
  CHECK(serialize_transaction_body(other) == body);
}

TEST_CASE("full transaction encoding sizes") {
  std::mt19937_64 rng(2);
  const Transaction mldsa44 = random_tx(rng, 1312, 2420);
  CHECK(serialize_transaction(mldsa44).size() == 5072);
  CHECK(serialized_transaction_size(mldsa44) == 5072);
  CHECK(serialize_transaction(mldsa44) == oracle_tx(mldsa44));
  const Transaction hawk512 = random_tx(rng, 1024, 555);
  CHECK(serialize_transaction(hawk512).size() == 2631);
  CHECK(kTransactionOverhead == 28);
}

TEST_CASE("transaction decoding") {
  std::mt19937_64 rng(3);
  const Transaction tx = random_tx(rng, 897, 655);
  const Bytes bytes = serialize_transaction(tx);
  CHECK(deserialize_transaction(bytes) == tx);

  SUBCASE("truncated by one byte") {
    CHECK_THROWS_AS(deserialize_transaction(ByteView(bytes).first(bytes.size() - 1)),
                    MalformedEncoding);
  }
  SUBCASE("trailing byte") {
    Bytes longer = bytes;
    longer.push_back(0);
    CHECK_THROWS_AS(deserialize_transaction(longer), MalformedEncoding);
  }
  SUBCASE("huge length prefix on a small buffer") {
    Bytes evil(100, 0);
    evil[0] = 0x00;
    evil[1] = 0x00;
    evil[2] = 0x00;
    evil[3] = 0x80;  // 2^31
    CHECK_THROWS_AS(deserialize_transaction(evil), MalformedEncoding);
    evil[3] = 0xff;
    evil[2] = 0xff;
    evil[1] = 0xff;
    evil[0] = 0xff;
    CHECK_THROWS_AS(deserialize_transaction(evil), MalformedEncoding);
  }
  SUBCASE("every strict prefix is rejected") {
    for (std::size_t n = 0; n < bytes.size(); n += 37) {
      CHECK_THROWS_AS(deserialize_transaction(ByteView(bytes).first(n)), MalformedEncoding);
    }
  }
}

TEST_CASE("property: transaction roundtrip and injectivity") {
  std::mt19937_64 rng(4);
  std::set<Bytes> encodings;
  std::vector<Transaction> seen;
  for (int i = 0; i < 500; ++i) {
    Transaction tx = random_tx(rng, rng() % 40, rng() % 40);
    // Small value ranges so that near-collisions actually occur.
    tx.amount = rng() % 4;
    tx.nonce = rng() % 4;
    const Bytes enc = serialize_transaction(tx);
    CHECK(deserialize_transaction(enc) == tx);
    const bool fresh = encodings.insert(enc).second;
    const bool duplicate_value = std::find(seen.begin(), seen.end(), tx) != seen.end();
    CHECK(fresh != duplicate_value);
    seen.push_back(tx);
  }
  // Shifting bytes between adjacent fields changes the encoding.
  Transaction a{Bytes{1, 2}, Bytes{3}, 0, 0, Bytes{}};
  Transaction b{Bytes{1}, Bytes{2, 3}, 0, 0, Bytes{}};
  CHECK(serialize_transaction(a) != serialize_transaction(b));
}

TEST_CASE("genesis block matches the golden vector") {
  const Block g = make_genesis_block();
  CHECK(g.index == 0);
  CHECK(g.timestamp == 0);
  CHECK(g.prev_hash == Hash256{});
  CHECK(g.transactions.empty());
  CHECK(to_hex(g.hash) == read_fixture("genesis_hash.hex"));
  // Equal to SHA3-256 of the 52-byte all-zero header.
  CHECK(g.hash == sha3_256(Bytes(kBlockHeaderSize, 0)));
}

TEST_CASE("block hash is deterministic and covers signatures") {
  std::mt19937_64 rng(5);
  Block b = random_block(rng, 6);
  CHECK(compute_block_hash(b) == compute_block_hash(b));
  CHECK(compute_block_hash(b) == b.hash);
  // Stored hash is not part of the preimage.
  Block c = b;
  c.hash[0] ^= 1;
  CHECK(compute_block_hash(c) == b.hash);

  for (std::size_t t = 0; t < b.transactions.size(); ++t) {
    Block m = b;
    flip_bit(m.transactions[t].signature, rng() % (8 * m.transactions[t].signature.size()));
    CHECK(compute_block_hash(m) != b.hash);
  }
  // Preimage is header || serialized transactions.
  Bytes preimage = oracle_block(b);
  preimage.resize(preimage.size() - kHashSize);
  CHECK(sha3_256(preimage) == b.hash);
}

TEST_CASE("block serialization") {
  std::mt19937_64 rng(6);
  CHECK(kBlockOverhead == 84);
  Block empty = make_genesis_block();
  const Bytes e = serialize_block(empty);
  CHECK(e.size() == 84);
  CHECK(deserialize_block(e) == empty);

  Block b = random_block(rng, 9);
  const Bytes bytes = serialize_block(b);
  CHECK(bytes == oracle_block(b));
  CHECK(deserialize_block(bytes) == b);

  SUBCASE("count larger than the encoded transactions") {
    Block two = random_block(rng, 2);
    Bytes enc = serialize_block(two);
    enc[48] = 5;  // tx_count lives at offset 8 + 8 + 32
    CHECK_THROWS_AS(deserialize_block(enc), MalformedEncoding);
  }
  SUBCASE("absurd count with no allocation") {
    Bytes enc = e;
    enc[48] = enc[49] = enc[50] = enc[51] = 0xff;
    CHECK_THROWS_AS(deserialize_block(enc), MalformedEncoding);
  }
  SUBCASE("truncation and trailing bytes") {
    CHECK_THROWS_AS(deserialize_block(ByteView(bytes).first(bytes.size() - 1)), MalformedEncoding);
    CHECK_THROWS_AS(deserialize_block(ByteView(bytes).first(83)), MalformedEncoding);
    Bytes longer = bytes;
    longer.push_back(7);
    CHECK_THROWS_AS(deserialize_block(longer), MalformedEncoding);
  }
}

TEST_CASE("property: block size identity and roundtrip") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Block b = random_block(rng, rng() % 12);
    std::size_t sum = 0;
    for (const auto& tx : b.transactions) sum += serialize_transaction(tx).size();
    const Bytes enc = serialize_block(b);
    CHECK(enc.size() == 84 + sum);
    CHECK(serialized_block_size(b) == enc.size());
    CHECK(deserialize_block(enc) == b);
  }
  // 1000 Hawk-512-shaped transactions of 2631 bytes each.
  Block big;
  for (int i = 0; i < 1000; ++i) big.transactions.push_back(random_tx(rng, 1024, 555));
  big.hash = compute_block_hash(big);
  CHECK(serialize_block(big).size() == 2631084);
}
