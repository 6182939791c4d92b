#include "pqchain/chain/transaction.hpp"

#include "pqchain/chain/encoding.hpp"
#include "pqchain/errors.hpp"

namespace pqchain {

namespace {

void write_body(ByteWriter& out, const Transaction& tx) {
  out.prefixed(tx.sender_pk);
  out.prefixed(tx.recipient_pk);
  out.u64(tx.amount);
  out.u64(tx.nonce);
}

std::size_t body_size(const Transaction& tx) {
  return 4 + tx.sender_pk.size() + 4 + tx.recipient_pk.size() + 8 + 8;
}

}  // namespace

Bytes serialize_transaction_body(const Transaction& tx) {
  ByteWriter out(body_size(tx));
  write_body(out, tx);
  return std::move(out).take();
}

void write_transaction(ByteWriter& out, const Transaction& tx) {
  write_body(out, tx);
  out.prefixed(tx.signature);
}

Bytes serialize_transaction(const Transaction& tx) {
  ByteWriter out(serialized_transaction_size(tx));
  write_transaction(out, tx);
  return std::move(out).take();
}

std::size_t serialized_transaction_size(const Transaction& tx) {
  return body_size(tx) + 4 + tx.signature.size();
}

Transaction read_transaction(ByteReader& in) {
  Transaction tx;
  tx.sender_pk = in.prefixed();
  tx.recipient_pk = in.prefixed();
  tx.amount = in.u64();
  tx.nonce = in.u64();
  tx.signature = in.prefixed();
  return tx;
}

Transaction deserialize_transaction(ByteView bytes) {
  ByteReader in(bytes);
  Transaction tx = read_transaction(in);
  in.expect_end();
  return tx;
}

bool verify_transaction(const Crypto& crypto, const Transaction& tx) {
  if (tx.sender_pk.size() != crypto.public_key_size()) return false;
  return crypto.verify(serialize_transaction_body(tx), tx.signature, tx.sender_pk);
}

}  // namespace pqchain
