#include "pqchain/chain/block.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "pqchain/chain/encoding.hpp"
#include "pqchain/chain/sha3.hpp"
#include "pqchain/errors.hpp"

namespace pqchain {

namespace {

void write_header(ByteWriter& out, const Block& block) {
  if (block.transactions.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw MalformedEncoding("too many transactions for a u32 count");
  }
  out.u64(block.index);
  out.u64(block.timestamp);
  out.raw(block.prev_hash);
  out.u32(static_cast<std::uint32_t>(block.transactions.size()));
}

Hash256 read_hash(ByteReader& in) {
  Hash256 out{};
  ByteView b = in.raw(kHashSize);
  std::copy(b.begin(), b.end(), out.begin());
  return out;
}

}  // namespace

Hash256 compute_block_hash(const Block& block) {
  Sha3_256 hasher;
  ByteWriter scratch(kBlockHeaderSize);
  write_header(scratch, block);
  hasher.update(scratch.bytes());
  for (const Transaction& tx : block.transactions) {
    scratch.clear();
    write_transaction(scratch, tx);
    hasher.update(scratch.bytes());
  }
  return hasher.finish();
}

std::size_t serialized_block_size(const Block& block) {
  std::size_t total = kBlockOverhead;
  for (const Transaction& tx : block.transactions) total += serialized_transaction_size(tx);
  return total;
}

Bytes serialize_block(const Block& block) {
  ByteWriter out(serialized_block_size(block));
  write_header(out, block);
  for (const Transaction& tx : block.transactions) write_transaction(out, tx);
  out.raw(block.hash);
  return std::move(out).take();
}

Block deserialize_block(ByteView bytes) {
  ByteReader in(bytes);
  Block block;
  block.index = in.u64();
  block.timestamp = in.u64();
  block.prev_hash = read_hash(in);
  const std::uint32_t count = in.u32();
  // Each transaction needs at least its framing bytes; reject impossible
  // counts before reserving anything.
  const std::size_t room = in.remaining() < kHashSize ? 0 : in.remaining() - kHashSize;
  if (count > room / kTransactionOverhead) {
    throw MalformedEncoding("transaction count " + std::to_string(count) +
                            " does not fit in the remaining " + std::to_string(in.remaining()) +
                            " bytes");
  }
  block.transactions.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) block.transactions.push_back(read_transaction(in));
  block.hash = read_hash(in);
  in.expect_end();
  return block;
}

Block make_genesis_block() {
  Block genesis;
  genesis.hash = compute_block_hash(genesis);
  return genesis;
}

}  // namespace pqchain
