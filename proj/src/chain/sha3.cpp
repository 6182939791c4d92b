#include "pqchain/chain/sha3.hpp"

#include <oqs/sha3.h>

namespace pqchain {

struct Sha3_256::State {
  OQS_SHA3_sha3_256_inc_ctx ctx{};
};

Sha3_256::Sha3_256() : state_(std::make_unique<State>()) {
  OQS_SHA3_sha3_256_inc_init(&state_->ctx);
}

Sha3_256::~Sha3_256() { OQS_SHA3_sha3_256_inc_ctx_release(&state_->ctx); }

void Sha3_256::update(ByteView data) {
  if (!data.empty()) OQS_SHA3_sha3_256_inc_absorb(&state_->ctx, data.data(), data.size());
}

Hash256 Sha3_256::finish() {
  Hash256 out{};
  OQS_SHA3_sha3_256_inc_finalize(out.data(), &state_->ctx);
  OQS_SHA3_sha3_256_inc_ctx_reset(&state_->ctx);
  return out;
}

Hash256 sha3_256(ByteView data) {
  Sha3_256 hasher;
  hasher.update(data);
  return hasher.finish();
}

}  // namespace pqchain
