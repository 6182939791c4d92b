#pragma once

#include <memory>

#include "pqchain/bytes.hpp"

namespace pqchain {

/// Incremental SHA3-256.
class Sha3_256 {
 public:
  Sha3_256();
  ~Sha3_256();
  Sha3_256(const Sha3_256&) = delete;
  Sha3_256& operator=(const Sha3_256&) = delete;

  void update(ByteView data);
  // The hasher is reset afterwards and can be reused.
  Hash256 finish();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

Hash256 sha3_256(ByteView data);

}  // namespace pqchain
