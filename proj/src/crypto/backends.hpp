#pragma once

#include <memory>

#include "pqchain/crypto/crypto.hpp"

namespace pqchain::detail {

// ML-DSA and Falcon through liboqs.
bool oqs_available(const AlgoConfig& config);
std::unique_ptr<Crypto> make_oqs_crypto(const AlgoConfig& config);

// Hawk through the reference implementation; only present when built with
// PQCHAIN_WITH_HAWK.
bool hawk_available();
std::unique_ptr<Crypto> make_hawk_crypto(const AlgoConfig& config);

}  // namespace pqchain::detail
