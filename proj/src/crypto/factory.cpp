#include "backends.hpp"
#include "pqchain/crypto/crypto.hpp"

namespace pqchain {

std::unique_ptr<Crypto> create_crypto(const AlgoConfig& config) {
  switch (config.family()) {
    case Family::MlDsa:
    case Family::Falcon:
      return detail::make_oqs_crypto(config);
    case Family::Hawk:
      return detail::make_hawk_crypto(config);
  }
  return nullptr;
}

bool is_available(const AlgoConfig& config) {
  switch (config.family()) {
    case Family::MlDsa:
    case Family::Falcon:
      return detail::oqs_available(config);
    case Family::Hawk:
      return detail::hawk_available();
  }
  return false;
}

}  // namespace pqchain
