#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "pqchain/bytes.hpp"
#include "pqchain/crypto/algo_config.hpp"

namespace pqchain {

struct SchemeMetadata {
  std::string name;
  Family family;
  std::string variant;
  std::size_t pk_len;
  std::size_t sk_len;
  std::size_t sig_max_len;
  // True when every signature is exactly sig_max_len bytes.
  bool sig_fixed;
};

struct KeyPair {
  Bytes public_key;
  Bytes secret_key;
};

struct Signature {
  Bytes bytes;

  std::size_t size() const { return bytes.size(); }
  ByteView view() const { return bytes; }
};

/// A post-quantum signature scheme behind a uniform interface.
///
/// verify() is safe to call concurrently on one instance. generate_keypair()
/// and sign() need exclusive access per call (or one instance per thread).
class Crypto {
 public:
  virtual ~Crypto() = default;

  /// Throws BackendFailure if the implementation reports an error.
  virtual KeyPair generate_keypair() = 0;

  /// Throws KeyLengthMismatch when secret_key is not sk_len bytes and
  /// BackendFailure if the implementation reports an error.
  virtual Signature sign(ByteView message, ByteView secret_key) = 0;

  /// Returns false for any malformed or invalid signature. Throws
  /// KeyLengthMismatch only, when public_key is not pk_len bytes.
  virtual bool verify(ByteView message, ByteView signature, ByteView public_key) const = 0;

  virtual const SchemeMetadata& metadata() const = 0;

  const std::string& name() const { return metadata().name; }
  Family family() const { return metadata().family; }
  const std::string& variant() const { return metadata().variant; }
  std::size_t public_key_size() const { return metadata().pk_len; }
  std::size_t secret_key_size() const { return metadata().sk_len; }
  std::size_t max_signature_size() const { return metadata().sig_max_len; }
};

/// Instantiates the backend for config. Throws BackendUnavailable when the
/// scheme's implementation is not part of this build.
std::unique_ptr<Crypto> create_crypto(const AlgoConfig& config);

/// Whether create_crypto(config) would succeed in this build.
bool is_available(const AlgoConfig& config);

}  // namespace pqchain
