#include "backends.hpp"
#include "pqchain/errors.hpp"

#ifdef PQCHAIN_HAVE_HAWK

#include <iostream>
#include <string>

#include "pqchain/crypto/hawk_shim.h"

namespace pqchain::detail {

namespace {

const std::uint8_t kEmpty = 0;
const std::uint8_t* data_or_dummy(ByteView view) {
  return view.empty() ? &kEmpty : view.data();
}

struct NominalSizes {
  std::size_t pk;
  std::size_t sk;
  std::size_t sig;
};

// Nominal encoded sizes of the Hawk parameter sets.
NominalSizes nominal_sizes(unsigned logn) {
  return logn == 9 ? NominalSizes{1024, 184, 555} : NominalSizes{2440, 360, 1221};
}

class HawkCrypto final : public Crypto {
 public:
  explicit HawkCrypto(const AlgoConfig& config)
      : logn_(config.variant() == "512" ? 9u : 10u) {
    metadata_ = SchemeMetadata{
        .name = config.name(),
        .family = Family::Hawk,
        .variant = config.variant(),
        .pk_len = pqchain_hawk_public_key_bytes(logn_),
        .sk_len = pqchain_hawk_secret_key_bytes(logn_),
        .sig_max_len = pqchain_hawk_signature_bytes(logn_),
        .sig_fixed = true,
    };
    // The reference code may keep a different in-memory secret key; report
    // what it emits and only warn.
    const NominalSizes nominal = nominal_sizes(logn_);
    if (metadata_.pk_len != nominal.pk || metadata_.sk_len != nominal.sk ||
        metadata_.sig_max_len != nominal.sig) {
      std::clog << "WARN: " << metadata_.name << " implementation sizes (pk "
                << metadata_.pk_len << ", sk " << metadata_.sk_len << ", sig "
                << metadata_.sig_max_len << ") differ from the nominal sizes (pk " << nominal.pk
                << ", sk " << nominal.sk << ", sig " << nominal.sig << ")\n";
    }
  }

  KeyPair generate_keypair() override {
    KeyPair kp{Bytes(metadata_.pk_len), Bytes(metadata_.sk_len)};
    if (pqchain_hawk_keypair(logn_, kp.public_key.data(), kp.secret_key.data()) != 0) {
      throw BackendFailure(metadata_.name + ": keypair generation failed");
    }
    return kp;
  }

  Signature sign(ByteView message, ByteView secret_key) override {
    if (secret_key.size() != metadata_.sk_len) {
      throw KeyLengthMismatch(metadata_.name + ": secret key is " +
                              std::to_string(secret_key.size()) + " bytes, expected " +
                              std::to_string(metadata_.sk_len));
    }
    Signature out{Bytes(metadata_.sig_max_len)};
    std::size_t written = out.bytes.size();
    if (pqchain_hawk_sign(logn_, out.bytes.data(), &written, data_or_dummy(message),
                          message.size(), secret_key.data()) != 0) {
      throw BackendFailure(metadata_.name + ": signing failed");
    }
    if (written != metadata_.sig_max_len) {
      throw BackendFailure(metadata_.name + ": signature of unexpected length " +
                           std::to_string(written));
    }
    return out;
  }

  bool verify(ByteView message, ByteView signature, ByteView public_key) const override {
    if (public_key.size() != metadata_.pk_len) {
      throw KeyLengthMismatch(metadata_.name + ": public key is " +
                              std::to_string(public_key.size()) + " bytes, expected " +
                              std::to_string(metadata_.pk_len));
    }
    if (signature.size() != metadata_.sig_max_len) return false;
    return pqchain_hawk_verify(logn_, signature.data(), signature.size(), data_or_dummy(message),
                               message.size(), public_key.data()) == 0;
  }

  const SchemeMetadata& metadata() const override { return metadata_; }

 private:
  unsigned logn_;
  SchemeMetadata metadata_;
};

}  // namespace

bool hawk_available() { return true; }

std::unique_ptr<Crypto> make_hawk_crypto(const AlgoConfig& config) {
  return std::make_unique<HawkCrypto>(config);
}

}  // namespace pqchain::detail

#else

namespace pqchain::detail {

bool hawk_available() { return false; }

std::unique_ptr<Crypto> make_hawk_crypto(const AlgoConfig& config) {
  throw BackendUnavailable(config.name() +
                           " is not available: built without PQCHAIN_WITH_HAWK");
}

}  // namespace pqchain::detail

#endif
