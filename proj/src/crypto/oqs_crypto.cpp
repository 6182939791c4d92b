#include <oqs/oqs.h>

#include <memory>
#include <mutex>
#include <string>

#include "backends.hpp"
#include "pqchain/errors.hpp"

namespace pqchain::detail {

namespace {

struct OqsSigDeleter {
  void operator()(OQS_SIG* sig) const { OQS_SIG_free(sig); }
};
using OqsSigPtr = std::unique_ptr<OQS_SIG, OqsSigDeleter>;

// liboqs reads through the message pointer even for zero-length input.
const std::uint8_t kEmpty = 0;
const std::uint8_t* data_or_dummy(ByteView view) {
  return view.empty() ? &kEmpty : view.data();
}

const char* oqs_alg_name(const AlgoConfig& config) {
  if (config.family() == Family::MlDsa) {
    if (config.variant() == "44") return OQS_SIG_alg_ml_dsa_44;
    if (config.variant() == "65") return OQS_SIG_alg_ml_dsa_65;
    if (config.variant() == "87") return OQS_SIG_alg_ml_dsa_87;
  } else if (config.family() == Family::Falcon) {
    // Compressed (variable-length) encoding, as liboqs's primary Falcon.
    if (config.variant() == "512") return OQS_SIG_alg_falcon_512;
    if (config.variant() == "1024") return OQS_SIG_alg_falcon_1024;
  }
  return nullptr;
}

void ensure_oqs_initialized() {
  static std::once_flag once;
  std::call_once(once, [] { OQS_init(); });
}

class OqsCrypto final : public Crypto {
 public:
  OqsCrypto(const AlgoConfig& config, OqsSigPtr sig) : sig_(std::move(sig)) {
    metadata_ = SchemeMetadata{
        .name = config.name(),
        .family = config.family(),
        .variant = config.variant(),
        .pk_len = sig_->length_public_key,
        .sk_len = sig_->length_secret_key,
        .sig_max_len = sig_->length_signature,
        .sig_fixed = config.family() == Family::MlDsa,
    };
  }

  KeyPair generate_keypair() override {
    KeyPair kp{Bytes(metadata_.pk_len), Bytes(metadata_.sk_len)};
    if (OQS_SIG_keypair(sig_.get(), kp.public_key.data(), kp.secret_key.data()) != OQS_SUCCESS) {
      throw BackendFailure(metadata_.name + ": OQS_SIG_keypair failed");
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
    std::size_t written = 0;
    if (OQS_SIG_sign(sig_.get(), out.bytes.data(), &written, data_or_dummy(message),
                     message.size(), secret_key.data()) != OQS_SUCCESS) {
      throw BackendFailure(metadata_.name + ": OQS_SIG_sign failed");
    }
    if (written == 0 || written > metadata_.sig_max_len ||
        (metadata_.sig_fixed && written != metadata_.sig_max_len)) {
      throw BackendFailure(metadata_.name + ": signature of unexpected length " +
                           std::to_string(written));
    }
    out.bytes.resize(written);
    return out;
  }

  bool verify(ByteView message, ByteView signature, ByteView public_key) const override {
    if (public_key.size() != metadata_.pk_len) {
      throw KeyLengthMismatch(metadata_.name + ": public key is " +
                              std::to_string(public_key.size()) + " bytes, expected " +
                              std::to_string(metadata_.pk_len));
    }
    if (signature.empty() || signature.size() > metadata_.sig_max_len) return false;
    if (metadata_.sig_fixed && signature.size() != metadata_.sig_max_len) return false;
    return OQS_SIG_verify(sig_.get(), data_or_dummy(message), message.size(), signature.data(),
                          signature.size(), public_key.data()) == OQS_SUCCESS;
  }

  const SchemeMetadata& metadata() const override { return metadata_; }

 private:
  OqsSigPtr sig_;
  SchemeMetadata metadata_;
};

}  // namespace

bool oqs_available(const AlgoConfig& config) {
  const char* alg = oqs_alg_name(config);
  return alg != nullptr && OQS_SIG_alg_is_enabled(alg) == 1;
}

std::unique_ptr<Crypto> make_oqs_crypto(const AlgoConfig& config) {
  const char* alg = oqs_alg_name(config);
  if (alg == nullptr) {
    throw UnsupportedScheme(config.name() + " is not provided by liboqs");
  }
  if (OQS_SIG_alg_is_enabled(alg) != 1) {
    throw BackendUnavailable(config.name() + " is disabled in this liboqs build");
  }
  ensure_oqs_initialized();
  OqsSigPtr sig(OQS_SIG_new(alg));
  if (!sig) {
    throw BackendUnavailable(std::string("OQS_SIG_new(") + alg + ") returned null");
  }
  return std::make_unique<OqsCrypto>(config, std::move(sig));
}

}  // namespace pqchain::detail
