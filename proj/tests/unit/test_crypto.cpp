#include <doctest.h>

#include <random>
#include <set>

#include "pqchain/crypto/crypto.hpp"
#include "pqchain/errors.hpp"
#include "test_support.hpp"

using namespace pqchain;
using pqchain::testing::available_schemes;
using pqchain::testing::random_bytes;

namespace {

struct ExpectedSizes {
  const char* name;
  std::size_t pk;
  std::size_t sk;        // 0: implementation-defined
  std::size_t sig_max;   // 0: implementation-defined
  bool sig_fixed;
};

// ML-DSA and Hawk: parameter-set tables. Falcon: public key sizes from the
// size table; secret key and maximum signature length are liboqs's.
constexpr ExpectedSizes kExpected[] = {
    {"ML-DSA-44", 1312, 2560, 2420, true},  {"ML-DSA-65", 1952, 4032, 3309, true},
    {"ML-DSA-87", 2592, 4896, 4627, true},  {"Falcon-512", 897, 0, 0, false},
    {"Falcon-1024", 1793, 0, 0, false},     {"Hawk-512", 1024, 184, 555, true},
    {"Hawk-1024", 2440, 360, 1221, true},
};

const ExpectedSizes& expected_for(const std::string& name) {
  for (const auto& e : kExpected) {
    if (name == e.name) return e;
  }
  FAIL("no expectation for " << name);
  return kExpected[0];
}

}  // namespace

TEST_CASE("AlgoConfig accepts exactly the seven supported pairs") {
  CHECK(all_schemes().size() == 7);
  CHECK_NOTHROW(AlgoConfig(Family::MlDsa, "44"));
  CHECK_NOTHROW(AlgoConfig(Family::Hawk, "1024"));
  CHECK_THROWS_AS(AlgoConfig(Family::Falcon, "2048"), UnsupportedScheme);
  CHECK_THROWS_AS(AlgoConfig(Family::MlDsa, "512"), UnsupportedScheme);
  CHECK_THROWS_AS(AlgoConfig(Family::Hawk, "44"), UnsupportedScheme);
  CHECK_THROWS_AS(AlgoConfig(Family::MlDsa, ""), UnsupportedScheme);

  CHECK(AlgoConfig(Family::Falcon, "1024").name() == "Falcon-1024");
  CHECK(parse_family("ml-dsa") == Family::MlDsa);
  CHECK(parse_family("FALCON") == Family::Falcon);
  CHECK(parse_family("Hawk") == Family::Hawk);
  CHECK_THROWS_AS(parse_family("haetae"), UnsupportedScheme);
}

TEST_CASE("ML-DSA and Falcon are built in; Hawk degrades to BackendUnavailable") {
  for (const AlgoConfig& s : all_schemes()) {
    if (s.family() != Family::Hawk) CHECK_MESSAGE(is_available(s), s.name());
  }
  const AlgoConfig hawk(Family::Hawk, "512");
  if (!is_available(hawk)) {
    CHECK_THROWS_AS(create_crypto(hawk), BackendUnavailable);
    // The process carries on and other schemes still work.
    CHECK(create_crypto(AlgoConfig(Family::MlDsa, "44"))->public_key_size() == 1312);
  } else {
    auto crypto = create_crypto(hawk);
    CHECK(crypto->public_key_size() == 1024);
  }
}

TEST_CASE("metadata matches the published parameter sets") {
  for (const AlgoConfig& s : available_schemes()) {
    CAPTURE(s.name());
    auto crypto = create_crypto(s);
    const SchemeMetadata& md = crypto->metadata();
    const ExpectedSizes& e = expected_for(s.name());
    CHECK(md.name == s.name());
    CHECK(md.family == s.family());
    CHECK(md.variant == s.variant());
    CHECK(md.pk_len == e.pk);
    if (e.sk) CHECK(md.sk_len == e.sk);
    if (e.sig_max) CHECK(md.sig_max_len == e.sig_max);
    CHECK(md.sig_fixed == e.sig_fixed);
    CHECK(md.pk_len > 0);
    CHECK(md.sk_len > 0);
    CHECK(md.sig_max_len > 0);
    // Constant per instance.
    CHECK(&crypto->metadata() == &md);
  }
  // Falcon's declared maximum must cover the published average signatures.
  CHECK(create_crypto(AlgoConfig(Family::Falcon, "512"))->max_signature_size() >= 658);
  CHECK(create_crypto(AlgoConfig(Family::Falcon, "1024"))->max_signature_size() >= 1275);
}

TEST_CASE("key generation yields metadata-sized, distinct keys") {
  for (const AlgoConfig& s : available_schemes()) {
    CAPTURE(s.name());
    auto crypto = create_crypto(s);
    const KeyPair a = crypto->generate_keypair();
    const KeyPair b = crypto->generate_keypair();
    CHECK(a.public_key.size() == crypto->public_key_size());
    CHECK(a.secret_key.size() == crypto->secret_key_size());
    CHECK(a.public_key != b.public_key);
  }
  auto mldsa65 = create_crypto(AlgoConfig(Family::MlDsa, "65"));
  const KeyPair kp = mldsa65->generate_keypair();
  CHECK(kp.public_key.size() == 1952);
  CHECK(kp.secret_key.size() == 4032);
  CHECK(create_crypto(AlgoConfig(Family::Falcon, "512"))->generate_keypair().public_key.size() ==
        897);
}

TEST_CASE("sign/verify roundtrip, including the empty message") {
  std::mt19937_64 rng(7);
  for (const AlgoConfig& s : available_schemes()) {
    CAPTURE(s.name());
    auto crypto = create_crypto(s);
    const KeyPair kp = crypto->generate_keypair();
    for (std::size_t len : {0u, 1u, 32u, 1024u}) {
      const Bytes msg = random_bytes(rng, len);
      const Signature sig = crypto->sign(msg, kp.secret_key);
      CHECK(sig.size() > 0);
      CHECK(sig.size() <= crypto->max_signature_size());
      if (crypto->metadata().sig_fixed) CHECK(sig.size() == crypto->max_signature_size());
      CHECK(crypto->verify(msg, sig.view(), kp.public_key));
    }
  }
  auto mldsa44 = create_crypto(AlgoConfig(Family::MlDsa, "44"));
  const KeyPair kp = mldsa44->generate_keypair();
  CHECK(mldsa44->sign(Bytes(32, 0xab), kp.secret_key).size() == 2420);
}

TEST_CASE("verify rejects tampered signatures and foreign keys") {
  std::mt19937_64 rng(11);
  for (const AlgoConfig& s : available_schemes()) {
    CAPTURE(s.name());
    auto crypto = create_crypto(s);
    const KeyPair kp = crypto->generate_keypair();
    const KeyPair other = crypto->generate_keypair();
    const Bytes msg = random_bytes(rng, 32);
    Signature sig = crypto->sign(msg, kp.secret_key);

    CHECK_FALSE(crypto->verify(msg, sig.view(), other.public_key));

    Bytes flipped = sig.bytes;
    flip_bit(flipped, 0);
    CHECK_FALSE(crypto->verify(msg, flipped, kp.public_key));

    Bytes other_msg = msg;
    flip_bit(other_msg, 5);
    CHECK_FALSE(crypto->verify(other_msg, sig.view(), kp.public_key));
  }
}

TEST_CASE("malformed signatures map to false, never to an error") {
  std::mt19937_64 rng(13);
  for (const AlgoConfig& s : available_schemes()) {
    CAPTURE(s.name());
    auto crypto = create_crypto(s);
    const KeyPair kp = crypto->generate_keypair();
    const Bytes msg = random_bytes(rng, 64);
    const Signature sig = crypto->sign(msg, kp.secret_key);

    CHECK_FALSE(crypto->verify(msg, Bytes{}, kp.public_key));
    CHECK_FALSE(crypto->verify(msg, Bytes(crypto->max_signature_size() + 1, 0), kp.public_key));
    Bytes truncated(sig.bytes.begin(), sig.bytes.end() - 1);
    CHECK_FALSE(crypto->verify(msg, truncated, kp.public_key));
    Bytes extended = sig.bytes;
    extended.push_back(0);
    CHECK_FALSE(crypto->verify(msg, extended, kp.public_key));
    for (int i = 0; i < 20; ++i) {
      const Bytes garbage = random_bytes(rng, 1 + rng() % crypto->max_signature_size());
      CHECK_FALSE(crypto->verify(msg, garbage, kp.public_key));
    }
  }
}

TEST_CASE("wrong key lengths raise KeyLengthMismatch") {
  auto crypto = create_crypto(AlgoConfig(Family::Falcon, "512"));
  const KeyPair kp = crypto->generate_keypair();
  const Bytes msg(10, 1);
  CHECK_THROWS_AS(crypto->sign(msg, Bytes(kp.secret_key.size() - 1)), KeyLengthMismatch);
  const Signature sig = crypto->sign(msg, kp.secret_key);
  CHECK_THROWS_AS(crypto->verify(msg, sig.view(), Bytes(kp.public_key.size() + 1)),
                  KeyLengthMismatch);
}

TEST_CASE("fixed-size schemes sign at one constant length; Falcon averages near the reference") {
  for (const AlgoConfig& s : available_schemes()) {
    CAPTURE(s.name());
    auto crypto = create_crypto(s);
    const KeyPair kp = crypto->generate_keypair();
    std::set<std::size_t> lengths;
    std::size_t total = 0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
      Bytes msg(8);
      for (int b = 0; b < 8; ++b) msg[b] = static_cast<std::uint8_t>(i >> (8 * b));
      const Signature sig = crypto->sign(msg, kp.secret_key);
      CHECK(sig.size() <= crypto->max_signature_size());
      lengths.insert(sig.size());
      total += sig.size();
    }
    const double mean = static_cast<double>(total) / n;
    if (crypto->metadata().sig_fixed) {
      CHECK(lengths.size() == 1);
    } else {
      const double reference = s.variant() == "512" ? 658.0 : 1275.0;
      CHECK(mean == doctest::Approx(reference).epsilon(0.05));
    }
  }
}
