#include <doctest.h>

#include <memory>
#include <thread>

#include "pqchain/bench/bench.hpp"
#include "pqchain/errors.hpp"

using namespace pqchain;

namespace {

// Accepts every signature; lets the tamper sentinel's failure path run.
class AcceptAllCrypto final : public Crypto {
 public:
  explicit AcceptAllCrypto(std::unique_ptr<Crypto> inner) : inner_(std::move(inner)) {}
  KeyPair generate_keypair() override { return inner_->generate_keypair(); }
  Signature sign(ByteView m, ByteView sk) override { return inner_->sign(m, sk); }
  bool verify(ByteView, ByteView, ByteView) const override { return true; }
  const SchemeMetadata& metadata() const override { return inner_->metadata(); }

 private:
  std::unique_ptr<Crypto> inner_;
};

const AlgoConfig kMlDsa44(Family::MlDsa, "44");

}  // namespace

TEST_CASE("timer is monotonic with microsecond resolution") {
  CHECK(Timer::resolution_us() <= 1.0);
  Timer t;
  double last = t.elapsed_us();
  for (int i = 0; i < 1000; ++i) {
    const double now = t.elapsed_us();
    CHECK(now >= last);
    last = now;
  }
  std::this_thread::sleep_for(std::chrono::milliseconds(2));
  CHECK(t.elapsed_us() >= 2000.0);
}

TEST_CASE("timing statistics") {
  const double one[] = {42.5};
  const TimingStats s = TimingStats::from_samples(one);
  CHECK(s.mean_us == 42.5);
  CHECK(s.min_us == 42.5);
  CHECK(s.max_us == 42.5);
  CHECK(s.samples == 1);

  const double many[] = {3.0, 1.0, 8.0, 4.0};
  const TimingStats m = TimingStats::from_samples(many);
  CHECK(m.mean_us == doctest::Approx(4.0));
  CHECK(m.min_us == 1.0);
  CHECK(m.max_us == 8.0);
  CHECK_THROWS_AS(TimingStats::from_samples(std::span<const double>{}), std::invalid_argument);
}

TEST_CASE("bench config rejects zero counts") {
  CHECK_NOTHROW(BenchConfig{kMlDsa44});
  const BenchConfig defaults(kMlDsa44);
  CHECK(defaults.keygen_iters == 100);
  CHECK(defaults.tx_count == 1000);
  CHECK(defaults.validate_iters == 100);
  CHECK(defaults.amount == 1);
  CHECK_THROWS_AS((BenchConfig{kMlDsa44, 100, 0}), std::invalid_argument);
  CHECK_THROWS_AS((BenchConfig{kMlDsa44, 0}), std::invalid_argument);
  CHECK_THROWS_AS((BenchConfig{kMlDsa44, 100, 1000, 0}), std::invalid_argument);
}

TEST_CASE("keygen bench") {
  auto crypto = create_crypto(kMlDsa44);
  const TimingStats one = bench_keygen(*crypto, 1);
  CHECK(one.samples == 1);
  CHECK(one.mean_us == one.min_us);
  CHECK(one.mean_us == one.max_us);
  const TimingStats ten = bench_keygen(*crypto, 10);
  CHECK(ten.samples == 10);
  CHECK(ten.mean_us >= ten.min_us);
  CHECK(ten.mean_us <= ten.max_us);
  CHECK(ten.min_us > 0);
}

TEST_CASE("sign bench") {
  auto crypto = create_crypto(kMlDsa44);
  Wallet alice = Wallet::generate(*crypto);
  const Wallet bob = Wallet::generate(*crypto);

  const SignBench single = bench_sign_block(*crypto, alice, bob, 1);
  REQUIRE(single.transactions.size() == 1);
  CHECK(single.transactions[0].nonce == 0);

  const SignBench batch = bench_sign_block(*crypto, alice, bob, 20, 7);
  CHECK(batch.transactions.size() == 20);
  CHECK(batch.transactions.front().nonce == 1);
  CHECK(batch.transactions.back().nonce == 20);
  CHECK(batch.sig_avg_bytes == 2420.0);
  CHECK(batch.sig_max_bytes == 2420);
  CHECK(batch.sign.samples == 20);
  for (const auto& tx : batch.transactions) {
    CHECK(tx.amount == 7);
    CHECK(verify_transaction(*crypto, tx));
  }
}

TEST_CASE("validate bench and the tamper sentinel") {
  std::shared_ptr<Crypto> crypto = create_crypto(AlgoConfig(Family::Falcon, "512"));
  Blockchain chain(crypto);
  Wallet alice = Wallet::generate(*crypto);
  const Wallet bob = Wallet::generate(*crypto);
  Block block = chain.create_block(bench_sign_block(*crypto, alice, bob, 10).transactions);
  const Block original = block;

  CHECK_NOTHROW(run_tamper_sentinel(chain, block));
  CHECK(block == original);

  const ValidateBench v = bench_validate(chain, block, 5);
  CHECK(v.block_validate.samples == 5);
  CHECK(v.verify_us_per_tx * 10 == doctest::Approx(v.block_validate.mean_us));
  CHECK(v.verify_us_per_tx > 0);

  SUBCASE("a validator that accepts everything trips the sentinel") {
    auto lax = std::make_shared<AcceptAllCrypto>(create_crypto(AlgoConfig(Family::Falcon, "512")));
    Blockchain lax_chain(lax);
    Block copy = original;
    CHECK_THROWS_AS(run_tamper_sentinel(lax_chain, copy), TamperNotDetected);
    CHECK(copy == original);
    CHECK_THROWS_AS(bench_validate(lax_chain, original, 1), TamperNotDetected);
  }
  SUBCASE("an invalid block is refused before timing") {
    Block bad = original;
    bad.hash[0] ^= 1;
    CHECK_THROWS(bench_validate(chain, bad, 1));
  }
}

TEST_CASE("full benchmark on a small workload") {
  const BenchReport r = run_full_benchmark(BenchConfig(kMlDsa44, 3, 8, 2));
  REQUIRE(r.complete());
  CHECK(r.tamper_detected);
  CHECK(r.scheme == kMlDsa44);
  CHECK(r.pk_bytes == 1312);
  CHECK(r.sk_bytes == 2560);
  CHECK(r.sig_avg_bytes == 2420.0);
  CHECK(r.sig_max_bytes == 2420);
  CHECK(r.avg_tx_bytes == 5072.0);
  CHECK(r.block_bytes == 84 + 8 * 5072);
  CHECK(r.avg_tx_bytes == doctest::Approx(static_cast<double>(r.block_bytes - 84) / r.tx_count));
  CHECK(r.keygen_iters == 3);
  CHECK(r.keygen.samples == 3);
  CHECK(r.sign.samples == 8);
  CHECK(r.validate_iters == 2);
  CHECK(r.tx_count == 8);
  CHECK(r.keygen.mean_us > 0);
  CHECK(r.sign.mean_us > 0);
  CHECK(r.block_validate.mean_us > 0);
  CHECK(r.verify_us_per_tx == doctest::Approx(r.block_validate.mean_us / 8));
}

TEST_CASE("doubling the workload adds exactly the new transactions' bytes") {
  const BenchReport small = run_full_benchmark(BenchConfig(kMlDsa44, 1, 5, 1));
  const BenchReport large = run_full_benchmark(BenchConfig(kMlDsa44, 1, 10, 1));
  REQUIRE(small.complete());
  REQUIRE(large.complete());
  CHECK(large.block_bytes - small.block_bytes == 5 * 5072);

  // Variable-length signatures: the difference is the sum of the added sizes.
  const AlgoConfig falcon(Family::Falcon, "512");
  auto crypto = create_crypto(falcon);
  Blockchain chain(std::shared_ptr<Crypto>(create_crypto(falcon)));
  Wallet alice = Wallet::generate(*crypto);
  const Wallet bob = Wallet::generate(*crypto);
  auto txs = bench_sign_block(*crypto, alice, bob, 12).transactions;
  std::vector<Transaction> half(txs.begin(), txs.begin() + 6);
  std::size_t added = 0;
  for (std::size_t i = 6; i < 12; ++i) added += serialize_transaction(txs[i]).size();
  CHECK(serialize_block(chain.create_block(txs)).size() -
            serialize_block(chain.create_block(half)).size() ==
        added);
}

TEST_CASE("all seven schemes yield rows in configured order") {
  std::vector<BenchReport> rows;
  for (const AlgoConfig& s : all_schemes()) rows.push_back(run_full_benchmark(BenchConfig(s, 1, 2, 1)));
  REQUIRE(rows.size() == 7);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].scheme == all_schemes()[i]);
    if (is_available(rows[i].scheme)) {
      CHECK(rows[i].complete());
    } else {
      CHECK(rows[i].status == ReportStatus::Unavailable);
      CHECK_FALSE(rows[i].error.empty());
    }
  }
}

TEST_CASE("soft ordering warnings") {
  auto row = [](Family f, const char* v, double verify) {
    BenchReport r(AlgoConfig(f, v));
    r.verify_us_per_tx = verify;
    return r;
  };
  std::vector<BenchReport> monotone{row(Family::MlDsa, "44", 97.5), row(Family::MlDsa, "65", 144.5),
                                    row(Family::MlDsa, "87", 234.1),
                                    row(Family::Falcon, "512", 51.6),
                                    row(Family::Falcon, "1024", 103.5)};
  CHECK(soft_ordering_warnings(monotone).empty());

  std::vector<BenchReport> inverted = monotone;
  inverted[2].verify_us_per_tx = 100.0;  // ML-DSA-87 faster than ML-DSA-65
  const auto warnings = soft_ordering_warnings(inverted);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].rfind("WARN:", 0) == 0);
  CHECK(warnings[0].find("ML-DSA-65") != std::string::npos);
  CHECK(warnings[0].find("ML-DSA-87") != std::string::npos);

  // Incomplete rows are ignored.
  inverted[2].status = ReportStatus::Failed;
  CHECK(soft_ordering_warnings(inverted).empty());
}

TEST_CASE("reference values") {
  const auto ref = published_reference(kMlDsa44);
  REQUIRE(ref);
  CHECK(ref->block_bytes == 5092084);
  CHECK(ref->keygen_us == 78.9);
  for (const AlgoConfig& s : all_schemes()) CHECK(published_reference(s).has_value());
}
