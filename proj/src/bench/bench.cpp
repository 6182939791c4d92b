#include "pqchain/bench/bench.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "pqchain/errors.hpp"

namespace pqchain {

BenchConfig::BenchConfig(AlgoConfig scheme_, std::size_t keygen_iters_, std::size_t tx_count_,
                         std::size_t validate_iters_, std::uint64_t amount_)
    : scheme(std::move(scheme_)),
      keygen_iters(keygen_iters_),
      tx_count(tx_count_),
      validate_iters(validate_iters_),
      amount(amount_) {
  if (keygen_iters == 0) throw std::invalid_argument("keygen_iters must be at least 1");
  if (tx_count == 0) throw std::invalid_argument("tx_count must be at least 1");
  if (validate_iters == 0) throw std::invalid_argument("validate_iters must be at least 1");
}

TimingStats bench_keygen(Crypto& crypto, std::size_t iters) {
  if (iters == 0) throw std::invalid_argument("iters must be at least 1");
  std::vector<double> samples(iters);
  (void)crypto.generate_keypair();
  for (double& sample : samples) {
    Timer timer;
    KeyPair kp = crypto.generate_keypair();
    sample = timer.elapsed_us();
  }
  return TimingStats::from_samples(samples);
}

SignBench bench_sign_block(Crypto& crypto, Wallet& alice, const Wallet& bob,
                           std::size_t tx_count, std::uint64_t amount) {
  if (tx_count == 0) throw std::invalid_argument("tx_count must be at least 1");
  SignBench out;
  out.transactions.reserve(tx_count);
  std::vector<double> samples(tx_count);

  // Warm-up signs a throwaway message so no nonce is consumed.
  (void)crypto.sign(bob.public_key(), alice.keypair().secret_key);

  for (double& sample : samples) {
    Timer timer;
    Transaction tx = alice.create_transaction(bob.public_key(), amount, crypto);
    sample = timer.elapsed_us();
    out.transactions.push_back(std::move(tx));
  }
  out.sign = TimingStats::from_samples(samples);

  std::size_t total = 0;
  for (const Transaction& tx : out.transactions) {
    total += tx.signature.size();
    out.sig_max_bytes = std::max(out.sig_max_bytes, tx.signature.size());
  }
  out.sig_avg_bytes = static_cast<double>(total) / static_cast<double>(tx_count);
  return out;
}

void run_tamper_sentinel(const Blockchain& chain, Block& block) {
  if (block.transactions.empty()) {
    throw std::invalid_argument("tamper sentinel needs at least one transaction");
  }
  Bytes& sig = block.transactions.front().signature;
  const Hash256 original_hash = block.hash;
  flip_bit(sig, 0);
  block.hash = compute_block_hash(block);
  const ValidationResult result = chain.validate_block(block);
  flip_bit(sig, 0);
  block.hash = original_hash;
  if (result != ValidationResult::bad_signature(0)) {
    throw TamperNotDetected("flipped signature bit in transaction 0 gave " + to_string(result) +
                            ", expected BadSignature(0)");
  }
}

ValidateBench bench_validate(const Blockchain& chain, Block block, std::size_t iters) {
  if (iters == 0) throw std::invalid_argument("iters must be at least 1");
  const ValidationResult first = chain.validate_block(block);
  if (!first.ok()) {
    throw std::runtime_error("block rejected before timing: " + to_string(first));
  }
  run_tamper_sentinel(chain, block);

  std::vector<double> samples(iters);
  (void)chain.validate_block(block);
  bool all_ok = true;
  for (double& sample : samples) {
    Timer timer;
    const ValidationResult result = chain.validate_block(block);
    sample = timer.elapsed_us();
    all_ok = all_ok && result.ok();
  }
  if (!all_ok) throw std::runtime_error("block rejected during timed validation");

  ValidateBench out;
  out.block_validate = TimingStats::from_samples(samples);
  out.verify_us_per_tx =
      out.block_validate.mean_us / static_cast<double>(std::max<std::size_t>(1, block.transactions.size()));
  return out;
}

BenchReport run_full_benchmark(const BenchConfig& config, std::ostream* log) {
  BenchReport report(config.scheme);
  report.tx_count = config.tx_count;
  const std::string name = config.scheme.name();
  auto note = [&](const std::string& step) {
    if (log) *log << "[" << name << "] " << step << "\n" << std::flush;
  };

  std::shared_ptr<Crypto> crypto;
  try {
    crypto = create_crypto(config.scheme);
  } catch (const BackendUnavailable& e) {
    report.status = ReportStatus::Unavailable;
    report.error = e.what();
    note("unavailable: " + report.error);
    return report;
  }

  try {
    note("key generation x" + std::to_string(config.keygen_iters));
    report.keygen = bench_keygen(*crypto, config.keygen_iters);
    report.keygen_iters = report.keygen.samples;

    Blockchain chain(crypto);
    Wallet alice = Wallet::generate(*crypto);
    Wallet bob = Wallet::generate(*crypto);
    report.pk_bytes = alice.public_key().size();
    report.sk_bytes = alice.keypair().secret_key.size();

    note("signing x" + std::to_string(config.tx_count));
    SignBench signing = bench_sign_block(*crypto, alice, bob, config.tx_count, config.amount);
    report.sign = signing.sign;
    report.sig_avg_bytes = signing.sig_avg_bytes;
    report.sig_max_bytes = signing.sig_max_bytes;

    Block block = chain.create_block(std::move(signing.transactions));
    report.block_bytes = serialize_block(block).size();
    std::size_t tx_total = 0;
    for (const Transaction& tx : block.transactions) tx_total += serialized_transaction_size(tx);
    report.avg_tx_bytes = static_cast<double>(tx_total) / static_cast<double>(config.tx_count);

    note("validation x" + std::to_string(config.validate_iters));
    ValidateBench validation = bench_validate(chain, std::move(block), config.validate_iters);
    report.tamper_detected = true;
    report.block_validate = validation.block_validate;
    report.verify_us_per_tx = validation.verify_us_per_tx;
    report.validate_iters = validation.block_validate.samples;
  } catch (const std::exception& e) {
    report.status = ReportStatus::Failed;
    report.error = e.what();
    note("failed: " + report.error);
  }
  return report;
}

}  // namespace pqchain
