#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pqchain/bench/report.hpp"
#include "pqchain/bench/timer.hpp"
#include "pqchain/chain/blockchain.hpp"
#include "pqchain/chain/wallet.hpp"
#include "pqchain/crypto/crypto.hpp"

namespace pqchain {

/// Workload sizes for one benchmark run. Defaults follow the reference
/// methodology: 100 key generations, 1000 signed transactions, 100 block
/// validations.
struct BenchConfig {
  AlgoConfig scheme;
  std::size_t keygen_iters = 100;
  std::size_t tx_count = 1000;
  std::size_t validate_iters = 100;
  std::uint64_t amount = 1;

  /// Throws std::invalid_argument if any count is zero.
  BenchConfig(AlgoConfig scheme, std::size_t keygen_iters = 100, std::size_t tx_count = 1000,
              std::size_t validate_iters = 100, std::uint64_t amount = 1);
};

/// Times generate_keypair() iters times, one sample per call, after one
/// untimed warm-up call.
TimingStats bench_keygen(Crypto& crypto, std::size_t iters);

struct SignBench {
  std::vector<Transaction> transactions;
  TimingStats sign;
  double sig_avg_bytes = 0;
  std::size_t sig_max_bytes = 0;
};

/// Creates tx_count transfers from alice to bob. Each timed sample covers
/// one Wallet::create_transaction call: body serialization plus sign.
SignBench bench_sign_block(Crypto& crypto, Wallet& alice, const Wallet& bob,
                           std::size_t tx_count, std::uint64_t amount = 1);

/// Flips one bit in the first transaction's signature, re-seals the block
/// hash so the signature check is reached, and requires
/// BadSignature(0). Throws TamperNotDetected otherwise. The block is left
/// unchanged.
void run_tamper_sentinel(const Blockchain& chain, Block& block);

struct ValidateBench {
  TimingStats block_validate;
  double verify_us_per_tx = 0;
};

/// Requires the block to validate, runs the tamper sentinel, then times
/// iters whole-block validations. The per-transaction figure is the block
/// average divided by the transaction count, so it includes the linkage and
/// hash checks.
ValidateBench bench_validate(const Blockchain& chain, Block block, std::size_t iters);

/// The full five-step workflow for one scheme. Never throws for scheme
/// problems: an unavailable backend yields an Unavailable row and any step
/// failure a Failed row carrying the metrics gathered so far. Progress lines
/// go to log when given.
BenchReport run_full_benchmark(const BenchConfig& config, std::ostream* log = nullptr);

}  // namespace pqchain
