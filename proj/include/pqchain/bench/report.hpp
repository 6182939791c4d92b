#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqchain/bench/timer.hpp"
#include "pqchain/crypto/algo_config.hpp"

namespace pqchain {

enum class ReportStatus { Complete, Unavailable, Failed };

std::string_view to_string(ReportStatus status);

/// One scheme's size and timing metrics: a row of CSV/JSON output.
struct BenchReport {
  AlgoConfig scheme;
  ReportStatus status = ReportStatus::Complete;
  // Set when status is not Complete.
  std::string error;

  std::size_t pk_bytes = 0;
  std::size_t sk_bytes = 0;
  double sig_avg_bytes = 0;
  // Largest signature observed in the run.
  std::size_t sig_max_bytes = 0;
  double avg_tx_bytes = 0;
  std::size_t block_bytes = 0;

  TimingStats keygen;
  TimingStats sign;
  TimingStats block_validate;
  double verify_us_per_tx = 0;

  std::size_t tx_count = 0;
  std::size_t keygen_iters = 0;
  std::size_t validate_iters = 0;
  bool tamper_detected = false;

  explicit BenchReport(AlgoConfig config) : scheme(std::move(config)) {}

  bool complete() const { return status == ReportStatus::Complete; }
};

/// Published measurements for one scheme (1000-transaction block; timings
/// from the original test machine, for side-by-side display only).
struct PublishedReference {
  std::size_t pk_bytes;
  std::size_t sig_bytes;
  std::size_t avg_tx_bytes;
  std::size_t block_bytes;
  double keygen_us;
  double sign_us;
  double verify_us_per_tx;
};

std::optional<PublishedReference> published_reference(const AlgoConfig& scheme);

/// One WARN line per family whose per-transaction verify time does not
/// increase with security level. Never affects exit status.
std::vector<std::string> soft_ordering_warnings(std::span<const BenchReport> rows);

}  // namespace pqchain
