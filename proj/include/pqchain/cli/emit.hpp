#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pqchain/bench/report.hpp"
#include "pqchain/cli/options.hpp"

namespace pqchain::cli {

inline constexpr std::string_view kCsvHeader =
    "scheme,variant,pk_bytes,sk_bytes,sig_avg_bytes,sig_max_bytes,avg_tx_bytes,block_bytes,"
    "keygen_us,sign_us,verify_us_per_tx,block_validate_us,tx_count";

// CSV and JSON carry complete rows only; timings and averaged sizes are
// written with one decimal place.
void write_csv(std::ostream& out, std::span<const BenchReport> rows);
void write_json(std::ostream& out, std::span<const BenchReport> rows);

// Human-readable table, every row including unavailable and failed ones,
// with the published reference values alongside.
void write_table(std::ostream& out, std::span<const BenchReport> rows);

/// Writes rows in the configured format to options.out_path, or to out when
/// no path is set. Returns 0, or 1 when the output file cannot be written.
int emit_report(std::span<const BenchReport> rows, const CliOptions& options, std::ostream& out,
                std::ostream& err);

/// One line per supported scheme with its availability, optionally filtered.
void list_backends(std::ostream& out, std::optional<Family> family = std::nullopt,
                   std::optional<std::string> variant = std::nullopt);

/// The whole command: parse, run, emit. Returns the process exit code: 0 iff
/// every requested scheme produced a complete report (tamper sentinel
/// included) and the output was written.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pqchain::cli
