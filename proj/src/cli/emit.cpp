#include "pqchain/cli/emit.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "pqchain/bench/bench.hpp"
#include "pqchain/crypto/crypto.hpp"

namespace pqchain::cli {

namespace {

std::string fixed1(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

double round1(double value) { return std::stod(fixed1(value)); }

}  // namespace

void write_csv(std::ostream& out, std::span<const BenchReport> rows) {
  out << kCsvHeader << "\n";
  for (const BenchReport& r : rows) {
    if (!r.complete()) continue;
    out << family_name(r.scheme.family()) << ',' << r.scheme.variant() << ',' << r.pk_bytes << ','
        << r.sk_bytes << ',' << fixed1(r.sig_avg_bytes) << ',' << r.sig_max_bytes << ','
        << fixed1(r.avg_tx_bytes) << ',' << r.block_bytes << ',' << fixed1(r.keygen.mean_us)
        << ',' << fixed1(r.sign.mean_us) << ',' << fixed1(r.verify_us_per_tx) << ','
        << fixed1(r.block_validate.mean_us) << ',' << r.tx_count << "\n";
  }
}

void write_json(std::ostream& out, std::span<const BenchReport> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const BenchReport& r : rows) {
    if (!r.complete()) continue;
    doc.push_back({
        {"scheme", family_name(r.scheme.family())},
        {"variant", r.scheme.variant()},
        {"pk_bytes", r.pk_bytes},
        {"sk_bytes", r.sk_bytes},
        {"sig_avg_bytes", round1(r.sig_avg_bytes)},
        {"sig_max_bytes", r.sig_max_bytes},
        {"avg_tx_bytes", round1(r.avg_tx_bytes)},
        {"block_bytes", r.block_bytes},
        {"keygen_us", round1(r.keygen.mean_us)},
        {"sign_us", round1(r.sign.mean_us)},
        {"verify_us_per_tx", round1(r.verify_us_per_tx)},
        {"block_validate_us", round1(r.block_validate.mean_us)},
        {"tx_count", r.tx_count},
    });
  }
  out << doc.dump(2) << "\n";
}

void write_table(std::ostream& out, std::span<const BenchReport> rows) {
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %-9s %6s %6s %8s %9s %9s %10s %10s %10s %11s\n",
                "scheme", "source", "pk", "sk", "sig", "tx", "block", "keygen_us", "sign_us",
                "verify_us", "validate_us");
  out << line;
  for (const BenchReport& r : rows) {
    const std::string name = r.scheme.name();
    if (r.complete()) {
      std::snprintf(line, sizeof line,
                    "%-12s %-9s %6zu %6zu %8.1f %9.1f %9zu %10.1f %10.1f %10.1f %11.1f\n",
                    name.c_str(), "measured", r.pk_bytes, r.sk_bytes, r.sig_avg_bytes,
                    r.avg_tx_bytes, r.block_bytes, r.keygen.mean_us, r.sign.mean_us,
                    r.verify_us_per_tx, r.block_validate.mean_us);
      out << line;
    } else {
      out << name << std::string(name.size() < 12 ? 13 - name.size() : 1, ' ')
          << to_string(r.status) << ": " << r.error << "\n";
    }
    if (auto ref = published_reference(r.scheme)) {
      std::snprintf(line, sizeof line,
                    "%-12s %-9s %6zu %6s %8zu %9zu %9zu %10.1f %10.1f %10.1f %11s\n", "",
                    "reference", ref->pk_bytes, "", ref->sig_bytes, ref->avg_tx_bytes,
                    ref->block_bytes, ref->keygen_us, ref->sign_us, ref->verify_us_per_tx, "");
      out << line;
    }
  }
  if (!rows.empty()) {
    const BenchReport& first = rows.front();
    out << "\ntimings: mean over " << first.keygen_iters << " keygens, " << first.tx_count
        << " signings, " << first.validate_iters
        << " block validations; verify_us = block validation / tx_count\n";
    out << "ranges (min..max us):\n";
    for (const BenchReport& r : rows) {
      if (!r.complete()) continue;
      std::snprintf(line, sizeof line,
                    "  %-12s keygen %.1f..%.1f  sign %.1f..%.1f  validate %.1f..%.1f\n",
                    r.scheme.name().c_str(), r.keygen.min_us, r.keygen.max_us, r.sign.min_us,
                    r.sign.max_us, r.block_validate.min_us, r.block_validate.max_us);
      out << line;
    }
  }
}

int emit_report(std::span<const BenchReport> rows, const CliOptions& options, std::ostream& out,
                std::ostream& err) {
  std::ostringstream buffer;
  switch (options.format) {
    case OutputFormat::Csv:
      write_csv(buffer, rows);
      break;
    case OutputFormat::Json:
      write_json(buffer, rows);
      break;
    case OutputFormat::Table:
      write_table(buffer, rows);
      break;
  }
  if (options.out_path.empty()) {
    out << buffer.str() << std::flush;
    return out ? 0 : 1;
  }
  std::ofstream file(options.out_path, std::ios::binary | std::ios::trunc);
  if (file) file << buffer.str();
  file.close();
  if (!file) {
    err << "error: cannot write report to '" << options.out_path << "'\n";
    return 1;
  }
  return 0;
}

void list_backends(std::ostream& out, std::optional<Family> family,
                   std::optional<std::string> variant) {
  for (const AlgoConfig& scheme : all_schemes()) {
    if (family && scheme.family() != *family) continue;
    if (variant && scheme.variant() != *variant) continue;
    const std::string name = scheme.name();
    out << name << std::string(name.size() < 12 ? 13 - name.size() : 1, ' ')
        << (is_available(scheme) ? "available" : "unavailable") << "\n";
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliOptions options;
  try {
    options = parse_args(argc, argv);
  } catch (const UsageError& e) {
    (e.exit_code() == 0 ? out : err) << e.what() << "\n";
    return e.exit_code();
  }

  if (options.list_only) {
    list_backends(out, options.family, options.variant);
    return 0;
  }

  std::vector<AlgoConfig> schemes = options.schemes;
  if (options.all_available()) {
    for (const AlgoConfig& scheme : all_schemes()) {
      if (is_available(scheme)) schemes.push_back(scheme);
    }
  }

  // Schemes run one after another; nothing else runs during timed regions.
  std::vector<BenchReport> rows;
  rows.reserve(schemes.size());
  for (const AlgoConfig& scheme : schemes) {
    const BenchConfig config(scheme, options.keygen_iters, options.tx_count,
                             options.validate_iters);
    rows.push_back(run_full_benchmark(config, &err));
  }

  int code = 0;
  for (const BenchReport& r : rows) {
    if (!r.complete() || !r.tamper_detected) {
      err << "error: " << r.scheme.name() << " " << to_string(r.status) << ": " << r.error << "\n";
      code = 1;
    }
  }
  for (const std::string& warning : soft_ordering_warnings(rows)) err << warning << "\n";

  if (emit_report(rows, options, out, err) != 0) code = 1;
  return code;
}

}  // namespace pqchain::cli
