#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pqchain/bench/bench.hpp"
#include "pqchain/cli/emit.hpp"
#include "pqchain/cli/options.hpp"
#include "test_support.hpp"

using namespace pqchain;
using namespace pqchain::cli;
using pqchain::testing::read_fixture;

namespace {

CliOptions parse(std::vector<const char*> args) {
  args.insert(args.begin(), "pqchain");
  return parse_args(static_cast<int>(args.size()), args.data());
}

int usage_code(std::vector<const char*> args) {
  try {
    parse(std::move(args));
  } catch (const UsageError& e) {
    return e.exit_code();
  }
  return -1;
}

int run_cli(std::vector<const char*> args, std::string& out, std::string& err) {
  args.insert(args.begin(), "pqchain");
  std::ostringstream o, e;
  const int code = run(static_cast<int>(args.size()), args.data(), o, e);
  out = o.str();
  err = e.str();
  return code;
}

// A complete row with known values, no benchmarking involved.
BenchReport sample_row() {
  BenchReport r(AlgoConfig(Family::Falcon, "512"));
  r.pk_bytes = 897;
  r.sk_bytes = 1281;
  r.sig_avg_bytes = 655.25;
  r.sig_max_bytes = 690;
  r.avg_tx_bytes = 2477.25;
  r.block_bytes = 2477334;
  r.keygen.mean_us = 5721.44;
  r.sign.mean_us = 206.06;
  r.verify_us_per_tx = 51.64;
  r.block_validate.mean_us = 51640.0;
  r.tx_count = 1000;
  r.tamper_detected = true;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("single scheme with default workload") {
  const CliOptions o = parse({"--family", "ml-dsa", "--variant", "44"});
  REQUIRE(o.schemes.size() == 1);
  CHECK(o.schemes[0] == AlgoConfig(Family::MlDsa, "44"));
  CHECK(o.keygen_iters == 100);
  CHECK(o.tx_count == 1000);
  CHECK(o.validate_iters == 100);
  CHECK(o.format == OutputFormat::Table);
  CHECK(o.out_path.empty());
}

TEST_CASE("no arguments: every available scheme, table to stdout") {
  const CliOptions o = parse({});
  CHECK(o.all_available());
  CHECK(o.format == OutputFormat::Table);
  CHECK(o.out_path.empty());
  CHECK_FALSE(o.list_only);
  CHECK(parse({"--all"}).all_available());
}

TEST_CASE("family alone expands to its variants") {
  const CliOptions o = parse({"--family", "falcon"});
  REQUIRE(o.schemes.size() == 2);
  CHECK(o.schemes[0].variant() == "512");
  CHECK(o.schemes[1].variant() == "1024");
}

TEST_CASE("workload and output flags") {
  const CliOptions o = parse({"--txs", "10", "--keygen-iters", "3", "--validate-iters", "4",
                              "--format", "json", "--out", "r.json"});
  CHECK(o.tx_count == 10);
  CHECK(o.keygen_iters == 3);
  CHECK(o.validate_iters == 4);
  CHECK(o.format == OutputFormat::Json);
  CHECK(o.out_path == "r.json");
  CHECK(parse({"--format", "csv"}).format == OutputFormat::Csv);
  CHECK(parse({"--list"}).list_only);
}

TEST_CASE("bad command lines are usage errors with exit code 2") {
  CHECK(usage_code({"--txs", "0"}) == kExitUsage);
  CHECK(usage_code({"--keygen-iters", "0"}) == kExitUsage);
  CHECK(usage_code({"--validate-iters", "0"}) == kExitUsage);
  CHECK(usage_code({"--txs", "lots"}) == kExitUsage);
  CHECK(usage_code({"--bogus"}) == kExitUsage);
  CHECK(usage_code({"--variant", "44"}) == kExitUsage);
  CHECK(usage_code({"--family", "haetae"}) == kExitUsage);
  CHECK(usage_code({"--family", "falcon", "--variant", "44"}) == kExitUsage);
  CHECK(usage_code({"--format", "xml"}) == kExitUsage);
  CHECK(usage_code({"--all", "--family", "hawk"}) == kExitUsage);
  CHECK(usage_code({"--help"}) == 0);

  std::string out, err;
  CHECK(run_cli({"--txs", "0"}, out, err) == kExitUsage);
  CHECK(out.empty());
  CHECK_FALSE(err.empty());
}

TEST_CASE("CSV header matches the golden fixture") {
  std::ostringstream out;
  write_csv(out, {});
  CHECK(out.str() == read_fixture("csv_header.txt") + "\n");
  CHECK(std::string(kCsvHeader) == read_fixture("csv_header.txt"));
}

TEST_CASE("CSV rows") {
  std::vector<BenchReport> rows{sample_row()};
  std::ostringstream out;
  write_csv(out, rows);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] ==
        "Falcon,512,897,1281,655.2,690,2477.2,2477334,5721.4,206.1,51.6,51640.0,1000");

  // Incomplete rows are omitted.
  BenchReport missing(AlgoConfig(Family::Hawk, "512"));
  missing.status = ReportStatus::Unavailable;
  rows.push_back(missing);
  std::ostringstream again;
  write_csv(again, rows);
  CHECK(lines_of(again.str()).size() == 2);
}

TEST_CASE("JSON parses back to the same rows") {
  std::vector<BenchReport> rows{sample_row()};
  BenchReport failed(AlgoConfig(Family::MlDsa, "87"));
  failed.status = ReportStatus::Failed;
  rows.push_back(failed);
  std::ostringstream out;
  write_json(out, rows);
  const auto doc = nlohmann::json::parse(out.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  const auto& row = doc[0];
  CHECK(row["scheme"] == "Falcon");
  CHECK(row["variant"] == "512");
  CHECK(row["pk_bytes"] == 897);
  CHECK(row["block_bytes"] == 2477334);
  CHECK(row["tx_count"] == 1000);
  CHECK(row["sign_us"].get<double>() == doctest::Approx(206.1));
  CHECK(row["verify_us_per_tx"].get<double>() == doctest::Approx(51.6));
  std::size_t keys = 0;
  for (auto it = row.begin(); it != row.end(); ++it) ++keys;
  CHECK(keys == 13);
}

TEST_CASE("report goes to the requested file; unwritable paths fail") {
  const std::vector<BenchReport> rows{sample_row()};
  CliOptions options;
  options.format = OutputFormat::Csv;
  const auto path = std::filesystem::temp_directory_path() / "pqchain_test_report.csv";
  options.out_path = path.string();
  std::ostringstream out, err;
  CHECK(emit_report(rows, options, out, err) == 0);
  CHECK(out.str().empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kCsvHeader);
  std::filesystem::remove(path);

  options.out_path = "/nonexistent-dir/report.csv";
  CHECK(emit_report(rows, options, out, err) != 0);
  CHECK(err.str().find("cannot write") != std::string::npos);
}

TEST_CASE("table lists measured and reference rows") {
  BenchReport missing(AlgoConfig(Family::Hawk, "512"));
  missing.status = ReportStatus::Unavailable;
  missing.error = "no backend";
  const std::vector<BenchReport> rows{sample_row(), missing};
  std::ostringstream out;
  write_table(out, rows);
  const std::string text = out.str();
  CHECK(text.find("Falcon-512") != std::string::npos);
  CHECK(text.find("measured") != std::string::npos);
  CHECK(text.find("reference") != std::string::npos);
  CHECK(text.find("2497118") != std::string::npos);
  CHECK(text.find("Hawk-512     unavailable: no backend") != std::string::npos);
}

TEST_CASE("backend listing") {
  std::ostringstream all;
  list_backends(all);
  const auto lines = lines_of(all.str());
  REQUIRE(lines.size() == 7);
  CHECK(lines[0].rfind("ML-DSA-44", 0) == 0);
  for (const auto& line : lines) {
    const bool hawk = line.rfind("Hawk", 0) == 0;
    if (!hawk) CHECK(line.find(" available") != std::string::npos);
  }
  std::ostringstream falcon;
  list_backends(falcon, Family::Falcon, std::string("1024"));
  CHECK(falcon.str() == "Falcon-1024  available\n");

  std::string out, err;
  CHECK(run_cli({"--list", "--family", "hawk"}, out, err) == 0);
  CHECK(lines_of(out).size() == 2);
}

TEST_CASE("end to end on a tiny workload") {
  std::string out, err;
  SUBCASE("available scheme, CSV") {
    CHECK(run_cli({"--family", "ml-dsa", "--variant", "44", "--txs", "4", "--keygen-iters", "2",
                   "--validate-iters", "2", "--format", "csv"},
                  out, err) == 0);
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].rfind("ML-DSA,44,1312,2560,2420.0,2420,5072.0,20372,", 0) == 0);
    CHECK(lines[1].substr(lines[1].rfind(',') + 1) == "4");
    CHECK(err.find("[ML-DSA-44]") != std::string::npos);
  }
  SUBCASE("requested scheme without a backend fails the run") {
    if (!is_available(AlgoConfig(Family::Hawk, "512"))) {
      CHECK(run_cli({"--family", "hawk", "--variant", "512", "--txs", "2", "--format", "csv"}, out,
                    err) == 1);
      CHECK(lines_of(out).size() == 1);
      CHECK(err.find("Hawk-512") != std::string::npos);
    }
  }
}
