#include "pqchain/cli/options.hpp"

#include <CLI11.hpp>

#include <map>

namespace pqchain::cli {

CliOptions parse_args(int argc, const char* const* argv) {
  CLI::App app{"Post-quantum signature blockchain benchmark"};
  app.name(argc > 0 && argv[0] ? argv[0] : "pqchain");

  CliOptions options;
  std::string family_text;
  std::string variant_text;
  std::string format_text = "table";
  bool all = false;

  auto* family_opt =
      app.add_option("--family", family_text, "Signature family: ml-dsa, falcon or hawk");
  auto* variant_opt =
      app.add_option("--variant", variant_text, "Variant: 44/65/87 (ML-DSA), 512/1024 (Falcon, Hawk)");
  auto* all_flag = app.add_flag("--all", all, "Run every available scheme (default)");
  app.add_option("--txs", options.tx_count, "Transactions per block")
      ->check(CLI::PositiveNumber);
  app.add_option("--keygen-iters", options.keygen_iters, "Timed key generations")
      ->check(CLI::PositiveNumber);
  app.add_option("--validate-iters", options.validate_iters, "Timed block validations")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", options.out_path, "Write the report to PATH instead of stdout");
  app.add_option("--format", format_text, "Report format")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_flag("--list", options.list_only, "List backends and their availability");
  all_flag->excludes(family_opt);
  variant_opt->needs(family_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), 0);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what(), kExitUsage);
  }

  static const std::map<std::string, OutputFormat> kFormats{
      {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}, {"table", OutputFormat::Table}};
  options.format = kFormats.at(format_text);

  try {
    if (!family_text.empty()) {
      options.family = parse_family(family_text);
      if (!variant_text.empty()) {
        options.variant = variant_text;
        options.schemes.emplace_back(*options.family, variant_text);
      } else {
        for (std::string_view v : family_variants(*options.family)) {
          options.schemes.emplace_back(*options.family, std::string(v));
        }
      }
    }
  } catch (const UnsupportedScheme& e) {
    throw UsageError(e.what(), kExitUsage);
  }
  return options;
}

}  // namespace pqchain::cli
