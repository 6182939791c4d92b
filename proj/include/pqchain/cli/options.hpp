#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pqchain/crypto/algo_config.hpp"
#include "pqchain/errors.hpp"

namespace pqchain::cli {

enum class OutputFormat { Csv, Json, Table };

struct CliOptions {
  // Explicitly requested schemes; empty means every available scheme.
  std::vector<AlgoConfig> schemes;
  std::size_t tx_count = 1000;
  std::size_t keygen_iters = 100;
  std::size_t validate_iters = 100;
  // Empty means standard output.
  std::string out_path;
  OutputFormat format = OutputFormat::Table;
  bool list_only = false;
  // --family filter, kept for --list.
  std::optional<Family> family;
  std::optional<std::string> variant;

  bool all_available() const { return schemes.empty(); }
};

/// Bad command line, or a help request (exit_code 0, message is the help text).
class UsageError : public Error {
 public:
  UsageError(const std::string& message, int exit_code)
      : Error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

inline constexpr int kExitUsage = 2;

/// Throws UsageError on unknown flags, bad values or conflicting flags.
CliOptions parse_args(int argc, const char* const* argv);

}  // namespace pqchain::cli
