#include "pqchain/bench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <stdexcept>

namespace pqchain {

TimingStats TimingStats::from_samples(std::span<const double> samples_us) {
  if (samples_us.empty()) throw std::invalid_argument("no timing samples");
  TimingStats stats;
  double sum = 0;
  stats.min_us = samples_us.front();
  stats.max_us = samples_us.front();
  for (double s : samples_us) {
    sum += s;
    stats.min_us = std::min(stats.min_us, s);
    stats.max_us = std::max(stats.max_us, s);
  }
  stats.samples = samples_us.size();
  // Clamp so rounding never pushes the mean outside [min, max].
  stats.mean_us = std::clamp(sum / static_cast<double>(stats.samples), stats.min_us, stats.max_us);
  return stats;
}

std::string_view to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Complete:
      return "complete";
    case ReportStatus::Unavailable:
      return "unavailable";
    case ReportStatus::Failed:
      return "failed";
  }
  return "?";
}

std::optional<PublishedReference> published_reference(const AlgoConfig& scheme) {
  struct Row {
    const char* name;
    PublishedReference ref;
  };
  static constexpr Row kRows[] = {
      {"ML-DSA-44", {1312, 2420, 5092, 5092084, 78.9, 281.3, 97.5}},
      {"ML-DSA-65", {1952, 3309, 7261, 7261084, 138.4, 457.8, 144.5}},
      {"ML-DSA-87", {2592, 4627, 9859, 9859084, 200.3, 570.9, 234.1}},
      {"Falcon-512", {897, 658, 2497, 2497118, 5721.4, 206.1, 51.6}},
      {"Falcon-1024", {1793, 1275, 4905, 4904685, 16825.6, 401.9, 103.5}},
      {"Hawk-512", {1024, 555, 2651, 2651084, 1477.8, 31.4, 47.1}},
      {"Hawk-1024", {2440, 1221, 6149, 6149084, 9549.2, 70.0, 98.5}},
  };
  const std::string name = scheme.name();
  for (const Row& row : kRows) {
    if (name == row.name) return row.ref;
  }
  return std::nullopt;
}

std::vector<std::string> soft_ordering_warnings(std::span<const BenchReport> rows) {
  std::vector<std::string> warnings;
  for (Family family : {Family::MlDsa, Family::Falcon, Family::Hawk}) {
    // Complete rows of this family, ordered by security level.
    std::vector<const BenchReport*> members;
    for (std::string_view variant : family_variants(family)) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const BenchReport& r) {
        return r.complete() && r.scheme.family() == family && r.scheme.variant() == variant;
      });
      if (it != rows.end()) members.push_back(&*it);
    }
    for (std::size_t i = 1; i < members.size(); ++i) {
      const BenchReport& lower = *members[i - 1];
      const BenchReport& higher = *members[i];
      if (higher.verify_us_per_tx <= lower.verify_us_per_tx) {
        char line[256];
        std::snprintf(line, sizeof line,
                      "WARN: %s verify/tx is not increasing with security level: %s %.1f us, "
                      "%s %.1f us",
                      std::string(family_name(family)).c_str(), lower.scheme.name().c_str(),
                      lower.verify_us_per_tx, higher.scheme.name().c_str(),
                      higher.verify_us_per_tx);
        warnings.emplace_back(line);
      }
    }
  }
  return warnings;
}

}  // namespace pqchain
