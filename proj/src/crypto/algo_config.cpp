#include "pqchain/crypto/algo_config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>
#include <vector>

#include "pqchain/errors.hpp"

namespace pqchain {

namespace {

constexpr std::array<std::string_view, 3> kMlDsaVariants{"44", "65", "87"};
constexpr std::array<std::string_view, 2> kFalconVariants{"512", "1024"};
constexpr std::array<std::string_view, 2> kHawkVariants{"512", "1024"};

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::MlDsa:
      return "ML-DSA";
    case Family::Falcon:
      return "Falcon";
    case Family::Hawk:
      return "Hawk";
  }
  return "?";
}

std::string_view family_flag(Family family) {
  switch (family) {
    case Family::MlDsa:
      return "ml-dsa";
    case Family::Falcon:
      return "falcon";
    case Family::Hawk:
      return "hawk";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  const std::string key = lower(text);
  if (key == "ml-dsa" || key == "ml_dsa" || key == "mldsa") return Family::MlDsa;
  if (key == "falcon") return Family::Falcon;
  if (key == "hawk") return Family::Hawk;
  throw UnsupportedScheme("unknown signature family '" + std::string(text) + "'");
}

std::span<const std::string_view> family_variants(Family family) {
  switch (family) {
    case Family::MlDsa:
      return kMlDsaVariants;
    case Family::Falcon:
      return kFalconVariants;
    case Family::Hawk:
      return kHawkVariants;
  }
  return {};
}

AlgoConfig::AlgoConfig(Family family, std::string variant)
    : family_(family), variant_(std::move(variant)) {
  const auto variants = family_variants(family_);
  if (std::find(variants.begin(), variants.end(), variant_) == variants.end()) {
    throw UnsupportedScheme(std::string(family_name(family_)) + " has no variant '" +
                            variant_ + "'");
  }
}

std::string AlgoConfig::name() const {
  return std::string(family_name(family_)) + "-" + variant_;
}

std::span<const AlgoConfig> all_schemes() {
  static const std::vector<AlgoConfig> schemes = [] {
    std::vector<AlgoConfig> out;
    for (Family family : {Family::MlDsa, Family::Falcon, Family::Hawk}) {
      for (std::string_view variant : family_variants(family)) {
        out.emplace_back(family, std::string(variant));
      }
    }
    return out;
  }();
  return schemes;
}

}  // namespace pqchain
