#pragma once

#include <span>
#include <string>
#include <string_view>

namespace pqchain {

enum class Family { MlDsa, Falcon, Hawk };

/// Display name: "ML-DSA", "Falcon", "Hawk".
std::string_view family_name(Family family);

/// Command-line spelling: "ml-dsa", "falcon", "hawk".
std::string_view family_flag(Family family);

/// Accepts the command-line spelling and the display name, case-insensitively.
/// Throws UnsupportedScheme for anything else.
Family parse_family(std::string_view text);

/// One concrete signature scheme, e.g. (MlDsa, "65").
///
/// Only the seven supported combinations can be constructed:
/// ML-DSA 44/65/87, Falcon 512/1024, Hawk 512/1024.
class AlgoConfig {
 public:
  /// Throws UnsupportedScheme for any other pair.
  AlgoConfig(Family family, std::string variant);

  Family family() const { return family_; }
  const std::string& variant() const { return variant_; }

  /// "ML-DSA-44", "Falcon-512", "Hawk-1024", ...
  std::string name() const;

  friend bool operator==(const AlgoConfig&, const AlgoConfig&) = default;

 private:
  Family family_;
  std::string variant_;
};

/// The seven supported schemes, in reporting order.
std::span<const AlgoConfig> all_schemes();

/// Supported variants of one family, in increasing security level.
std::span<const std::string_view> family_variants(Family family);

}  // namespace pqchain
