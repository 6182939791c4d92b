#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pqchain/bytes.hpp"
#include "pqchain/crypto/crypto.hpp"

namespace pqchain::testing {

inline std::vector<AlgoConfig> available_schemes() {
  std::vector<AlgoConfig> out;
  for (const AlgoConfig& s : all_schemes()) {
    if (is_available(s)) out.push_back(s);
  }
  return out;
}

inline Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& b : out) b = static_cast<std::uint8_t>(byte(rng));
  return out;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(PQCHAIN_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

}  // namespace pqchain::testing
