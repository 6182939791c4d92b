// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Usage: acceptance <path-to-pqchain-binary>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pqchain/bench/bench.hpp"
#include "pqchain/chain/blockchain.hpp"
#include "pqchain/chain/wallet.hpp"
#include "pqchain/cli/emit.hpp"
#include "pqchain/cli/options.hpp"
#include "pqchain/crypto/crypto.hpp"

using namespace pqchain;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("note " + what); }
};

std::vector<AlgoConfig> available() {
  std::vector<AlgoConfig> out;
  for (const AlgoConfig& s : all_schemes()) {
    if (is_available(s)) out.push_back(s);
  }
  return out;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

struct Expected {
  const char* name;
  std::size_t pk;
  std::size_t fixed_sig;  // 0 when variable-length
  double mean_sig;        // variable-length schemes only
  std::size_t block_1000;
};

constexpr Expected kExpected[] = {
    {"ML-DSA-44", 1312, 2420, 0, 5092084},  {"ML-DSA-65", 1952, 3309, 0, 7261084},
    {"ML-DSA-87", 2592, 4627, 0, 9859084},  {"Falcon-512", 897, 0, 658, 2497118},
    {"Falcon-1024", 1793, 0, 1275, 4904685}, {"Hawk-512", 1024, 555, 0, 2651084},
    {"Hawk-1024", 2440, 1221, 0, 6149084},
};

const Expected& expected(const AlgoConfig& s) {
  for (const auto& e : kExpected) {
    if (s.name() == e.name) return e;
  }
  throw std::logic_error("no expectation for " + s.name());
}

void note_missing(Outcome& o) {
  for (const AlgoConfig& s : all_schemes()) {
    if (!is_available(s)) o.note(s.name() + " skipped: backend unavailable");
  }
}

// Exact sizes; Falcon mean signature within 5%.
Outcome exact_sizes() {
  Outcome o;
  for (const AlgoConfig& s : available()) {
    const Expected& e = expected(s);
    auto crypto = create_crypto(s);
    const KeyPair kp = crypto->generate_keypair();
    o.require(kp.public_key.size() == e.pk,
              s.name() + " pk " + std::to_string(kp.public_key.size()) + " == " +
                  std::to_string(e.pk));
    std::size_t lo = SIZE_MAX, hi = 0, total = 0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
      Bytes msg(8);
      for (int b = 0; b < 8; ++b) msg[b] = static_cast<std::uint8_t>(i >> (8 * b));
      const std::size_t len = crypto->sign(msg, kp.secret_key).size();
      lo = std::min(lo, len);
      hi = std::max(hi, len);
      total += len;
    }
    const double mean = static_cast<double>(total) / n;
    if (e.fixed_sig) {
      o.require(lo == e.fixed_sig && hi == e.fixed_sig,
                s.name() + " sig " + std::to_string(lo) + ".." + std::to_string(hi) + " == " +
                    std::to_string(e.fixed_sig) + " over 1000 signatures");
    } else {
      const double dev = std::abs(mean - e.mean_sig) / e.mean_sig;
      o.require(dev <= 0.05, s.name() + fmt(" mean sig %.1f vs %.0f (%.2f%%, limit 5%%)", mean,
                                            e.mean_sig, 100 * dev));
    }
  }
  note_missing(o);
  return o;
}

// Serialized block == 84 + sum of transactions, and within 1% of the
// reference block sizes, for 1000-transaction blocks.
Outcome block_size_identity() {
  Outcome o;
  for (const AlgoConfig& s : available()) {
    std::shared_ptr<Crypto> crypto = create_crypto(s);
    Blockchain chain(crypto);
    Wallet alice = Wallet::generate(*crypto);
    const Wallet bob = Wallet::generate(*crypto);
    std::vector<Transaction> txs;
    std::size_t sum = 0;
    for (int i = 0; i < 1000; ++i) {
      txs.push_back(alice.create_transaction(bob.public_key(), 1, *crypto));
      sum += serialize_transaction(txs.back()).size();
    }
    const Block block = chain.create_block(std::move(txs));
    const std::size_t bytes = serialize_block(block).size();
    o.require(bytes == kBlockOverhead + sum && serialized_block_size(block) == bytes,
              s.name() + " block " + std::to_string(bytes) + " == 84 + " + std::to_string(sum));
    const double ref = static_cast<double>(expected(s).block_1000);
    const double dev = std::abs(static_cast<double>(bytes) - ref) / ref;
    o.require(dev <= 0.01, s.name() + fmt(" block vs reference %.0f: %.3f%% (limit 1%%)", ref,
                                          100 * dev));
  }
  note_missing(o);
  return o;
}

// Single-bit tampering of each block region, with the expected failure class.
Outcome tamper_matrix() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t positions = 0, misses = 0;
  std::map<std::string, std::size_t> per_class;

  auto expect = [&](const Blockchain& chain, const Block& b, const ValidationResult& want,
                    const std::string& cls) {
    ++positions;
    ++per_class[cls];
    const ValidationResult got = chain.validate_block(b);
    if (got != want) {
      ++misses;
      if (misses <= 5) o.require(false, cls + ": got " + to_string(got) + ", want " + to_string(want));
    }
  };

  for (const AlgoConfig& s : available()) {
    std::shared_ptr<Crypto> crypto = create_crypto(s);
    Blockchain chain(crypto);
    Wallet alice = Wallet::generate(*crypto);
    const Wallet bob = Wallet::generate(*crypto);
    std::vector<Transaction> txs;
    for (int i = 0; i < 16; ++i) txs.push_back(alice.create_transaction(bob.public_key(), i + 1, *crypto));
    const Block good = chain.create_block(std::move(txs));
    if (!chain.validate_block(good).ok()) {
      o.require(false, s.name() + " untampered block rejected");
      continue;
    }
    const std::size_t n_tx = good.transactions.size();

    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t t = rng() % n_tx;

      // (a) signature bit
      {
        Block b = good;
        Bytes& sig = b.transactions[t].signature;
        flip_bit(sig, rng() % (8 * sig.size()));
        expect(chain, b, ValidationResult::bad_block_hash(), "signature");
        b.hash = compute_block_hash(b);
        expect(chain, b, ValidationResult::bad_signature(t), "signature, re-sealed");
      }
      // (b) body bit: sender key, recipient key, amount or nonce
      {
        Block b = good;
        Transaction& tx = b.transactions[t];
        switch (rng() % 4) {
          case 0:
            flip_bit(tx.sender_pk, rng() % (8 * tx.sender_pk.size()));
            break;
          case 1:
            flip_bit(tx.recipient_pk, rng() % (8 * tx.recipient_pk.size()));
            break;
          case 2:
            tx.amount ^= 1ull << (rng() % 64);
            break;
          default:
            tx.nonce ^= 1ull << (rng() % 64);
            break;
        }
        expect(chain, b, ValidationResult::bad_block_hash(), "body");
        b.hash = compute_block_hash(b);
        expect(chain, b, ValidationResult::bad_signature(t), "body, re-sealed");
      }
      // (c) stored hash bit
      {
        Block b = good;
        flip_bit(b.hash, rng() % (8 * kHashSize));
        expect(chain, b, ValidationResult::bad_block_hash(), "block hash");
      }
      // (d) prev_hash bit
      {
        Block b = good;
        flip_bit(b.prev_hash, rng() % (8 * kHashSize));
        expect(chain, b, ValidationResult::bad_linkage(), "prev_hash");
        b.hash = compute_block_hash(b);
        expect(chain, b, ValidationResult::bad_linkage(), "prev_hash, re-sealed");
      }
    }
  }
  o.require(positions >= 1000, "positions " + std::to_string(positions) + " >= 1000");
  o.require(misses == 0, "misses " + std::to_string(misses) + " == 0");
  for (const auto& [cls, n] : per_class) o.note(cls + ": " + std::to_string(n));
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Default CLI run: exit 0, one complete CSV row per available scheme, with
// 100 / 1000 / 100 iterations, in under five minutes.
Outcome workflow(const std::string& binary) {
  Outcome o;
  const cli::CliOptions defaults = cli::parse_args(1, std::vector<const char*>{"pqchain"}.data());
  o.require(defaults.keygen_iters == 100 && defaults.tx_count == 1000 &&
                defaults.validate_iters == 100 && defaults.all_available(),
            "defaults are 100 keygens, 1000 signings, 100 validations, all schemes");

  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = dir / "pqchain_acceptance.csv";
  const auto log = dir / "pqchain_acceptance.log";
  std::filesystem::remove(csv);
  const std::string cmd = "\"" + binary + "\" --format csv --out \"" + csv.string() + "\" 2> \"" +
                          log.string() + "\"";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(status == 0, "exit status " + std::to_string(status) + " == 0");
  o.require(seconds < 300, fmt("runtime %.1f s < 300 s", seconds));

  std::istringstream rows(slurp(csv));
  std::string line;
  std::getline(rows, line);
  o.require(line == cli::kCsvHeader, "CSV header");
  std::vector<std::string> got;
  while (std::getline(rows, line)) got.push_back(line);
  const auto schemes = available();
  o.require(got.size() == schemes.size(), std::to_string(got.size()) + " rows for " +
                                              std::to_string(schemes.size()) + " schemes");

  const std::string progress = slurp(log);
  for (std::size_t i = 0; i < schemes.size() && i < got.size(); ++i) {
    const AlgoConfig& s = schemes[i];
    std::vector<std::string> fields;
    std::stringstream ss(got[i]);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    bool ok = fields.size() == 13 && fields[0] == family_name(s.family()) &&
              fields[1] == s.variant() && fields[12] == "1000";
    for (std::size_t f = 2; ok && f < 12; ++f) ok = std::stod(fields[f]) > 0;
    o.require(ok, s.name() + " row complete: " + got[i]);
    const std::string tag = "[" + s.name() + "] ";
    o.require(progress.find(tag + "key generation x100") != std::string::npos &&
                  progress.find(tag + "signing x1000") != std::string::npos &&
                  progress.find(tag + "validation x100\n") != std::string::npos,
              s.name() + " ran 100 keygens, 1000 signings, 100 validations");
  }
  std::istringstream warns(progress);
  while (std::getline(warns, line)) {
    if (line.rfind("WARN", 0) == 0) o.note(line);
  }
  std::filesystem::remove(csv);
  std::filesystem::remove(log);
  return o;
}

// Roundtrip and forgery rejection at several message lengths.
Outcome crypto_roundtrip() {
  Outcome o;
  std::mt19937_64 rng(77);
  for (const AlgoConfig& s : available()) {
    auto crypto = create_crypto(s);
    std::size_t trials = 0, failures = 0;
    for (std::size_t len : {0u, 1u, 32u, 1024u, 65536u}) {
      KeyPair kp, other;
      for (int t = 0; t < 100; ++t) {
        if (t % 20 == 0) {
          kp = crypto->generate_keypair();
          other = crypto->generate_keypair();
        }
        ++trials;
        const Bytes msg = random_bytes(rng, len);
        const Signature sig = crypto->sign(msg, kp.secret_key);
        bool ok = crypto->verify(msg, sig.view(), kp.public_key);

        Bytes bad_sig = sig.bytes;
        flip_bit(bad_sig, rng() % (8 * bad_sig.size()));
        ok = ok && !crypto->verify(msg, bad_sig, kp.public_key);

        Bytes bad_msg = msg;
        if (bad_msg.empty()) {
          bad_msg.push_back(static_cast<std::uint8_t>(rng()));
        } else {
          flip_bit(bad_msg, rng() % (8 * bad_msg.size()));
        }
        ok = ok && !crypto->verify(bad_msg, sig.view(), kp.public_key);
        ok = ok && !crypto->verify(msg, sig.view(), other.public_key);
        if (!ok) ++failures;
      }
    }
    o.require(failures == 0, s.name() + ": " + std::to_string(trials) + " trials, " +
                                 std::to_string(failures) + " failures");
  }
  note_missing(o);
  return o;
}

// Non-monotone verify times produce WARN lines and nothing else.
Outcome soft_ordering(const std::string& binary) {
  Outcome o;
  auto row = [](Family f, const char* v, double verify) {
    BenchReport r(AlgoConfig(f, v));
    r.verify_us_per_tx = verify;
    return r;
  };
  const std::vector<BenchReport> monotone{row(Family::MlDsa, "44", 97.5),
                                          row(Family::MlDsa, "65", 144.5),
                                          row(Family::MlDsa, "87", 234.1)};
  o.require(soft_ordering_warnings(monotone).empty(), "monotone rows: no warning");
  const std::vector<BenchReport> inverted{row(Family::MlDsa, "44", 150.0),
                                          row(Family::MlDsa, "65", 144.5),
                                          row(Family::Falcon, "512", 120.0),
                                          row(Family::Falcon, "1024", 103.5)};
  const auto warnings = soft_ordering_warnings(inverted);
  bool all_warn = warnings.size() == 2;
  for (const auto& w : warnings) all_warn = all_warn && w.rfind("WARN:", 0) == 0;
  o.require(all_warn, "two inversions: " + std::to_string(warnings.size()) + " WARN lines");
  for (const auto& w : warnings) o.note(w);

  // A real run exits 0 whatever the ordering turns out to be.
  const std::string cmd = "\"" + binary +
                          "\" --family ml-dsa --txs 4 --keygen-iters 1 --validate-iters 1 "
                          "--format csv > /dev/null 2>&1";
  o.require(std::system(cmd.c_str()) == 0, "small ML-DSA run exits 0");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <pqchain-binary>\n";
    return 2;
  }
  const std::string binary = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact key and signature sizes", exact_sizes},
      {"block-size identity (1000 transactions)", block_size_identity},
      {"tamper detection matrix", tamper_matrix},
      {"default workflow run", [&] { return workflow(binary); }},
      {"crypto roundtrip and forgery rejection", crypto_roundtrip},
      {"soft ordering warnings", [&] { return soft_ordering(binary); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = check();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << fmt(" (%.1f s)", seconds) << "\n";
    for (const auto& d : o.details) std::cout << "       " << d << "\n";
    std::cout << std::flush;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
