// toricqc command line. Talks to the library only through the C API.
//
// Exit status: 0 all checks passed, 1 a verification failed (or the library
// rejected the inputs), 2 usage error.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toricqc/toricqc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(tqc_status s, const char* what) {
  if (s == TQC_OK) return;
  std::string msg = std::string(what) + ": " + tqc_status_string(s);
  if (*tqc_last_error()) msg += " (" + std::string(tqc_last_error()) + ")";
  throw LibraryError(msg);
}

struct CodeDeleter {
  void operator()(tqc_lee_code* c) const { tqc_lee_code_destroy(c); }
};
struct CertDeleter {
  void operator()(tqc_certificate* c) const { tqc_certificate_destroy(c); }
};
struct MapDeleter {
  void operator()(tqc_interleaver* m) const { tqc_interleaver_destroy(m); }
};
using CodePtr = std::unique_ptr<tqc_lee_code, CodeDeleter>;
using CertPtr = std::unique_ptr<tqc_certificate, CertDeleter>;
using MapPtr = std::unique_ptr<tqc_interleaver, MapDeleter>;

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::int64_t> parse_vector(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  return out;
}

// "1,1,0;0,1,1" -> flattened rows of length n.
std::vector<std::int64_t> parse_generators(const std::string& s, int n) {
  std::vector<std::int64_t> flat;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) {
    const auto v = parse_vector(row);
    if (static_cast<int>(v.size()) != n) throw UsageError("generator '" + row + "' does not have " + std::to_string(n) + " entries");
    flat.insert(flat.end(), v.begin(), v.end());
  }
  if (flat.empty()) throw UsageError("no generators given");
  return flat;
}

CodePtr make_code(int q, int n, const std::string& generators) {
  tqc_lee_code* code = nullptr;
  if (generators.empty()) {
    const tqc_status s = tqc_lee_code_create_certified(q, n, &code);
    if (s == TQC_ERROR_NOT_CERTIFIED)
      throw UsageError("(q, n) = (" + std::to_string(q) + ", " + std::to_string(n) +
                       ") is not a certified instance; pass --generators");
    check(s, "building the certified code");
  } else {
    const auto flat = parse_generators(generators, n);
    check(tqc_lee_code_create(q, n, flat.data(), flat.size() / static_cast<std::size_t>(n), &code), "building the code");
  }
  return CodePtr(code);
}

int print_certificate(tqc_certificate* raw) {
  CertPtr cert(raw);
  std::size_t len = 0;
  tqc_certificate_json(cert.get(), nullptr, &len);
  std::string text(len, '\0');
  check(tqc_certificate_json(cert.get(), text.data(), &len), "rendering certificate");
  text.resize(len - 1);
  std::cout << text << '\n';
  int passed = 0;
  check(tqc_certificate_passed(cert.get(), &passed), "reading certificate");
  if (!passed) std::cerr << "verification FAILED\n";
  return passed ? kExitPass : kExitFail;
}

std::uint64_t parse_seed(const std::string& s) {
  std::uint64_t v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw UsageError("--seed must be a decimal 64-bit unsigned integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric quantum codes from perfect Lee codes: constructions and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tqc_version()));

  int q = 0, n = 0;
  std::string generators, point, format, seed_text = "1";
  std::int64_t samples = -1, loose_samples = 0;
  unsigned threads = 0;
  bool exhaustive = false;

  auto* verify = app.add_subcommand("verify", "Run a verification and print its certificate");
  verify->require_subcommand(1);
  auto* v_chain = verify->add_subcommand("chain", "Lattice chain Z^n > AZ^n > qZ^n");
  v_chain->add_option("--q", q, "7 (n=3) or 9 (n=4)")->required()->check(CLI::IsMember({7, 9}));
  auto* v_tiling = verify->add_subcommand("tiling", "Lee-sphere tiling of Z_q^n");
  auto* v_stab = verify->add_subcommand("stabilizers", "Even X/Z overlap for every stabilizer pair");
  for (auto* sub : {v_tiling, v_stab}) {
    sub->add_option("--q", q, "modulus")->required();
    sub->add_option("--n", n, "dimension")->required();
  }
  v_tiling->add_option("--generators", generators, "generator rows, e.g. '1,1,0;0,1,1'");

  auto* mindist = app.add_subcommand("mindist", "Minimum Mannheim distance of the code");
  mindist->add_option("--q", q, "modulus")->required();
  mindist->add_option("--n", n, "dimension")->required();
  mindist->add_option("--generators", generators, "generator rows, e.g. '1,1,0;0,1,1'");

  auto* interleave = app.add_subcommand("interleave", "Quantum interleaver");
  interleave->require_subcommand(1);
  auto* i_verify = interleave->add_subcommand("verify", "Burst-correction sweep over every translate");
  i_verify->add_option("--q", q, "modulus")->required();
  i_verify->add_option("--n", n, "dimension")->required();
  auto* ex_flag = i_verify->add_flag("--exhaustive", exhaustive, "every burst at every translate");
  auto* samples_opt = i_verify->add_option("--samples", samples, "number of random bursts")->check(CLI::NonNegativeNumber);
  i_verify->add_option("--seed", seed_text, "decimal 64-bit unsigned seed (default 1)");
  i_verify->add_option("--threads", threads, "worker threads (0 = all cores)");
  i_verify->add_option("--generators", generators, "generator rows, e.g. '1,1,0;0,1,1'");
  i_verify->add_option("--loose-samples", loose_samples,
                       "also report (not assert) failures for bursts with several errors per hypercube")
      ->check(CLI::NonNegativeNumber);
  ex_flag->excludes(samples_opt);

  auto* tables = app.add_subcommand("tables", "Rate and gain tables");
  tables->add_option("--format", format, "markdown | csv | json-lines")->required();

  auto* decode = app.add_subcommand("decode", "Nearest codeword and cross-section label of a point");
  decode->add_option("--q", q, "modulus")->required();
  decode->add_option("--n", n, "dimension")->required();
  decode->add_option("--point", point, "comma-separated coordinates")->required();
  decode->add_option("--generators", generators, "generator rows, e.g. '1,1,0;0,1,1'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*v_chain) {
      tqc_certificate* cert = nullptr;
      check(tqc_certify_chain(q, &cert), "chain verification");
      return print_certificate(cert);
    }
    if (*v_tiling) {
      const CodePtr code = make_code(q, n, generators);
      tqc_certificate* cert = nullptr;
      check(tqc_certify_tiling(code.get(), &cert), "tiling verification");
      return print_certificate(cert);
    }
    if (*v_stab) {
      if (n < 2 || n > 4) throw UsageError("--n must be 2, 3 or 4");
      if (q < 2) throw UsageError("--q must be at least 2");
      tqc_certificate* cert = nullptr;
      check(tqc_certify_stabilizers(q, n, &cert), "stabilizer verification");
      return print_certificate(cert);
    }
    if (*mindist) {
      const CodePtr code = make_code(q, n, generators);
      tqc_certificate* cert = nullptr;
      check(tqc_certify_min_distance(code.get(), &cert), "distance computation");
      return print_certificate(cert);
    }
    if (*i_verify) {
      const CodePtr code = make_code(q, n, generators);
      const std::uint64_t seed = parse_seed(seed_text);
      tqc_burst_mode mode = TQC_BURST_EXHAUSTIVE;
      std::int64_t count = 0;
      if (!exhaustive) {
        // Default: the full sweep in 3D, 10^6 samples otherwise.
        if (samples >= 0 || n != 3) {
          mode = TQC_BURST_SAMPLED;
          count = samples >= 0 ? samples : 1000000;
        }
      }
      tqc_certificate* cert = nullptr;
      check(tqc_certify_bursts(code.get(), mode, count, seed, threads, &cert), "burst verification");
      const int status = print_certificate(cert);
      if (loose_samples > 0 && status == kExitPass) {
        tqc_interleaver* raw = nullptr;
        check(tqc_interleaver_create(code.get(), &raw), "building interleaver");
        const MapPtr map(raw);
        std::int64_t checked = 0, bad = 0;
        check(tqc_loose_burst_statistics(map.get(), loose_samples, seed, &checked, &bad), "loose burst statistics");
        std::cout << "{\"loose_reading\":{\"checked\":" << checked << ",\"uncorrectable\":" << bad
                  << ",\"asserted\":false}}\n";
      }
      return status;
    }
    if (*tables) {
      std::size_t len = 0;
      const tqc_status probe = tqc_emit_tables(format.c_str(), nullptr, &len);
      if (probe == TQC_ERROR_INVALID_ARGUMENT) throw UsageError("unknown format '" + format + "' (markdown | csv | json-lines)");
      std::string text(len, '\0');
      check(tqc_emit_tables(format.c_str(), text.data(), &len), "emitting tables");
      text.resize(len - 1);
      std::cout << text;
      return kExitPass;
    }
    if (*decode) {
      const CodePtr code = make_code(q, n, generators);
      const auto p = parse_vector(point);
      if (static_cast<int>(p.size()) != n) throw UsageError("--point must have " + std::to_string(n) + " coordinates");
      std::vector<std::int64_t> codeword(static_cast<std::size_t>(n));
      int label = 0;
      check(tqc_lee_code_decode(code.get(), p.data(), p.size(), codeword.data(), &label), "decoding");
      std::cout << "{\"point\":[";
      for (int k = 0; k < n; ++k) std::cout << (k ? "," : "") << p[k];
      std::cout << "],\"codeword\":[";
      for (int k = 0; k < n; ++k) std::cout << (k ? "," : "") << codeword[k];
      std::cout << "],\"offset_index\":" << label << ",\"offset\":\"";
      if (label == 0) std::cout << "0";
      else std::cout << (label % 2 == 1 ? "+e" : "-e") << (label + 1) / 2;
      std::cout << "\"}\n";
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
