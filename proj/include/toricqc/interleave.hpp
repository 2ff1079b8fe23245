#pragma once

// Quantum interleaver over a perfect Lee code: logical qubit (cross-section
// j, block b, codeword i) is stored on slot b of hypercube c_i + offset_j.
// A burst shaped like one Lee sphere then hits every constituent code block
// at most once.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricqc/lee.hpp"
#include "toricqc/toric.hpp"

namespace toricqc::interleave {

using intlat::Int;

struct LogicalIndex {
  int cross_section = 0;  // j in [0, 2n]
  int block = 0;          // b in [0, alpha)
  Int codeword = 0;       // i in [0, |C|)
  friend bool operator==(const LogicalIndex&, const LogicalIndex&) = default;
};

struct PhysicalSlot {
  Torus::Index hypercube = 0;
  int slot = 0;  // owned-face slot, orientation order
  friend bool operator==(const PhysicalSlot&, const PhysicalSlot&) = default;
};

class InterleaverMap {
 public:
  int q() const noexcept { return code_.q(); }
  int n() const noexcept { return code_.n(); }
  int alpha() const noexcept { return complex_.slots_per_hypercube(); }
  Int size() const noexcept { return static_cast<Int>(forward_.size()); }

  const lee::LeeCode& code() const noexcept { return code_; }
  const toric::CellComplex& complex() const noexcept { return complex_; }

  PhysicalSlot forward(const LogicalIndex& x) const;
  LogicalIndex inverse(const PhysicalSlot& p) const;

  /// Linear orders: logical = (j*alpha + b)*|C| + i; physical = face index.
  Int logical_linear(const LogicalIndex& x) const;
  LogicalIndex logical_from_linear(Int k) const;
  Int forward_linear(Int logical) const { return forward_[static_cast<std::size_t>(logical)]; }
  Int inverse_linear(Int face) const { return inverse_[static_cast<std::size_t>(face)]; }

  Int face_of(const PhysicalSlot& p) const;
  PhysicalSlot slot_of(Int face) const;

  /// Code block of a face after deinterleaving: j * blocks_per_section + i / q.
  Int block_of_face(Int face) const;
  Int blocks_per_section() const noexcept { return blocks_per_section_; }

 private:
  friend InterleaverMap build_interleaver(const lee::LeeCode&);
  explicit InterleaverMap(const lee::LeeCode& code);

  lee::LeeCode code_;
  toric::CellComplex complex_;
  Int blocks_per_section_ = 0;
  std::vector<Int> forward_;
  std::vector<Int> inverse_;
};

/// Throws Error(not_perfect) unless the code tiles the torus.
InterleaverMap build_interleaver(const lee::LeeCode& code);

struct CorrectionVerdict {
  bool correctable = true;
  // (cross_section, code block within the section) -> errors
  std::map<std::pair<int, Int>, int> per_block_error_counts;
  int max_count() const;
};

/// Maps every errored face back to its logical code block and tallies.
/// Correctable iff no block holds more than one error.
CorrectionVerdict deinterleave(const InterleaverMap& map, std::span<const toric::Face> errored_faces);

/// Every translate anchor of the Lee-sphere burst: all of Z_q^n.
std::vector<Torus::Index> all_burst_translates(int q, int n);

struct BurstPattern {
  Torus::Index anchor = 0;
  std::vector<toric::Face> errors;
};

/// Hypercubes of the sphere translate at `anchor`, in offset order.
std::vector<Torus::Index> translate_cells(const Torus& torus, Torus::Index anchor);

/// Per-hypercube choice (0 = no error, s+1 = face in slot s) to faces.
BurstPattern burst_from_choices(const toric::CellComplex& complex, Torus::Index anchor, std::span<const int> choices);

/// All (alpha+1)^(2n+1) patterns at one anchor, in odometer order over the
/// choice vector (first hypercube fastest).
class BurstEnumerator {
 public:
  BurstEnumerator(const toric::CellComplex& complex, Torus::Index anchor);

  Int total() const noexcept { return total_; }
  bool next(BurstPattern& out);

 private:
  const toric::CellComplex* complex_;
  Torus::Index anchor_;
  std::vector<int> choices_;
  Int total_;
  Int emitted_ = 0;
};

/// Portable seeded uniform sampling: mt19937_64 plus rejection sampling.
class SeededSampler {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/rejection-v1";
  explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// `count` patterns at one anchor, each hypercube choice uniform in [0, alpha].
std::vector<BurstPattern> sample_bursts(const toric::CellComplex& complex, Torus::Index anchor, Int count,
                                        std::uint64_t seed);

struct BurstMode {
  enum class Kind { exhaustive, sampled } kind = Kind::exhaustive;
  Int samples = 0;
  std::uint64_t seed = 0;

  static BurstMode exhaustive() { return {}; }
  static BurstMode sampled(Int count, std::uint64_t seed) { return {Kind::sampled, count, seed}; }
};

struct BurstSummary {
  int q = 0;
  int n = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::string rng_algorithm;
  Int sampled = 0;       // random bursts checked
  Int extremal = 0;      // deterministic all-hypercubes-errored bursts
  Int exhaustive = 0;    // bursts from the full sweep
  Int total_checked = 0;
  Int failures = 0;
  int max_block_count = 0;
  bool passed() const noexcept { return failures == 0 && total_checked > 0; }
};

/// Runs the burst sweep over every translate. `threads` = 0 picks the
/// hardware concurrency; results do not depend on it.
BurstSummary verify_burst_correction(const InterleaverMap& map, const BurstMode& mode, unsigned threads = 0);
BurstSummary verify_burst_correction(int q, int n, const BurstMode& mode, unsigned threads = 0);

/// Failure statistics for bursts that may put several errors on one
/// hypercube (each hypercube of the translate errs on a uniform random subset
/// of its faces). Reported only; such bursts are outside the certified model.
struct LooseBurstStatistics {
  Int checked = 0;
  Int uncorrectable = 0;
};
LooseBurstStatistics loose_burst_statistics(const InterleaverMap& map, Int samples, std::uint64_t seed);

/// [[alpha q^n, alpha q^(n-1), t_i = q]]; distance is not claimed.
toric::CodeParams interleaved_params(int q, int n);

}  // namespace toricqc::interleave
