#pragma once

// Radius-1 Lee-sphere codes in Z_q^n: enumeration, Mannheim metric, tiling
// and unique nearest-codeword decoding.

#include <cstdint>
#include <vector>

#include "toricqc/intlat.hpp"
#include "toricqc/torus.hpp"

namespace toricqc::lee {

using intlat::Int;
using intlat::LatticeVector;

/// Representative of x mod q in [-(q-1)/2, (q-1)/2]. q must be odd and >= 3.
Int symmetric_residue(Int x, Int q);

/// Sum of absolute symmetric residues.
Int mannheim_weight(const LatticeVector& v, Int q);

/// Offsets of the radius-1 Lee sphere in the fixed order
/// (0, +e1, -e1, +e2, -e2, ...). The position in this list is the
/// cross-section label of a point relative to its sphere center.
struct LeeSphere {
  int n = 0;
  std::vector<LatticeVector> offsets;
};

LeeSphere lee_sphere(int n);

class LeeCode {
 public:
  int q() const noexcept { return torus_.q(); }
  int n() const noexcept { return torus_.n(); }
  const Torus& torus() const noexcept { return torus_; }
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }

  /// Codewords in enumeration order (index 0 is the null codeword).
  const std::vector<LatticeVector>& codewords() const noexcept { return codewords_; }
  std::size_t size() const noexcept { return codewords_.size(); }

  /// Torus index of codeword i.
  Torus::Index codeword_point(std::size_t i) const { return codeword_points_[i]; }

  /// Position of the point in the enumeration, or -1 if it is not a codeword.
  std::int64_t codeword_index(Torus::Index point) const { return index_of_point_[point]; }
  bool is_codeword(const LatticeVector& v) const;

  /// How many (codeword, offset) pairs land on each torus point.
  const std::vector<int>& coverage() const noexcept { return coverage_; }
  bool perfect() const noexcept { return perfect_; }

  /// Only meaningful when perfect(): sphere center (codeword index) and
  /// offset label of every torus point.
  std::int64_t center_of(Torus::Index point) const { return center_[point]; }
  int label_of(Torus::Index point) const { return label_[point]; }

 private:
  friend LeeCode enumerate_codewords(const std::vector<LatticeVector>&, Int, int);
  LeeCode(int q, int n) : torus_(q, n) {}

  Torus torus_;
  std::vector<LatticeVector> generators_;
  std::vector<LatticeVector> codewords_;
  std::vector<Torus::Index> codeword_points_;
  std::vector<std::int64_t> index_of_point_;
  std::vector<int> coverage_;
  std::vector<std::int64_t> center_;
  std::vector<int> label_;
  bool perfect_ = false;
};

/// Additive closure of the generators mod q, starting from the null codeword.
/// For each generator g the current subgroup H is extended by the cosets
/// H + g, H + 2g, ... until kg falls back into H, so codeword i is the
/// mixed-radix combination of generator multiples.
LeeCode enumerate_codewords(const std::vector<LatticeVector>& generators, Int q, int n);

/// Minimum Mannheim weight over nonzero codewords. Throws on the trivial code.
Int minimum_distance(const LeeCode& code);

/// True iff the radius-1 spheres around the codewords cover Z_q^n exactly once.
bool tiling_check(const LeeCode& code);

struct DecodeResult {
  LatticeVector codeword;
  int offset_index = 0;
};

/// Unique (codeword, offset) with codeword + offset ≡ point. Throws
/// Error(not_perfect) when the code does not tile.
DecodeResult decode_nearest(const LatticeVector& point, const LeeCode& code);

/// The two certified perfect codes and their scaling matrices.
struct CertifiedInstance {
  int q = 0;
  int n = 0;
  intlat::IntMatrix scaling{1};
  std::vector<LatticeVector> generators;
};

bool is_certified(int q, int n) noexcept;
CertifiedInstance certified_instance(int q, int n);
LeeCode certified_code(int q, int n);

}  // namespace toricqc::lee
