#pragma once

// Exact integer-lattice algebra over Z^n. Row-vector convention throughout:
// a vector x acts on a matrix m as x·m, and the lattice generated by m is the
// integer span of its rows.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace toricqc::intlat {

using Int = std::int64_t;

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

LatticeVector unit_vector(std::size_t n, std::size_t axis, Int scale = 1);

class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
  explicit IntMatrix(const std::vector<LatticeVector>& rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, Int q);

  std::size_t dim() const noexcept { return n_; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  LatticeVector row(std::size_t r) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// x·m
LatticeVector left_multiply(const LatticeVector& x, const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& m);

struct HermiteDecomposition {
  IntMatrix form;        // H: upper triangular, positive pivots, 0 <= H(r,c) < H(c,c) for r < c
  IntMatrix transform;   // U: unimodular, U·m = H
};

/// Row-style Hermite normal form. Throws Error(singular_matrix) on singular input.
HermiteDecomposition hermite_decomposition(const IntMatrix& m);
IntMatrix hermite_form(const IntMatrix& m);

/// Integer x with x·m = v, if one exists.
std::optional<LatticeVector> solve_left(const IntMatrix& m, const LatticeVector& v);
bool contains(const IntMatrix& m, const LatticeVector& v);

/// |inner lattice| index inside outer: |det inner| / |det outer|.
/// Throws Error(not_sublattice) when some row of inner is not in outer.
Int coset_count(const IntMatrix& outer, const IntMatrix& inner);

/// Coset representatives of Z^n / mZ^n, reduced modulo the Hermite pivots
/// (0 <= r_i < H(i,i)). Exactly |det m| vectors.
std::vector<LatticeVector> coset_representatives(const IntMatrix& m);

/// Points of mZ^n / qZ^n as vectors in [0,q)^n. Requires qZ^n ⊆ mZ^n.
std::vector<LatticeVector> quotient_points(const IntMatrix& m, Int q);

struct ChainReport {
  std::size_t ambient_dim = 0;
  Int scale = 0;
  IntMatrix matrix{1};
  Int det_abs = 0;
  Int index_ZA = 0;                 // |Z^n / AZ^n|
  std::optional<Int> index_AqZ;     // |AZ^n / qZ^n|, present iff inclusion holds
  bool inclusion_holds = false;     // qZ^n ⊆ AZ^n
  bool strict = false;              // inclusion and both indices > 1
};

/// Checks the chain Z^n ⊇ AZ^n ⊇ qZ^n.
ChainReport verify_chain(const IntMatrix& m, Int q);

}  // namespace toricqc::intlat
