#pragma once

// Periodic q^n hypercubic cell complex carrying the toric code qubits.
// Qubits live on 2-cells for n >= 3 and on edges for n = 2. A cell is a
// lower-corner position plus a mask of the axes it spans.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricqc/torus.hpp"

namespace toricqc::toric {

using intlat::Int;

struct Cell {
  Torus::Index position = 0;
  std::uint32_t axes = 0;  // bit i set iff the cell spans axis i

  int dimension() const noexcept { return __builtin_popcount(axes); }
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A qubit-carrying cell.
using Face = Cell;

class CellComplex {
 public:
  CellComplex(int q, int n);

  int q() const noexcept { return torus_.q(); }
  int n() const noexcept { return torus_.n(); }
  const Torus& torus() const noexcept { return torus_; }

  /// Dimension of qubit cells: 1 when n = 2, else 2.
  int qubit_dimension() const noexcept { return qubit_dim_; }

  /// Qubit orientations in lexicographic order of their axis tuples; this is
  /// also the slot order of the faces a hypercube owns.
  const std::vector<std::uint32_t>& orientations() const noexcept { return orientations_; }
  int slots_per_hypercube() const noexcept { return static_cast<int>(orientations_.size()); }

  Int face_count() const noexcept { return static_cast<Int>(orientations_.size()) * torus_.volume(); }

  /// Face order: orientation major, then position.
  Face face(Int index) const;
  Int face_index(const Face& f) const;
  int slot_of(const Face& f) const;

 private:
  Torus torus_;
  int qubit_dim_;
  std::vector<std::uint32_t> orientations_;
  std::vector<int> slot_of_mask_;
};

/// All qubit cells in enumeration order.
std::vector<Face> enumerate_faces(int q, int n);

/// The hypercube owning a face: its lower corner.
Torus::Index face_owner(const Face& f);

enum class StabilizerKind { x_star, z_boundary };

struct StabilizerSupport {
  StabilizerKind kind;
  Cell anchor;
  std::vector<Int> support;  // sorted face indices
};

/// X-type: anchor is a cell one dimension below the qubit cells; the support
/// is every qubit cell containing it.
StabilizerSupport star_support(const CellComplex& complex, const Cell& anchor);

/// Z-type: anchor is a cell one dimension above the qubit cells; the support
/// is its boundary.
StabilizerSupport boundary_support(const CellComplex& complex, const Cell& anchor);

/// Every anchor of the given kind, orientation major.
std::vector<Cell> stabilizer_anchors(const CellComplex& complex, StabilizerKind kind);

struct CommutationReport {
  Int x_count = 0;
  Int z_count = 0;
  Int overlapping_pairs = 0;  // pairs with nonzero overlap
  Int odd_pairs = 0;
  int max_overlap = 0;
  bool passed = false;
};

CommutationReport commutation_report(int q, int n);
bool commutation_check(int q, int n);

struct CodeParams {
  Int length = 0;
  Int dimension = 0;
  std::optional<Int> distance;  // absent when only a capability is claimed
  Int t = 0;                    // correction capability
  std::string label;
};

/// [[n,k,d]] with t = floor((d-1)/2).
CodeParams make_params(Int length, Int dimension, Int distance, std::string label);

/// Parameters of the q^n toric codes cited from the literature.
CodeParams literature_params(int q, int n);

/// [[3q,3,3]] for (7,3) and [[6q,6,3]] for (9,4).
CodeParams new_code_params(int q, int n);

}  // namespace toricqc::toric
