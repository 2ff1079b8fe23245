#include "toricqc/toric.hpp"

#include <algorithm>

#include "toricqc/error.hpp"

namespace toricqc::toric {

namespace {

std::vector<std::uint32_t> masks_of_dimension(int n, int dim) {
  // Lexicographic in the sorted axis tuple: (0,1) < (0,2) < ... < (1,2) ...
  std::vector<std::vector<int>> tuples;
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == dim) {
      tuples.push_back(current);
      return;
    }
    for (int a = start; a < n; ++a) {
      current.push_back(a);
      self(self, a + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<std::uint32_t> masks;
  for (const auto& t : tuples) {
    std::uint32_t m = 0;
    for (int a : t) m |= 1u << a;
    masks.push_back(m);
  }
  return masks;
}

}  // namespace

CellComplex::CellComplex(int q, int n) : torus_(q, n) {
  if (q < 2 || n < 2 || n > 16) throw Error(ErrorKind::invalid_argument, "cell complex needs q >= 2 and 2 <= n <= 16");
  qubit_dim_ = n == 2 ? 1 : 2;
  orientations_ = masks_of_dimension(n, qubit_dim_);
  slot_of_mask_.assign(std::size_t{1} << n, -1);
  for (std::size_t s = 0; s < orientations_.size(); ++s) slot_of_mask_[orientations_[s]] = static_cast<int>(s);
}

Face CellComplex::face(Int index) const {
  if (index < 0 || index >= face_count()) throw Error(ErrorKind::invalid_argument, "face index out of range");
  return {index % torus_.volume(), orientations_[static_cast<std::size_t>(index / torus_.volume())]};
}

int CellComplex::slot_of(const Face& f) const {
  if (f.axes >= slot_of_mask_.size() || slot_of_mask_[f.axes] < 0) throw Error(ErrorKind::invalid_argument, "not a qubit cell orientation");
  return slot_of_mask_[f.axes];
}

Int CellComplex::face_index(const Face& f) const {
  if (f.position < 0 || f.position >= torus_.volume()) throw Error(ErrorKind::invalid_argument, "face position out of range");
  return static_cast<Int>(slot_of(f)) * torus_.volume() + f.position;
}

std::vector<Face> enumerate_faces(int q, int n) {
  const CellComplex complex(q, n);
  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(complex.face_count()));
  for (Int i = 0; i < complex.face_count(); ++i) faces.push_back(complex.face(i));
  return faces;
}

Torus::Index face_owner(const Face& f) { return f.position; }

namespace {

void check_anchor(const CellComplex& complex, const Cell& anchor, int expected_dim) {
  if (anchor.position < 0 || anchor.position >= complex.torus().volume())
    throw Error(ErrorKind::invalid_argument, "anchor position out of range");
  if ((anchor.axes >> complex.n()) != 0 || anchor.dimension() != expected_dim)
    throw Error(ErrorKind::invalid_argument, "invalid stabilizer anchor");
}

void finish(std::vector<Int>& support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
}

}  // namespace

StabilizerSupport star_support(const CellComplex& complex, const Cell& anchor) {
  check_anchor(complex, anchor, complex.qubit_dimension() - 1);
  StabilizerSupport s{StabilizerKind::x_star, anchor, {}};
  for (int axis = 0; axis < complex.n(); ++axis) {
    if (anchor.axes & (1u << axis)) continue;
    const std::uint32_t mask = anchor.axes | (1u << axis);
    s.support.push_back(complex.face_index({anchor.position, mask}));
    s.support.push_back(complex.face_index({complex.torus().shift(anchor.position, axis, -1), mask}));
  }
  finish(s.support);
  return s;
}

StabilizerSupport boundary_support(const CellComplex& complex, const Cell& anchor) {
  check_anchor(complex, anchor, complex.qubit_dimension() + 1);
  StabilizerSupport s{StabilizerKind::z_boundary, anchor, {}};
  for (int axis = 0; axis < complex.n(); ++axis) {
    if (!(anchor.axes & (1u << axis))) continue;
    const std::uint32_t mask = anchor.axes & ~(1u << axis);
    s.support.push_back(complex.face_index({anchor.position, mask}));
    s.support.push_back(complex.face_index({complex.torus().shift(anchor.position, axis, 1), mask}));
  }
  finish(s.support);
  return s;
}

std::vector<Cell> stabilizer_anchors(const CellComplex& complex, StabilizerKind kind) {
  const int dim = complex.qubit_dimension() + (kind == StabilizerKind::x_star ? -1 : 1);
  std::vector<Cell> anchors;
  for (std::uint32_t mask : masks_of_dimension(complex.n(), dim))
    for (Torus::Index p = 0; p < complex.torus().volume(); ++p) anchors.push_back({p, mask});
  return anchors;
}

CommutationReport commutation_report(int q, int n) {
  if (n < 2 || n > 4) throw Error(ErrorKind::invalid_argument, "commutation check supports n in {2,3,4}");
  const CellComplex complex(q, n);
  const auto x_anchors = stabilizer_anchors(complex, StabilizerKind::x_star);
  const auto z_anchors = stabilizer_anchors(complex, StabilizerKind::z_boundary);

  // face -> Z stabilizers containing it (CSR).
  const auto faces = static_cast<std::size_t>(complex.face_count());
  std::vector<std::vector<Int>> z_supports;
  z_supports.reserve(z_anchors.size());
  std::vector<Int> offsets(faces + 1, 0);
  for (const auto& a : z_anchors) {
    z_supports.push_back(boundary_support(complex, a).support);
    for (Int f : z_supports.back()) ++offsets[static_cast<std::size_t>(f) + 1];
  }
  for (std::size_t f = 0; f < faces; ++f) offsets[f + 1] += offsets[f];
  std::vector<Int> incident(static_cast<std::size_t>(offsets.back()));
  std::vector<Int> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t z = 0; z < z_supports.size(); ++z)
    for (Int f : z_supports[z]) incident[static_cast<std::size_t>(cursor[static_cast<std::size_t>(f)]++)] = static_cast<Int>(z);

  CommutationReport report;
  report.x_count = static_cast<Int>(x_anchors.size());
  report.z_count = static_cast<Int>(z_anchors.size());
  std::vector<Int> hits;
  for (const auto& a : x_anchors) {
    hits.clear();
    for (Int f : star_support(complex, a).support)
      for (Int k = offsets[static_cast<std::size_t>(f)]; k < offsets[static_cast<std::size_t>(f) + 1]; ++k)
        hits.push_back(incident[static_cast<std::size_t>(k)]);
    std::sort(hits.begin(), hits.end());
    for (std::size_t i = 0; i < hits.size();) {
      std::size_t j = i;
      while (j < hits.size() && hits[j] == hits[i]) ++j;
      const int overlap = static_cast<int>(j - i);
      ++report.overlapping_pairs;
      report.max_overlap = std::max(report.max_overlap, overlap);
      if (overlap % 2 != 0) ++report.odd_pairs;
      i = j;
    }
  }
  report.passed = report.odd_pairs == 0;
  return report;
}

bool commutation_check(int q, int n) { return commutation_report(q, n).passed; }

CodeParams make_params(Int length, Int dimension, Int distance, std::string label) {
  if (length < 1 || dimension < 1 || dimension > length || distance < 1)
    throw Error(ErrorKind::invalid_argument, "invalid code parameters");
  return {length, dimension, distance, (distance - 1) / 2, std::move(label)};
}

CodeParams literature_params(int q, int n) {
  if (q < 2) throw Error(ErrorKind::invalid_argument, "q must be at least 2");
  const Int qq = q;
  switch (n) {
    case 2: return make_params(2 * qq * qq, 2, qq, "[[2q^2,2,q]]");
    case 3: return make_params(3 * qq * qq * qq, 3, qq, "[[3q^3,3,q]]");
    case 4: return make_params(6 * qq * qq * qq * qq, 6, qq * qq, "[[6q^4,6,q^2]]");
    default: throw Error(ErrorKind::invalid_argument, "literature parameters exist for n in {2,3,4}");
  }
}

CodeParams new_code_params(int q, int n) {
  if (q == 7 && n == 3) return make_params(21, 3, 3, "[[3q,3,3]]");
  if (q == 9 && n == 4) return make_params(54, 6, 3, "[[6q,6,3]]");
  throw Error(ErrorKind::not_certified, "not certified");
}

}  // namespace toricqc::toric
