#include "toricqc/lee.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "toricqc/error.hpp"

namespace toricqc::lee {

Int symmetric_residue(Int x, Int q) {
  if (q < 3 || q % 2 == 0) throw Error(ErrorKind::invalid_argument, "symmetric residue undefined");
  const Int r = detail::mod(x, q);
  return r > q / 2 ? r - q : r;
}

Int mannheim_weight(const LatticeVector& v, Int q) {
  Int w = 0;
  for (Int c : v.coords()) w += std::llabs(symmetric_residue(c, q));
  return w;
}

LeeSphere lee_sphere(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "dimension must be positive");
  LeeSphere s;
  s.n = n;
  s.offsets.reserve(2 * n + 1);
  s.offsets.emplace_back(static_cast<std::size_t>(n));
  for (int axis = 0; axis < n; ++axis) {
    s.offsets.push_back(intlat::unit_vector(n, axis, 1));
    s.offsets.push_back(intlat::unit_vector(n, axis, -1));
  }
  return s;
}

bool LeeCode::is_codeword(const LatticeVector& v) const { return index_of_point_[torus_.encode(v)] >= 0; }

LeeCode enumerate_codewords(const std::vector<LatticeVector>& generators, Int q, int n) {
  if (generators.empty()) throw Error(ErrorKind::invalid_argument, "at least one generator is required");
  if (q < 2 || q > std::numeric_limits<int>::max()) throw Error(ErrorKind::invalid_argument, "modulus must be at least 2");
  LeeCode code(static_cast<int>(q), n);
  const Torus& torus = code.torus_;

  std::vector<Torus::Index> steps;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw Error(ErrorKind::dimension_mismatch, "generator length does not match dimension");
    LatticeVector reduced(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) reduced[k] = detail::mod(g[k], q);
    code.generators_.push_back(reduced);
    steps.push_back(torus.encode(reduced));
  }

  code.index_of_point_.assign(static_cast<std::size_t>(torus.volume()), -1);
  auto& points = code.codeword_points_;
  auto append = [&](Torus::Index p) {
    code.index_of_point_[p] = static_cast<std::int64_t>(points.size());
    points.push_back(p);
  };
  append(0);

  for (Torus::Index step : steps) {
    const std::size_t subgroup = points.size();
    Torus::Index multiple = step;
    while (code.index_of_point_[multiple] < 0) {
      for (std::size_t i = 0; i < subgroup; ++i) {
        const Torus::Index p = torus.add(points[i], multiple);
        if (code.index_of_point_[p] >= 0) throw Error(ErrorKind::internal, "coset overlap during closure");
        append(p);
      }
      multiple = torus.add(multiple, step);
    }
  }

  // Closure under every generator (group axiom check).
  for (Torus::Index p : points)
    for (Torus::Index step : steps)
      if (code.index_of_point_[torus.add(p, step)] < 0) throw Error(ErrorKind::internal, "codeword set not closed under addition");

  code.codewords_.reserve(points.size());
  for (Torus::Index p : points) code.codewords_.push_back(torus.decode(p));

  // Coverage by radius-1 spheres and, if perfect, the decoding tables.
  const auto volume = static_cast<std::size_t>(torus.volume());
  code.coverage_.assign(volume, 0);
  code.center_.assign(volume, -1);
  code.label_.assign(volume, -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int j = 0; j < 2 * n + 1; ++j) {
      Torus::Index p = points[i];
      if (j > 0) p = torus.shift(p, (j - 1) / 2, (j % 2 == 1) ? 1 : -1);
      ++code.coverage_[p];
      code.center_[p] = static_cast<std::int64_t>(i);
      code.label_[p] = j;
    }
  }
  code.perfect_ = std::all_of(code.coverage_.begin(), code.coverage_.end(), [](int c) { return c == 1; });
  if (!code.perfect_) {
    std::fill(code.center_.begin(), code.center_.end(), -1);
    std::fill(code.label_.begin(), code.label_.end(), -1);
  }
  return code;
}

Int minimum_distance(const LeeCode& code) {
  if (code.size() < 2) throw Error(ErrorKind::invalid_argument, "distance undefined");
  Int best = std::numeric_limits<Int>::max();
  for (const auto& c : code.codewords())
    if (!c.is_zero()) best = std::min(best, mannheim_weight(c, code.q()));
  return best;
}

bool tiling_check(const LeeCode& code) { return code.perfect(); }

DecodeResult decode_nearest(const LatticeVector& point, const LeeCode& code) {
  if (!code.perfect()) throw Error(ErrorKind::not_perfect, "decoding not unique");
  const Torus::Index p = code.torus().encode(point);
  const auto center = static_cast<std::size_t>(code.center_of(p));
  return {code.codewords()[center], code.label_of(p)};
}

bool is_certified(int q, int n) noexcept { return (q == 7 && n == 3) || (q == 9 && n == 4); }

CertifiedInstance certified_instance(int q, int n) {
  if (q == 7 && n == 3) {
    return {7, 3,
            intlat::IntMatrix{{0, 2, 1}, {0, 1, 4}, {1, 0, 2}},
            {LatticeVector{0, 1, 4}, LatticeVector{1, 0, 2}}};
  }
  if (q == 9 && n == 4) {
    return {9, 4,
            intlat::IntMatrix{{0, 0, 1, 6}, {0, 0, -1, 3}, {0, 1, 1, 1}, {1, 0, 0, 2}},
            {LatticeVector{0, 0, 1, 6}, LatticeVector{0, 1, 1, 1}, LatticeVector{1, 0, 0, 2}}};
  }
  throw Error(ErrorKind::not_certified, "not certified");
}

LeeCode certified_code(int q, int n) {
  const CertifiedInstance inst = certified_instance(q, n);
  return enumerate_codewords(inst.generators, inst.q, inst.n);
}

}  // namespace toricqc::lee
