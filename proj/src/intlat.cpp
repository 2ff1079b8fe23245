#include "toricqc/intlat.hpp"

#include <cstdlib>
#include <utility>

#include "toricqc/error.hpp"

namespace toricqc {
namespace intlat {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

bool LatticeVector::is_zero() const noexcept {
  for (Int c : coords_)
    if (c != 0) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

LatticeVector unit_vector(std::size_t n, std::size_t axis, Int scale) {
  LatticeVector v(n);
  v[axis] = scale;
  return v;
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "matrix dimension must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorKind::dimension_mismatch, "matrix must be square");
    std::size_t c = 0;
    for (Int x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntMatrix::IntMatrix(const std::vector<LatticeVector>& rows) : IntMatrix(rows.size()) {
  for (std::size_t r = 0; r < n_; ++r) {
    if (rows[r].size() != n_) throw Error(ErrorKind::dimension_mismatch, "matrix must be square");
    for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = rows[r][c];
  }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, Int q) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = q;
  return m;
}

LatticeVector IntMatrix::row(std::size_t r) const {
  LatticeVector v(n_);
  for (std::size_t c = 0; c < n_; ++c) v[c] = (*this)(r, c);
  return v;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '(';
  for (std::size_t r = 0; r < m.dim(); ++r) os << (r ? "," : "") << m.row(r);
  return os << ')';
}

LatticeVector left_multiply(const LatticeVector& x, const IntMatrix& m) {
  if (x.size() != m.dim()) throw Error(ErrorKind::dimension_mismatch, "vector length does not match matrix dimension");
  const std::size_t n = m.dim();
  LatticeVector out(n);
  for (std::size_t c = 0; c < n; ++c) {
    Int acc = 0;
    for (std::size_t r = 0; r < n; ++r) acc = checked_add(acc, checked_mul(x[r], m(r, c)));
    out[c] = acc;
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::dimension_mismatch, "matrix dimensions differ");
  const std::size_t n = a.dim();
  IntMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Int acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc = checked_add(acc, checked_mul(a(r, k), b(k, c)));
      out(r, c) = acc;
    }
  return out;
}

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j)));
        // Bareiss: the division is exact.
        a(i, j) = num / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

namespace {

struct Bezout {
  Int g, s, t;  // s*a + t*b = g >= 0
};

Bezout extended_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, checked_sub(old_r, checked_mul(q, r)));
    old_s = std::exchange(s, checked_sub(old_s, checked_mul(q, s)));
    old_t = std::exchange(t, checked_sub(old_t, checked_mul(q, t)));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Replaces rows (p, i) of m by (s*p + t*i, u*p + v*i).
void combine_rows(IntMatrix& m, std::size_t p, std::size_t i, Int s, Int t, Int u, Int v) {
  for (std::size_t c = 0; c < m.dim(); ++c) {
    Int rp = m(p, c), ri = m(i, c);
    m(p, c) = checked_add(checked_mul(s, rp), checked_mul(t, ri));
    m(i, c) = checked_add(checked_mul(u, rp), checked_mul(v, ri));
  }
}

void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, Int factor) {
  for (std::size_t c = 0; c < m.dim(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(factor, m(src, c)));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.dim(); ++c) m(r, c) = checked_sub(0, m(r, c));
}

}  // namespace

HermiteDecomposition hermite_decomposition(const IntMatrix& m) {
  if (determinant(m) == 0) throw Error(ErrorKind::singular_matrix, "singular matrix");
  const std::size_t n = m.dim();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(n);

  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = c + 1; i < n; ++i) {
      if (h(i, c) == 0) continue;
      const Int a = h(c, c), b = h(i, c);
      const Bezout bz = extended_gcd(a, b);
      const Int u_coef = -(b / bz.g), v_coef = a / bz.g;
      combine_rows(h, c, i, bz.s, bz.t, u_coef, v_coef);
      combine_rows(u, c, i, bz.s, bz.t, u_coef, v_coef);
    }
    if (h(c, c) == 0) throw Error(ErrorKind::internal, "zero pivot in nonsingular matrix");
    if (h(c, c) < 0) {
      negate_row(h, c);
      negate_row(u, c);
    }
    for (std::size_t r = 0; r < c; ++r) {
      const Int f = detail::floor_div(h(r, c), h(c, c));
      if (f == 0) continue;
      axpy_row(h, r, c, f);
      axpy_row(u, r, c, f);
    }
  }
  return {std::move(h), std::move(u)};
}

IntMatrix hermite_form(const IntMatrix& m) { return hermite_decomposition(m).form; }

std::optional<LatticeVector> solve_left(const IntMatrix& m, const LatticeVector& v) {
  if (v.size() != m.dim()) throw Error(ErrorKind::dimension_mismatch, "vector length does not match matrix dimension");
  const auto [h, u] = hermite_decomposition(m);
  const std::size_t n = m.dim();

  // y·H = v by forward substitution over columns (H is upper triangular).
  LatticeVector y(n);
  for (std::size_t c = 0; c < n; ++c) {
    Int rest = v[c];
    for (std::size_t r = 0; r < c; ++r) rest = checked_sub(rest, checked_mul(y[r], h(r, c)));
    if (rest % h(c, c) != 0) return std::nullopt;
    y[c] = rest / h(c, c);
  }
  LatticeVector x = left_multiply(y, u);
  if (left_multiply(x, m) != v) throw Error(ErrorKind::internal, "solve_left witness does not reproduce target");
  return x;
}

bool contains(const IntMatrix& m, const LatticeVector& v) { return solve_left(m, v).has_value(); }

Int coset_count(const IntMatrix& outer, const IntMatrix& inner) {
  if (outer.dim() != inner.dim()) throw Error(ErrorKind::dimension_mismatch, "matrix dimensions differ");
  for (std::size_t r = 0; r < inner.dim(); ++r)
    if (!contains(outer, inner.row(r))) throw Error(ErrorKind::not_sublattice, "not a sublattice");
  const Int d_outer = std::llabs(determinant(outer));
  const Int d_inner = std::llabs(determinant(inner));
  if (d_inner % d_outer != 0) throw Error(ErrorKind::internal, "non-integral lattice index");
  return d_inner / d_outer;
}

namespace {

// Visits every c with 0 <= c_i < bounds[i] (last axis fastest).
template <typename F>
void for_each_in_box(const std::vector<Int>& bounds, F&& fn) {
  const std::size_t n = bounds.size();
  std::vector<Int> c(n, 0);
  while (true) {
    fn(c);
    std::size_t axis = n;
    while (axis > 0) {
      --axis;
      if (++c[axis] < bounds[axis]) break;
      c[axis] = 0;
      if (axis == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

std::vector<LatticeVector> coset_representatives(const IntMatrix& m) {
  const IntMatrix h = hermite_form(m);
  const std::size_t n = m.dim();
  std::vector<Int> bounds(n);
  for (std::size_t i = 0; i < n; ++i) bounds[i] = h(i, i);
  std::vector<LatticeVector> reps;
  for_each_in_box(bounds, [&](const std::vector<Int>& c) { reps.emplace_back(c); });
  return reps;
}

std::vector<LatticeVector> quotient_points(const IntMatrix& m, Int q) {
  if (q < 1) throw Error(ErrorKind::invalid_argument, "modulus must be positive");
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!contains(m, unit_vector(n, i, q))) throw Error(ErrorKind::not_sublattice, "not a sublattice");
  const IntMatrix h = hermite_form(m);
  // q·e_i in the lattice forces every pivot to divide q.
  std::vector<Int> bounds(n);
  for (std::size_t i = 0; i < n; ++i) bounds[i] = q / h(i, i);

  std::vector<LatticeVector> points;
  for_each_in_box(bounds, [&](const std::vector<Int>& c) {
    LatticeVector p = left_multiply(LatticeVector(c), h);
    for (std::size_t k = 0; k < n; ++k) p[k] = detail::mod(p[k], q);
    points.push_back(std::move(p));
  });
  return points;
}

ChainReport verify_chain(const IntMatrix& m, Int q) {
  if (q < 2) throw Error(ErrorKind::invalid_argument, "scale q must be at least 2");
  const std::size_t n = m.dim();
  ChainReport report;
  report.ambient_dim = n;
  report.scale = q;
  report.matrix = m;
  report.det_abs = std::llabs(determinant(m));
  if (report.det_abs == 0) throw Error(ErrorKind::singular_matrix, "singular matrix");
  report.index_ZA = coset_count(IntMatrix::identity(n), m);

  report.inclusion_holds = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(m, unit_vector(n, i, q))) {
      report.inclusion_holds = false;
      break;
    }
  }
  if (report.inclusion_holds) {
    report.index_AqZ = coset_count(m, IntMatrix::scalar(n, q));
    report.strict = report.index_ZA > 1 && *report.index_AqZ > 1;
  }
  return report;
}

}  // namespace intlat
}  // namespace toricqc
