#pragma once

// Test-only oracles. None of these call into the routines they are used to
// check: determinants by cofactor expansion, solutions by the adjugate,
// codes by brute-force span enumeration, cells as explicit vertex sets.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Mat minor_of(const Mat& m, std::size_t skip_r, std::size_t skip_c) {
  Mat out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == skip_r) continue;
    Vec row;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != skip_c) row.push_back(m[r][c]);
    out.push_back(row);
  }
  return out;
}

// Laplace expansion along the first row.
inline Int cofactor_det(const Mat& m) {
  if (m.size() == 1) return m[0][0];
  Int det = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    const Int sign = (c % 2 == 0) ? 1 : -1;
    det += sign * m[0][c] * cofactor_det(minor_of(m, 0, c));
  }
  return det;
}

inline Vec row_times(const Vec& x, const Mat& m) {
  Vec out(m.size(), 0);
  for (std::size_t c = 0; c < m.size(); ++c)
    for (std::size_t r = 0; r < m.size(); ++r) out[c] += x[r] * m[r][c];
  return out;
}

// x·m = v  =>  x = v·adj(m) / det(m); integral iff every entry divides.
inline std::optional<Vec> adjugate_solve(const Mat& m, const Vec& v) {
  const std::size_t n = m.size();
  const Int det = cofactor_det(m);
  // adj(m)[r][c] = (-1)^(r+c) det(minor(m, c, r))
  Vec x(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    Int acc = 0;
    for (std::size_t r = 0; r < n; ++r) {
      const Int sign = ((r + c) % 2 == 0) ? 1 : -1;
      acc += v[r] * sign * cofactor_det(minor_of(m, c, r));
    }
    if (acc % det != 0) return std::nullopt;
    x[c] = acc / det;
  }
  return x;
}

// Every integer combination sum a_i g_i (a_i in [0,q)) reduced mod q.
inline std::set<Vec> brute_force_span(const std::vector<Vec>& gens, Int q) {
  const std::size_t n = gens.front().size();
  std::set<Vec> out;
  std::vector<Int> a(gens.size(), 0);
  while (true) {
    Vec p(n, 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t k = 0; k < n; ++k) p[k] = mod(p[k] + a[g] * gens[g][k], q);
    out.insert(p);
    std::size_t g = 0;
    for (; g < gens.size(); ++g) {
      if (++a[g] < q) break;
      a[g] = 0;
    }
    if (g == gens.size()) break;
  }
  return out;
}

// Lee weight from first principles: min(r, q - r) per coordinate.
inline Int lee_weight(const Vec& v, Int q) {
  Int w = 0;
  for (Int x : v) {
    const Int r = mod(x, q);
    w += std::min(r, q - r);
  }
  return w;
}

inline Int all_pairs_min_distance(const std::set<Vec>& code, Int q) {
  const std::vector<Vec> words(code.begin(), code.end());
  Int best = std::numeric_limits<Int>::max();
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      Vec d(words[a].size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = words[a][k] - words[b][k];
      best = std::min(best, lee_weight(d, q));
    }
  return best;
}

// All codewords at minimum Lee distance from p.
inline std::vector<Vec> nearest_codewords(const std::set<Vec>& code, const Vec& p, Int q) {
  Int best = std::numeric_limits<Int>::max();
  std::vector<Vec> out;
  for (const auto& c : code) {
    Vec d(p.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = p[k] - c[k];
    const Int w = lee_weight(d, q);
    if (w < best) {
      best = w;
      out.clear();
    }
    if (w == best) out.push_back(c);
  }
  return out;
}

// A cell of the periodic complex as its explicit set of vertices.
inline std::set<Vec> cell_vertices(const Vec& corner, const std::vector<int>& axes, Int q) {
  std::set<Vec> out;
  for (unsigned bits = 0; bits < (1u << axes.size()); ++bits) {
    Vec v = corner;
    for (std::size_t a = 0; a < axes.size(); ++a)
      if (bits & (1u << a)) v[static_cast<std::size_t>(axes[a])] = mod(v[static_cast<std::size_t>(axes[a])] + 1, q);
    out.insert(v);
  }
  return out;
}

inline bool is_subset(const std::set<Vec>& a, const std::set<Vec>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace oracle
