#include "toricqc/torus.hpp"

#include "toricqc/error.hpp"

namespace toricqc {

Torus::Torus(int q, int n) : q_(q), n_(n), stride_(static_cast<std::size_t>(n > 0 ? n : 0)) {
  if (q < 1 || n < 1) throw Error(ErrorKind::invalid_argument, "torus needs q >= 1 and n >= 1");
  volume_ = detail::checked_pow(q, n);
  Index s = 1;
  for (int axis = n - 1; axis >= 0; --axis) {
    stride_[axis] = s;
    s *= q;
  }
}

Torus::Index Torus::encode(const intlat::LatticeVector& p) const {
  if (static_cast<int>(p.size()) != n_) throw Error(ErrorKind::dimension_mismatch, "point dimension does not match torus");
  Index idx = 0;
  for (int axis = 0; axis < n_; ++axis) idx = idx * q_ + detail::mod(p[axis], q_);
  return idx;
}

intlat::LatticeVector Torus::decode(Index idx) const {
  intlat::LatticeVector p(static_cast<std::size_t>(n_));
  for (int axis = 0; axis < n_; ++axis) p[axis] = digit(idx, axis);
  return p;
}

Torus::Index Torus::add(Index a, Index b) const noexcept {
  Index out = 0;
  for (int axis = 0; axis < n_; ++axis) out = out * q_ + (digit(a, axis) + digit(b, axis)) % q_;
  return out;
}

Torus::Index Torus::negate(Index a) const noexcept {
  Index out = 0;
  for (int axis = 0; axis < n_; ++axis) out = out * q_ + (q_ - digit(a, axis)) % q_;
  return out;
}

}  // namespace toricqc
