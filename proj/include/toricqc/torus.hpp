#pragma once

#include <cstdint>
#include <vector>

#include "toricqc/intlat.hpp"

namespace toricqc {

/// Z_q^n with points stored as linear indices. The first coordinate is the
/// most significant digit: index = ((x0*q + x1)*q + x2)...
class Torus {
 public:
  using Index = std::int64_t;

  Torus(int q, int n);

  int q() const noexcept { return q_; }
  int n() const noexcept { return n_; }
  Index volume() const noexcept { return volume_; }

  Index encode(const intlat::LatticeVector& p) const;
  intlat::LatticeVector decode(Index idx) const;

  int digit(Index idx, int axis) const noexcept { return static_cast<int>((idx / stride_[axis]) % q_); }

  /// Moves `idx` by `delta` steps along `axis` with wraparound.
  Index shift(Index idx, int axis, int delta) const noexcept {
    const int d = digit(idx, axis);
    int nd = (d + delta) % q_;
    if (nd < 0) nd += q_;
    return idx + static_cast<Index>(nd - d) * stride_[axis];
  }

  Index add(Index a, Index b) const noexcept;
  Index negate(Index a) const noexcept;

 private:
  int q_;
  int n_;
  Index volume_;
  std::vector<Index> stride_;
};

}  // namespace toricqc
