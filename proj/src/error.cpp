#include "toricqc/error.hpp"

namespace toricqc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::singular_matrix: return "singular matrix";
    case ErrorKind::not_sublattice: return "not a sublattice";
    case ErrorKind::not_perfect: return "decoding not unique";
    case ErrorKind::not_certified: return "not certified";
    case ErrorKind::overflow: return "integer overflow";
    case ErrorKind::internal: return "internal invariant violation";
  }
  return "unknown";
}

namespace detail {

std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace detail

}  // namespace toricqc
