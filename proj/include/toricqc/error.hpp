#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricqc {

enum class ErrorKind {
  invalid_argument,
  dimension_mismatch,
  singular_matrix,
  not_sublattice,
  not_perfect,
  not_certified,
  overflow,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

// Overflow-checked 64-bit arithmetic. Everything in the lattice layer goes
// through these; a silent wrap would corrupt a certificate.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "integer overflow in multiplication");
  return r;
}

std::int64_t checked_pow(std::int64_t base, int exponent);

// Floor division and non-negative remainder.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail
}  // namespace toricqc
