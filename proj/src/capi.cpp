#include "toricqc/toricqc.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "toricqc/error.hpp"
#include "toricqc/interleave.hpp"
#include "toricqc/intlat.hpp"
#include "toricqc/lee.hpp"
#include "toricqc/report.hpp"
#include "toricqc/toric.hpp"

using namespace toricqc;

struct tqc_lee_code {
  lee::LeeCode code;
};

struct tqc_interleaver {
  interleave::InterleaverMap map;
};

struct tqc_certificate {
  report::VerificationCertificate cert;
};

namespace {

thread_local std::string last_error;

tqc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return TQC_ERROR_INVALID_ARGUMENT;
    case ErrorKind::dimension_mismatch: return TQC_ERROR_DIMENSION_MISMATCH;
    case ErrorKind::singular_matrix: return TQC_ERROR_SINGULAR_MATRIX;
    case ErrorKind::not_sublattice: return TQC_ERROR_NOT_SUBLATTICE;
    case ErrorKind::not_perfect: return TQC_ERROR_NOT_PERFECT;
    case ErrorKind::not_certified: return TQC_ERROR_NOT_CERTIFIED;
    case ErrorKind::overflow: return TQC_ERROR_OVERFLOW;
    case ErrorKind::internal: return TQC_ERROR_INTERNAL;
  }
  return TQC_ERROR_UNKNOWN;
}

template <typename F>
tqc_status guard(F&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TQC_ERROR_UNKNOWN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TQC_ERROR_UNKNOWN;
  }
}

tqc_status null_arg(const char* name) {
  last_error = std::string("null pointer argument: ") + name;
  return TQC_ERROR_NULL_POINTER;
}

#define TQC_REQUIRE(p) \
  do {                 \
    if (!(p)) return null_arg(#p); \
  } while (0)

intlat::IntMatrix matrix_from(const int64_t* data, size_t n) {
  intlat::IntMatrix m(n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) m(r, c) = data[r * n + c];
  return m;
}

intlat::LatticeVector vector_from(const int64_t* data, size_t n) { return intlat::LatticeVector(std::vector<int64_t>(data, data + n)); }

void copy_vector(const intlat::LatticeVector& v, int64_t* out) {
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
}

tqc_status write_text(const std::string& text, char* out, size_t* out_len) {
  const size_t needed = text.size() + 1;
  const size_t capacity = *out_len;
  *out_len = needed;
  if (!out || capacity < needed) {
    last_error = "output buffer too small";
    return TQC_ERROR_BUFFER_TOO_SMALL;
  }
  std::memcpy(out, text.c_str(), needed);
  return TQC_OK;
}

void fill_params(const toric::CodeParams& p, tqc_code_params* out) {
  out->length = p.length;
  out->dimension = p.dimension;
  out->distance = p.distance.value_or(0);
  out->t = p.t;
}

interleave::BurstMode burst_mode(tqc_burst_mode mode, int64_t samples, uint64_t seed) {
  if (mode == TQC_BURST_EXHAUSTIVE) return interleave::BurstMode::exhaustive();
  if (mode == TQC_BURST_SAMPLED) return interleave::BurstMode::sampled(samples, seed);
  throw Error(ErrorKind::invalid_argument, "unknown burst mode");
}

tqc_status emit_certificate(report::VerificationCertificate cert, tqc_certificate** out) {
  *out = new tqc_certificate{std::move(cert)};
  return TQC_OK;
}

}  // namespace

extern "C" {

const char* tqc_version(void) { return report::kVersion; }

const char* tqc_status_string(tqc_status status) {
  switch (status) {
    case TQC_OK: return "ok";
    case TQC_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case TQC_ERROR_NULL_POINTER: return "null pointer";
    case TQC_ERROR_DIMENSION_MISMATCH: return "dimension mismatch";
    case TQC_ERROR_SINGULAR_MATRIX: return "singular matrix";
    case TQC_ERROR_NOT_SUBLATTICE: return "not a sublattice";
    case TQC_ERROR_NOT_PERFECT: return "decoding not unique";
    case TQC_ERROR_NOT_CERTIFIED: return "not certified";
    case TQC_ERROR_OVERFLOW: return "integer overflow";
    case TQC_ERROR_BUFFER_TOO_SMALL: return "buffer too small";
    case TQC_ERROR_INTERNAL: return "internal invariant violation";
    case TQC_ERROR_UNKNOWN: break;
  }
  return "unknown error";
}

const char* tqc_last_error(void) { return last_error.c_str(); }

tqc_status tqc_determinant(const int64_t* matrix, size_t n, int64_t* out) {
  TQC_REQUIRE(matrix);
  TQC_REQUIRE(out);
  return guard([&] {
    *out = intlat::determinant(matrix_from(matrix, n));
    return TQC_OK;
  });
}

tqc_status tqc_hermite_form(const int64_t* matrix, size_t n, int64_t* out_form) {
  TQC_REQUIRE(matrix);
  TQC_REQUIRE(out_form);
  return guard([&] {
    const auto h = intlat::hermite_form(matrix_from(matrix, n));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) out_form[r * n + c] = h(r, c);
    return TQC_OK;
  });
}

tqc_status tqc_solve_left(const int64_t* matrix, size_t n, const int64_t* v, int64_t* x, int* found) {
  TQC_REQUIRE(matrix);
  TQC_REQUIRE(v);
  TQC_REQUIRE(x);
  TQC_REQUIRE(found);
  return guard([&] {
    const auto sol = intlat::solve_left(matrix_from(matrix, n), vector_from(v, n));
    *found = sol.has_value() ? 1 : 0;
    if (sol) copy_vector(*sol, x);
    return TQC_OK;
  });
}

tqc_status tqc_coset_count(const int64_t* outer, const int64_t* inner, size_t n, int64_t* out) {
  TQC_REQUIRE(outer);
  TQC_REQUIRE(inner);
  TQC_REQUIRE(out);
  return guard([&] {
    *out = intlat::coset_count(matrix_from(outer, n), matrix_from(inner, n));
    return TQC_OK;
  });
}

tqc_status tqc_verify_chain(const int64_t* matrix, size_t n, int64_t q, tqc_chain_report* out) {
  TQC_REQUIRE(matrix);
  TQC_REQUIRE(out);
  return guard([&] {
    const auto r = intlat::verify_chain(matrix_from(matrix, n), q);
    *out = {r.det_abs, r.index_ZA, r.index_AqZ.value_or(0), r.inclusion_holds ? 1 : 0, r.strict ? 1 : 0};
    return TQC_OK;
  });
}

tqc_status tqc_lee_code_create(int q, int n, const int64_t* generators, size_t count, tqc_lee_code** out) {
  TQC_REQUIRE(generators);
  TQC_REQUIRE(out);
  return guard([&] {
    if (n < 1) throw Error(ErrorKind::invalid_argument, "dimension must be positive");
    std::vector<intlat::LatticeVector> gens;
    for (size_t g = 0; g < count; ++g) gens.push_back(vector_from(generators + g * static_cast<size_t>(n), static_cast<size_t>(n)));
    *out = new tqc_lee_code{lee::enumerate_codewords(gens, q, n)};
    return TQC_OK;
  });
}

tqc_status tqc_lee_code_create_certified(int q, int n, tqc_lee_code** out) {
  TQC_REQUIRE(out);
  return guard([&] {
    *out = new tqc_lee_code{lee::certified_code(q, n)};
    return TQC_OK;
  });
}

void tqc_lee_code_destroy(tqc_lee_code* code) { delete code; }

tqc_status tqc_lee_code_size(const tqc_lee_code* code, size_t* out) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(out);
  *out = code->code.size();
  return TQC_OK;
}

tqc_status tqc_lee_code_codeword(const tqc_lee_code* code, size_t index, int64_t* out, size_t n) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(out);
  return guard([&] {
    if (index >= code->code.size()) throw Error(ErrorKind::invalid_argument, "codeword index out of range");
    if (n != static_cast<size_t>(code->code.n())) throw Error(ErrorKind::dimension_mismatch, "output length does not match dimension");
    copy_vector(code->code.codewords()[index], out);
    return TQC_OK;
  });
}

tqc_status tqc_lee_code_tiling_check(const tqc_lee_code* code, int* out) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(out);
  *out = lee::tiling_check(code->code) ? 1 : 0;
  return TQC_OK;
}

tqc_status tqc_lee_code_min_distance(const tqc_lee_code* code, int64_t* out) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(out);
  return guard([&] {
    *out = lee::minimum_distance(code->code);
    return TQC_OK;
  });
}

tqc_status tqc_lee_code_decode(const tqc_lee_code* code, const int64_t* point, size_t n, int64_t* codeword,
                               int* offset_index) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(point);
  TQC_REQUIRE(codeword);
  TQC_REQUIRE(offset_index);
  return guard([&] {
    const auto r = lee::decode_nearest(vector_from(point, n), code->code);
    copy_vector(r.codeword, codeword);
    *offset_index = r.offset_index;
    return TQC_OK;
  });
}

tqc_status tqc_mannheim_weight(const int64_t* v, size_t n, int64_t q, int64_t* out) {
  TQC_REQUIRE(v);
  TQC_REQUIRE(out);
  return guard([&] {
    *out = lee::mannheim_weight(vector_from(v, n), q);
    return TQC_OK;
  });
}

tqc_status tqc_commutation_check(int q, int n, tqc_commutation_report* out) {
  TQC_REQUIRE(out);
  return guard([&] {
    const auto r = toric::commutation_report(q, n);
    *out = {r.x_count, r.z_count, r.overlapping_pairs, r.odd_pairs, r.max_overlap, r.passed ? 1 : 0};
    return TQC_OK;
  });
}

tqc_status tqc_face_count(int q, int n, int64_t* out) {
  TQC_REQUIRE(out);
  return guard([&] {
    *out = toric::CellComplex(q, n).face_count();
    return TQC_OK;
  });
}

tqc_status tqc_literature_params(int q, int n, tqc_code_params* out) {
  TQC_REQUIRE(out);
  return guard([&] {
    fill_params(toric::literature_params(q, n), out);
    return TQC_OK;
  });
}

tqc_status tqc_new_code_params(int q, int n, tqc_code_params* out) {
  TQC_REQUIRE(out);
  return guard([&] {
    fill_params(toric::new_code_params(q, n), out);
    return TQC_OK;
  });
}

tqc_status tqc_interleaved_params(int q, int n, tqc_code_params* out) {
  TQC_REQUIRE(out);
  return guard([&] {
    fill_params(interleave::interleaved_params(q, n), out);
    return TQC_OK;
  });
}

tqc_status tqc_interleaver_create(const tqc_lee_code* code, tqc_interleaver** out) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(out);
  return guard([&] {
    *out = new tqc_interleaver{interleave::build_interleaver(code->code)};
    return TQC_OK;
  });
}

void tqc_interleaver_destroy(tqc_interleaver* map) { delete map; }

tqc_status tqc_interleaver_size(const tqc_interleaver* map, int64_t* out) {
  TQC_REQUIRE(map);
  TQC_REQUIRE(out);
  *out = map->map.size();
  return TQC_OK;
}

tqc_status tqc_interleaver_forward(const tqc_interleaver* map, int j, int b, int64_t i, int64_t* hypercube, int* slot) {
  TQC_REQUIRE(map);
  TQC_REQUIRE(hypercube);
  TQC_REQUIRE(slot);
  return guard([&] {
    const auto p = map->map.forward({j, b, i});
    *hypercube = p.hypercube;
    *slot = p.slot;
    return TQC_OK;
  });
}

tqc_status tqc_interleaver_inverse(const tqc_interleaver* map, int64_t hypercube, int slot, int* j, int* b, int64_t* i) {
  TQC_REQUIRE(map);
  TQC_REQUIRE(j);
  TQC_REQUIRE(b);
  TQC_REQUIRE(i);
  return guard([&] {
    const auto x = map->map.inverse({hypercube, slot});
    *j = x.cross_section;
    *b = x.block;
    *i = x.codeword;
    return TQC_OK;
  });
}

tqc_status tqc_deinterleave(const tqc_interleaver* map, const int64_t* faces, size_t count, int* correctable,
                            int* max_block_errors) {
  TQC_REQUIRE(map);
  TQC_REQUIRE(faces || count == 0);
  TQC_REQUIRE(correctable);
  TQC_REQUIRE(max_block_errors);
  return guard([&] {
    std::vector<toric::Face> fs;
    for (size_t k = 0; k < count; ++k) fs.push_back(map->map.complex().face(faces[k]));
    const auto v = interleave::deinterleave(map->map, fs);
    *correctable = v.correctable ? 1 : 0;
    *max_block_errors = v.max_count();
    return TQC_OK;
  });
}

tqc_status tqc_verify_bursts(const tqc_interleaver* map, tqc_burst_mode mode, int64_t samples, uint64_t seed,
                             unsigned threads, tqc_burst_summary* out) {
  TQC_REQUIRE(map);
  TQC_REQUIRE(out);
  return guard([&] {
    const auto s = interleave::verify_burst_correction(map->map, burst_mode(mode, samples, seed), threads);
    *out = {s.total_checked, s.exhaustive, s.sampled, s.extremal, s.failures, s.max_block_count, s.passed() ? 1 : 0};
    return TQC_OK;
  });
}

tqc_status tqc_loose_burst_statistics(const tqc_interleaver* map, int64_t samples, uint64_t seed, int64_t* checked,
                                      int64_t* uncorrectable) {
  TQC_REQUIRE(map);
  TQC_REQUIRE(checked);
  TQC_REQUIRE(uncorrectable);
  return guard([&] {
    const auto s = interleave::loose_burst_statistics(map->map, samples, seed);
    *checked = s.checked;
    *uncorrectable = s.uncorrectable;
    return TQC_OK;
  });
}

tqc_status tqc_emit_tables(const char* format, char* out, size_t* out_len) {
  TQC_REQUIRE(format);
  TQC_REQUIRE(out_len);
  return guard([&] { return write_text(report::emit_tables(report::parse_table_format(format)), out, out_len); });
}

tqc_status tqc_certify_chain(int q, tqc_certificate** out) {
  TQC_REQUIRE(out);
  return guard([&] { return emit_certificate(report::certify_chain(q), out); });
}

tqc_status tqc_certify_tiling(const tqc_lee_code* code, tqc_certificate** out) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(out);
  return guard([&] { return emit_certificate(report::certify_tiling(code->code), out); });
}

tqc_status tqc_certify_min_distance(const tqc_lee_code* code, tqc_certificate** out) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(out);
  return guard([&] { return emit_certificate(report::certify_min_distance(code->code), out); });
}

tqc_status tqc_certify_stabilizers(int q, int n, tqc_certificate** out) {
  TQC_REQUIRE(out);
  return guard([&] { return emit_certificate(report::certify_stabilizers(q, n), out); });
}

tqc_status tqc_certify_bursts(const tqc_lee_code* code, tqc_burst_mode mode, int64_t samples, uint64_t seed,
                              unsigned threads, tqc_certificate** out) {
  TQC_REQUIRE(code);
  TQC_REQUIRE(out);
  return guard([&] {
    return emit_certificate(report::certify_bursts(code->code, burst_mode(mode, samples, seed), threads), out);
  });
}

void tqc_certificate_destroy(tqc_certificate* cert) { delete cert; }

tqc_status tqc_certificate_passed(const tqc_certificate* cert, int* out) {
  TQC_REQUIRE(cert);
  TQC_REQUIRE(out);
  *out = cert->cert.passed ? 1 : 0;
  return TQC_OK;
}

tqc_status tqc_certificate_json(const tqc_certificate* cert, char* out, size_t* out_len) {
  TQC_REQUIRE(cert);
  TQC_REQUIRE(out_len);
  return guard([&] { return write_text(cert->cert.to_json(), out, out_len); });
}

}  // extern "C"
