/*
 * C interface to the toricqc verification library.
 *
 * Every function returns a tqc_status; outputs go through pointer arguments.
 * Objects are opaque handles released with the matching *_destroy call.
 * Text outputs use the size-query convention: pass out == NULL (or a short
 * buffer) to receive the required size, including the terminating NUL, in
 * *out_len together with TQC_ERROR_BUFFER_TOO_SMALL.
 */
#ifndef TORICQC_H
#define TORICQC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TQC_API __declspec(dllexport)
#else
#define TQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tqc_status {
  TQC_OK = 0,
  TQC_ERROR_INVALID_ARGUMENT = -1,
  TQC_ERROR_NULL_POINTER = -2,
  TQC_ERROR_DIMENSION_MISMATCH = -3,
  TQC_ERROR_SINGULAR_MATRIX = -4,
  TQC_ERROR_NOT_SUBLATTICE = -5,
  TQC_ERROR_NOT_PERFECT = -6,
  TQC_ERROR_NOT_CERTIFIED = -7,
  TQC_ERROR_OVERFLOW = -8,
  TQC_ERROR_BUFFER_TOO_SMALL = -9,
  TQC_ERROR_INTERNAL = -10,
  TQC_ERROR_UNKNOWN = -99
} tqc_status;

typedef struct tqc_lee_code tqc_lee_code;
typedef struct tqc_interleaver tqc_interleaver;
typedef struct tqc_certificate tqc_certificate;

TQC_API const char* tqc_version(void);
TQC_API const char* tqc_status_string(tqc_status status);
/* Message of the last failure on the calling thread ("" if none). */
TQC_API const char* tqc_last_error(void);

/* ---- integer lattices (row-major n*n matrices, row-vector convention) ---- */

TQC_API tqc_status tqc_determinant(const int64_t* matrix, size_t n, int64_t* out);
TQC_API tqc_status tqc_hermite_form(const int64_t* matrix, size_t n, int64_t* out_form);
/* *found = 1 and x filled when x·m = v has an integer solution. */
TQC_API tqc_status tqc_solve_left(const int64_t* matrix, size_t n, const int64_t* v, int64_t* x, int* found);
TQC_API tqc_status tqc_coset_count(const int64_t* outer, const int64_t* inner, size_t n, int64_t* out);

typedef struct tqc_chain_report {
  int64_t det_abs;
  int64_t index_za;
  int64_t index_aqz; /* 0 when inclusion fails */
  int inclusion_holds;
  int strict;
} tqc_chain_report;

TQC_API tqc_status tqc_verify_chain(const int64_t* matrix, size_t n, int64_t q, tqc_chain_report* out);

/* ---- Lee codes ---- */

/* generators: count rows of n integers each. */
TQC_API tqc_status tqc_lee_code_create(int q, int n, const int64_t* generators, size_t count, tqc_lee_code** out);
/* The certified instances (q, n) = (7, 3) and (9, 4). */
TQC_API tqc_status tqc_lee_code_create_certified(int q, int n, tqc_lee_code** out);
TQC_API void tqc_lee_code_destroy(tqc_lee_code* code);

TQC_API tqc_status tqc_lee_code_size(const tqc_lee_code* code, size_t* out);
TQC_API tqc_status tqc_lee_code_codeword(const tqc_lee_code* code, size_t index, int64_t* out, size_t n);
TQC_API tqc_status tqc_lee_code_tiling_check(const tqc_lee_code* code, int* out);
TQC_API tqc_status tqc_lee_code_min_distance(const tqc_lee_code* code, int64_t* out);
TQC_API tqc_status tqc_lee_code_decode(const tqc_lee_code* code, const int64_t* point, size_t n, int64_t* codeword,
                                       int* offset_index);
TQC_API tqc_status tqc_mannheim_weight(const int64_t* v, size_t n, int64_t q, int64_t* out);

/* ---- toric complex ---- */

typedef struct tqc_commutation_report {
  int64_t x_count;
  int64_t z_count;
  int64_t overlapping_pairs;
  int64_t odd_pairs;
  int max_overlap;
  int passed;
} tqc_commutation_report;

TQC_API tqc_status tqc_commutation_check(int q, int n, tqc_commutation_report* out);
TQC_API tqc_status tqc_face_count(int q, int n, int64_t* out);

typedef struct tqc_code_params {
  int64_t length;
  int64_t dimension;
  int64_t distance; /* 0 when no distance is claimed */
  int64_t t;
} tqc_code_params;

TQC_API tqc_status tqc_literature_params(int q, int n, tqc_code_params* out);
TQC_API tqc_status tqc_new_code_params(int q, int n, tqc_code_params* out);
TQC_API tqc_status tqc_interleaved_params(int q, int n, tqc_code_params* out);

/* ---- interleaver ---- */

TQC_API tqc_status tqc_interleaver_create(const tqc_lee_code* code, tqc_interleaver** out);
TQC_API void tqc_interleaver_destroy(tqc_interleaver* map);
TQC_API tqc_status tqc_interleaver_size(const tqc_interleaver* map, int64_t* out);
/* Logical (j, b, i) -> physical (hypercube torus index, slot). */
TQC_API tqc_status tqc_interleaver_forward(const tqc_interleaver* map, int j, int b, int64_t i, int64_t* hypercube,
                                           int* slot);
TQC_API tqc_status tqc_interleaver_inverse(const tqc_interleaver* map, int64_t hypercube, int slot, int* j, int* b,
                                           int64_t* i);
/* faces: face indices in enumeration order. */
TQC_API tqc_status tqc_deinterleave(const tqc_interleaver* map, const int64_t* faces, size_t count, int* correctable,
                                    int* max_block_errors);

typedef enum tqc_burst_mode { TQC_BURST_EXHAUSTIVE = 0, TQC_BURST_SAMPLED = 1 } tqc_burst_mode;

typedef struct tqc_burst_summary {
  int64_t total_checked;
  int64_t exhaustive;
  int64_t sampled;
  int64_t extremal;
  int64_t failures;
  int max_block_count;
  int passed;
} tqc_burst_summary;

TQC_API tqc_status tqc_verify_bursts(const tqc_interleaver* map, tqc_burst_mode mode, int64_t samples, uint64_t seed,
                                     unsigned threads, tqc_burst_summary* out);
TQC_API tqc_status tqc_loose_burst_statistics(const tqc_interleaver* map, int64_t samples, uint64_t seed,
                                              int64_t* checked, int64_t* uncorrectable);

/* ---- reports ---- */

/* format: "markdown", "csv" or "json-lines". */
TQC_API tqc_status tqc_emit_tables(const char* format, char* out, size_t* out_len);

TQC_API tqc_status tqc_certify_chain(int q, tqc_certificate** out);
TQC_API tqc_status tqc_certify_tiling(const tqc_lee_code* code, tqc_certificate** out);
TQC_API tqc_status tqc_certify_min_distance(const tqc_lee_code* code, tqc_certificate** out);
TQC_API tqc_status tqc_certify_stabilizers(int q, int n, tqc_certificate** out);
TQC_API tqc_status tqc_certify_bursts(const tqc_lee_code* code, tqc_burst_mode mode, int64_t samples, uint64_t seed,
                                      unsigned threads, tqc_certificate** out);
TQC_API void tqc_certificate_destroy(tqc_certificate* cert);
TQC_API tqc_status tqc_certificate_passed(const tqc_certificate* cert, int* out);
TQC_API tqc_status tqc_certificate_json(const tqc_certificate* cert, char* out, size_t* out_len);

#ifdef __cplusplus
}
#endif

#endif /* TORICQC_H */
