#ifndef UMBRAL_H
#define UMBRAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * The four grid delta operators.
 */
typedef enum UmbralDelta {
  UMBRAL_DELTA_PARTIAL = 0,
  UMBRAL_DELTA_LAGUERRE = 1,
  UMBRAL_DELTA_PARTIAL_ONE_PLUS = 2,
  UMBRAL_DELTA_SHIFTED_PARTIAL = 3,
} UmbralDelta;

typedef enum UmbralMethod {
  UMBRAL_METHOD_LAGRANGE1 = 0,
  UMBRAL_METHOD_LAGRANGE2 = 1,
  UMBRAL_METHOD_RODRIGUES3 = 2,
  UMBRAL_METHOD_RODRIGUES4 = 3,
  UMBRAL_METHOD_SOLVE = 4,
} UmbralMethod;

typedef enum UmbralSpinMatrix {
  UMBRAL_SPIN_MATRIX_J3 = 0,
  UMBRAL_SPIN_MATRIX_JPLUS = 1,
  UMBRAL_SPIN_MATRIX_JMINUS = 2,
} UmbralSpinMatrix;

typedef enum UmbralStatus {
  UMBRAL_STATUS_OK = 0,
  UMBRAL_STATUS_NULL_POINTER = 1,
  UMBRAL_STATUS_INVALID_UTF8 = 2,
  UMBRAL_STATUS_INVALID_PSI = 3,
  UMBRAL_STATUS_PARSE = 4,
  UMBRAL_STATUS_ZERO_DIVISOR = 5,
  UMBRAL_STATUS_BEYOND_TRUNCATION = 6,
  UMBRAL_STATUS_TRUNCATION_EXCEEDED = 7,
  UMBRAL_STATUS_NON_INVERTIBLE = 8,
  UMBRAL_STATUS_NOT_DELTA = 9,
  UMBRAL_STATUS_INVALID_ARGUMENT = 10,
  UMBRAL_STATUS_DEGENERATE_DEFORMATION = 11,
  UMBRAL_STATUS_NOT_PSD = 12,
  UMBRAL_STATUS_INVALID_SPIN = 13,
  UMBRAL_STATUS_DIMENSION_MISMATCH = 14,
  UMBRAL_STATUS_NOT_DIAGONAL = 15,
  UMBRAL_STATUS_INTERNAL = 16,
  UMBRAL_STATUS_PANIC = 17,
} UmbralStatus;

typedef enum UmbralWeylMatrix {
  UMBRAL_WEYL_MATRIX_SIGMA1 = 0,
  UMBRAL_WEYL_MATRIX_SIGMA2 = 1,
  UMBRAL_WEYL_MATRIX_Q = 2,
  UMBRAL_WEYL_MATRIX_P = 3,
  UMBRAL_WEYL_MATRIX_S = 4,
  UMBRAL_WEYL_MATRIX_OMEGA_P = 5,
} UmbralWeylMatrix;

/**
 * A finite list of polynomials with exact rational-function coefficients.
 */
typedef struct UmbralPolys UmbralPolys;

/**
 * A ψ-sequence.
 */
typedef struct UmbralPsi UmbralPsi;

typedef struct UmbralSpin UmbralSpin;

typedef struct UmbralWeyl UmbralWeyl;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next call into this library.
 */
const char *umbral_last_error(void);

/**
 * Static name of a status code.
 */
const char *umbral_status_name(enum UmbralStatus status);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void umbral_string_free(char *s);

/**
 * Built-in sequence (`classic`, `qgauss`, `fibonacci`, `square`) truncated at `n_max`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum UmbralStatus umbral_psi_builtin(const char *name, uintptr_t n_max, struct UmbralPsi **out);

/**
 * Custom sequence from a JSON array of rational-function strings `ψ_0, ψ_1, ...`.
 *
 * # Safety
 * `name` and `json` must be NUL-terminated strings; `out` must be writable.
 */
enum UmbralStatus umbral_psi_from_json(const char *name, const char *json, struct UmbralPsi **out);

/**
 * # Safety
 * `psi` must be null or a handle from this library, not yet freed.
 */
void umbral_psi_free(struct UmbralPsi *psi);

/**
 * # Safety
 * `psi` must be a live handle.
 */
uintptr_t umbral_psi_n_max(const struct UmbralPsi *psi);

/**
 * `n_ψ` as a canonical string.
 *
 * # Safety
 * `psi` must be a live handle; `out` must be writable.
 */
enum UmbralStatus umbral_psi_number(const struct UmbralPsi *psi, uintptr_t n, char **out);

/**
 * `C(n, k)_ψ` as a canonical string.
 *
 * # Safety
 * `psi` must be a live handle; `out` must be writable.
 */
enum UmbralStatus umbral_psi_binomial(const struct UmbralPsi *psi,
                                      uintptr_t n,
                                      uintptr_t k,
                                      char **out);

/**
 * Basic sequence `p_0 ..= p_n` of a grid delta operator.
 *
 * # Safety
 * `psi` must be a live handle; `out` must be writable.
 */
enum UmbralStatus umbral_basic_sequence(const struct UmbralPsi *psi,
                                        enum UmbralDelta delta,
                                        uintptr_t n,
                                        enum UmbralMethod m,
                                        struct UmbralPolys **out);

/**
 * # Safety
 * `polys` must be null or a handle from this library, not yet freed.
 */
void umbral_polys_free(struct UmbralPolys *polys);

/**
 * # Safety
 * `polys` must be a live handle.
 */
uintptr_t umbral_polys_len(const struct UmbralPolys *polys);

/**
 * Coefficient of `x^k` in polynomial `i`, as a canonical string.
 *
 * # Safety
 * `polys` must be a live handle; `out` must be writable.
 */
enum UmbralStatus umbral_polys_coeff(const struct UmbralPolys *polys,
                                     uintptr_t i,
                                     uintptr_t k,
                                     char **out);

/**
 * All polynomials as a JSON array of coefficient-string arrays.
 *
 * # Safety
 * `polys` must be a live handle; `out` must be writable.
 */
enum UmbralStatus umbral_polys_json(const struct UmbralPolys *polys, char **out);

/**
 * Smallest `k <= n` where the ψ-binomial expansion on the quantum plane fails.
 * `*witness` is set to that `k`, or to `-1` when the identity holds up to `n`.
 *
 * # Safety
 * `psi` must be a live handle; `witness` must be writable.
 */
enum UmbralStatus umbral_nogo_witness(const struct UmbralPsi *psi, uintptr_t n, int64_t *witness);

/**
 * Symmetric q-number `[x]_q`.
 *
 * # Safety
 * `re` and `im` must be writable.
 */
enum UmbralStatus umbral_q_bracket(double x, double q_re, double q_im, double *re, double *im);

/**
 * Spin `two_j / 2` representation; `deformed = false` ignores `q`.
 *
 * # Safety
 * `out` must be writable.
 */
enum UmbralStatus umbral_spin_build(uint32_t two_j,
                                    bool deformed,
                                    double q_re,
                                    double q_im,
                                    struct UmbralSpin **out);

/**
 * # Safety
 * `spin` must be null or a handle from this library, not yet freed.
 */
void umbral_spin_free(struct UmbralSpin *spin);

/**
 * # Safety
 * `spin` must be a live handle.
 */
uintptr_t umbral_spin_dim(const struct UmbralSpin *spin);

/**
 * Copy a matrix row-major as interleaved `re, im` into `buf` (`2 dim²` doubles).
 *
 * # Safety
 * `spin` must be a live handle; `buf` must hold `len` doubles.
 */
enum UmbralStatus umbral_spin_matrix(const struct UmbralSpin *spin,
                                     enum UmbralSpinMatrix which,
                                     double *buf,
                                     uintptr_t len);

/**
 * Commutator report as JSON; `*pass` receives the verdict.
 *
 * # Safety
 * `spin` must be a live handle; `pass` and `out` must be writable.
 */
enum UmbralStatus umbral_spin_commutators(const struct UmbralSpin *spin,
                                          double tolerance,
                                          bool *pass,
                                          char **out);

/**
 * Polar-decomposition report as JSON; fails with `NOT_PSD` for non-positive brackets.
 *
 * # Safety
 * `spin` must be a live handle; `pass` and `out` must be writable.
 */
enum UmbralStatus umbral_spin_polar(const struct UmbralSpin *spin,
                                    double tolerance,
                                    bool *pass,
                                    char **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum UmbralStatus umbral_weyl_build(uintptr_t n, struct UmbralWeyl **out);

/**
 * # Safety
 * `weyl` must be null or a handle from this library, not yet freed.
 */
void umbral_weyl_free(struct UmbralWeyl *weyl);

/**
 * Copy one of the pair's matrices, as for `umbral_spin_matrix`.
 *
 * # Safety
 * `weyl` must be a live handle; `buf` must hold `len` doubles.
 */
enum UmbralStatus umbral_weyl_matrix(const struct UmbralWeyl *weyl,
                                     enum UmbralWeylMatrix which,
                                     double *buf,
                                     uintptr_t len);

/**
 * # Safety
 * `weyl` must be a live handle; `pass` and `out` must be writable.
 */
enum UmbralStatus umbral_weyl_check(const struct UmbralWeyl *weyl,
                                    double tolerance,
                                    bool *pass,
                                    char **out);

/**
 * Run a verification suite (`methods`, ..., `all`) at size `n`; the full
 * report is written as JSON.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `pass` and `out` must be writable.
 */
enum UmbralStatus umbral_verify(const char *suite,
                                uintptr_t n,
                                double tolerance,
                                bool *pass,
                                char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UMBRAL_H */
