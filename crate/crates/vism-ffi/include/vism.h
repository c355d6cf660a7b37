/* C interface of the vism spectral solver. */

#ifndef VISM_H
#define VISM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum VismStatus {
  VISM_STATUS_OK = 0,
  /**
   * Bad input: unparsable potential, unknown mode, precision too low...
   */
  VISM_STATUS_CONFIG = 2,
  /**
   * The computation itself failed (no convergence, invalid bracket...).
   */
  VISM_STATUS_NUMERICAL = 3,
  /**
   * A required pointer argument was null.
   */
  VISM_STATUS_NULL_ARGUMENT = 4,
  /**
   * The caller's buffer cannot hold the result (including the NUL).
   */
  VISM_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * A state or argument index is out of range.
   */
  VISM_STATUS_OUT_OF_RANGE = 6,
} VismStatus;

/**
 * Solved eigenproblem handle.
 */
typedef struct VismSolution VismSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent error on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *vism_last_error(void);

/**
 * Solve for the lowest `states` eigenpairs.
 *
 * `half_length` is a decimal string or "auto" (built-in calibration).
 * On success `*out` owns the solution; release it with
 * [`vism_solution_free`].
 *
 * # Safety
 * `potential`, `mode` and `half_length` must be NUL-terminated strings;
 * `out` must be a valid pointer.
 */
enum VismStatus vism_solve(const char *potential,
                           const char *mode,
                           uint32_t n,
                           const char *half_length,
                           uint32_t precision_digits,
                           uint32_t states,
                           struct VismSolution **out);

/**
 * Release a solution handle. Null is a no-op.
 *
 * # Safety
 * `s` must come from [`vism_solve`] and must not be used afterwards.
 */
void vism_solution_free(struct VismSolution *s);

/**
 * Number of eigenpairs held by the solution.
 *
 * # Safety
 * `s` must be a live handle from [`vism_solve`].
 */
uint32_t vism_solution_states(const struct VismSolution *s);

/**
 * Eigenvalue of one state as a decimal string.
 *
 * # Safety
 * `s` must be a live handle; `buf` must point to `len` writable bytes.
 */
enum VismStatus vism_solution_energy(const struct VismSolution *s,
                                     uint32_t state,
                                     char *buf,
                                     uintptr_t len);

/**
 * Parity label of one state: 0 even, 1 odd, -1 unknown (not solved
 * blockwise).
 *
 * # Safety
 * `s` must be a live handle; `out` must be a valid pointer.
 */
enum VismStatus vism_solution_parity(const struct VismSolution *s, uint32_t state, int *out);

/**
 * Half-length the solution was computed at, as a decimal string (useful
 * with "auto").
 *
 * # Safety
 * `s` must be a live handle; `buf` must point to `len` writable bytes.
 */
enum VismStatus vism_solution_half_length(const struct VismSolution *s, char *buf, uintptr_t len);

/**
 * Wavefunction value ψ_state(x); `x` is a decimal string inside the
 * solve domain.
 *
 * # Safety
 * `s` must be a live handle; `x` a NUL-terminated string; `buf` must
 * point to `len` writable bytes.
 */
enum VismStatus vism_solution_eval_psi(const struct VismSolution *s,
                                       uint32_t state,
                                       const char *x,
                                       char *buf,
                                       uintptr_t len);

/**
 * Reference-free error estimate δ̂_E of one state: the relative change of
 * its eigenvalue between truncations N and N+1, both on the calibrated
 * L̂(N) curve. Requires a built-in calibration for the potential.
 *
 * # Safety
 * `potential` and `mode` must be NUL-terminated strings; `buf` must point
 * to `len` writable bytes.
 */
enum VismStatus vism_delta_e_hat(const char *potential,
                                 const char *mode,
                                 uint32_t n,
                                 uint32_t state,
                                 uint32_t precision_digits,
                                 char *buf,
                                 uintptr_t len);

/**
 * Locate the optimal half-length L̂(N) by a reference-free method
 * ("energy-min-confinement" or "energy-inflection-periodic").
 *
 * # Safety
 * `potential`, `method` and `tol_l` must be NUL-terminated strings; `buf`
 * must point to `len` writable bytes.
 */
enum VismStatus vism_find_l_hat(const char *potential,
                                const char *method,
                                uint32_t n,
                                uint32_t precision_digits,
                                const char *tol_l,
                                char *buf,
                                uintptr_t len);

/**
 * Library version as a static string.
 */
const char *vism_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VISM_H */
