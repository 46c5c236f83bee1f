#ifndef VSCAT_H
#define VSCAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every vscat call.
 */
typedef enum VscatStatus {
  VSCAT_STATUS_OK = 0,
  VSCAT_STATUS_NULL_POINTER = 1,
  VSCAT_STATUS_INVALID_ARGUMENT = 2,
  VSCAT_STATUS_CLOSED_CHANNEL = 3,
  VSCAT_STATUS_SUPERCRITICAL_COUPLING = 4,
  VSCAT_STATUS_GAMMA_POLE = 5,
  VSCAT_STATUS_NO_CONVERGENCE = 6,
  VSCAT_STATUS_NO_BOUND_STATE = 7,
  VSCAT_STATUS_INTERNAL_ERROR = 8,
} VscatStatus;

/**
 * Opaque scattering model: two masses, the potential, and the energy.
 */
typedef struct VscatModel VscatModel;

/**
 * Phase-shift output record.
 */
typedef struct VscatPhaseShift {
  /**
   * Phase shift delta_l (radians, continuous-argument convention).
   */
  double delta;
  /**
   * Asymptotic wave number.
   */
  double k;
  /**
   * Amplitude-matched normalization constant.
   */
  double normalization;
  /**
   * Indicial exponent lambda.
   */
  double lambda;
} VscatPhaseShift;

/**
 * Bound-state output record.
 */
typedef struct VscatBoundState {
  /**
   * Energy E_{n,l} (below the potential asymptote a).
   */
  double energy;
  /**
   * Magnitude of the pole-condition residual at the solution.
   */
  double residual;
} VscatBoundState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a model. `sigma_override` replaces (mu/eta)^3 when it is a finite
 * positive number; pass NaN to use the mass formula. Returns a handle through
 * `out`; free it with [`vscat_model_free`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum VscatStatus vscat_model_new(double m1,
                                 double m2,
                                 double sigma_override,
                                 double a,
                                 double b,
                                 double beta,
                                 double energy,
                                 struct VscatModel **out);

/**
 * Destroy a model handle. A null handle is a no-op.
 *
 * # Safety
 * `model` must be null or a pointer from [`vscat_model_new`], not yet freed.
 */
void vscat_model_free(struct VscatModel *model);

/**
 * Phase shift, wave number, normalization and lambda for channel l.
 *
 * # Safety
 * `model` and `out` must be valid pointers.
 */
enum VscatStatus vscat_phase_shift(const struct VscatModel *model,
                                   unsigned int l,
                                   struct VscatPhaseShift *out);

/**
 * Bound-state energy for quantum numbers (n, l). Returns `NoBoundState`
 * when the well binds no such state (not an error condition).
 *
 * # Safety
 * `model` and `out` must be valid pointers.
 */
enum VscatStatus vscat_bound_state(const struct VscatModel *model,
                                   unsigned int n,
                                   unsigned int l,
                                   struct VscatBoundState *out);

/**
 * Sample the normalized radial wavefunction on `len` radii, writing real and
 * imaginary parts to `out_re` / `out_im`.
 *
 * # Safety
 * `model`, `r`, `out_re`, `out_im` must be valid for `len` elements.
 */
enum VscatStatus vscat_radial_wavefunction(const struct VscatModel *model,
                                           unsigned int l,
                                           const double *r,
                                           size_t len,
                                           double *out_re,
                                           double *out_im);

/**
 * Static, NUL-terminated description of a status code.
 */
const char *vscat_status_message(enum VscatStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VSCAT_H */
