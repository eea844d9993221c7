#ifndef TORNHEIM_H
#define TORNHEIM_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Call status. Zero is success; everything else names the failure class.
 */
typedef enum TornheimStatus {
  TORNHEIM_STATUS_OK = 0,
  TORNHEIM_STATUS_NULL_POINTER = 1,
  TORNHEIM_STATUS_SINGULAR = 2,
  TORNHEIM_STATUS_CONVERGENCE = 3,
  TORNHEIM_STATUS_DOMAIN = 4,
  TORNHEIM_STATUS_NOT_A_POLE = 5,
  TORNHEIM_STATUS_INTERNAL = 6,
} TornheimStatus;

/**
 * Opaque evaluation configuration.
 */
typedef struct TornheimConfig TornheimConfig;

/**
 * Result of one evaluation.
 */
typedef struct TornheimResult {
  double value_re;
  double value_im;
  /**
   * Estimated absolute error of the value.
   */
  double err;
  /**
   * Series terms consumed.
   */
  size_t terms;
} TornheimResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Short static name for a status code.
 */
const char *tornheim_status_name(enum TornheimStatus status);

/**
 * New configuration with default tolerance 1e-10. Free with
 * tornheim_config_free.
 */
struct TornheimConfig *tornheim_config_new(void);

/**
 * Release a configuration handle. A null handle is ignored.
 */
void tornheim_config_free(struct TornheimConfig *cfg);

/**
 * Set the target absolute tolerance. Must be positive.
 */
enum TornheimStatus tornheim_config_set_tol(struct TornheimConfig *cfg, double tol);

/**
 * Cap the series order (number of coefficient shells).
 */
enum TornheimStatus tornheim_config_set_max_order(struct TornheimConfig *cfg, size_t max_order);

/**
 * Evaluate T(s,t,u) with automatic identity selection.
 */
enum TornheimStatus tornheim_eval_t(const struct TornheimConfig *cfg,
                                    double s_re,
                                    double s_im,
                                    double t_re,
                                    double t_im,
                                    double u_re,
                                    double u_im,
                                    struct TornheimResult *out);

/**
 * Evaluate the symmetric series S1(s,t,u).
 */
enum TornheimStatus tornheim_eval_s1(const struct TornheimConfig *cfg,
                                     double s_re,
                                     double s_im,
                                     double t_re,
                                     double t_im,
                                     double u_re,
                                     double u_im,
                                     struct TornheimResult *out);

/**
 * Evaluate the symmetric series S2(s,t,u).
 */
enum TornheimStatus tornheim_eval_s2(const struct TornheimConfig *cfg,
                                     double s_re,
                                     double s_im,
                                     double t_re,
                                     double t_im,
                                     double u_re,
                                     double u_im,
                                     struct TornheimResult *out);

/**
 * Evaluate the symmetric series S3(s,t,u).
 */
enum TornheimStatus tornheim_eval_s3(const struct TornheimConfig *cfg,
                                     double s_re,
                                     double s_im,
                                     double t_re,
                                     double t_im,
                                     double u_re,
                                     double u_im,
                                     struct TornheimResult *out);

/**
 * Evaluate the symmetric series S4(s,t,u).
 */
enum TornheimStatus tornheim_eval_s4(const struct TornheimConfig *cfg,
                                     double s_re,
                                     double s_im,
                                     double t_re,
                                     double t_im,
                                     double u_re,
                                     double u_im,
                                     struct TornheimResult *out);

/**
 * Residue of s -> T(s,s,s) at s0 by a two-radius circle average with the
 * given coarse radius (0 selects the default 1e-3). Returns NotAPole when
 * the point is regular.
 */
enum TornheimStatus tornheim_residue_diag(const struct TornheimConfig *cfg,
                                          double s0_re,
                                          double s0_im,
                                          double radius,
                                          double *residue_re,
                                          double *residue_im,
                                          double *spread);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TORNHEIM_H */
