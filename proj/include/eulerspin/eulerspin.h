/* C interface to the rigid-rotator spin library.
 *
 * Every function returns an es_status; outputs are written through caller
 * buffers or opaque handles. On any failure es_last_error() returns a
 * thread-local description of the most recent error in the calling thread.
 * Complex buffers are interleaved (re, im) pairs in row-major order.
 */

#ifndef EULERSPIN_H
#define EULERSPIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum es_status {
  ES_OK = 0,
  ES_INVALID_ARGUMENT = 1,
  ES_SINGULAR_ORIENTATION = 2,
  ES_INVALID_LABEL = 3,
  ES_PARITY_MIXING = 4,
  ES_QUADRATURE_UNDERRESOLVED = 5,
  ES_UNNORMALIZED_PROFILE = 6,
  ES_STEP_SIZE_INVALID = 7,
  ES_FIELD_GRADIENT_MISSING = 8,
  ES_CONFIG_ERROR = 9,
  ES_INTERNAL_ERROR = 10
} es_status;

/* Message for the most recent failure in this thread; empty string if none. */
const char* es_last_error(void);

/* Orientation kinematics. Angles are the z-y-z convention in radians. */
es_status es_rotation_matrix(double a1, double a2, double a3, double out[9]);
es_status es_metric(double a1, double a2, double a3, double inertia,
                    double mass, double covariant[9], double contravariant[9],
                    double* sqrt_det);
es_status es_cayley_klein_metric(double a1, double a2, double a3,
                                 double inertia, double mass, double out[9]);
es_status es_epsilon_identity_residual(double a1, double a2, double a3,
                                       double* out);

/* Spin basis. Quantum numbers are doubled so half-integers stay integral. */
es_status es_little_d(int two_s, int two_m, int two_mbar, double beta,
                      double* out);
es_status es_harmonic_value(int two_s, int two_m, int two_mbar, double a1,
                            double a2, double a3, double out[2]);
es_status es_spin_matrices(int two_s, double hbar, double* sx, double* sy,
                           double* sz);
es_status es_validate_superposition(const int* two_s, size_t count);

/* Spectra and scales. */
es_status es_symmetric_top_spectrum(int two_s, double i1, double i3,
                                    double hbar, int* two_mbar_out,
                                    double* energy_out);
es_status es_transition_energy(double mc2_mev, double a_fm, int two_s_from,
                               int two_s_to, double* out_mev);

/* Relativistic ring solution in cgs units with spin hbar / 2:
 * out = {lambda, beta, gamma}. */
es_status es_ring_solution(double m_grams, double a_fm, double out[3]);

/* Moments of built-in density profiles (kind 0 = uniform ball,
 * 1 = thin shell) with unit light speed. */
es_status es_moments(int charge_kind, int mass_kind, double radius, double m,
                     double q, double* inertia, double* g, double* gtilde);

/* Time series from the simulators. */
typedef struct es_trajectory es_trajectory;

typedef struct es_classical_config {
  double m, q, inertia, g, gtilde;
  int field_kind; /* 0 zero, 1 uniform, 2 linear b(x, -y, 0) */
  double b0[3];
  double e0[3];
  double strength;
  double x0[3];
  double v0[3];
  double w0[3];
  double dt;
  double total_time;
} es_classical_config;

es_status es_classical_run(const es_classical_config* config,
                           es_trajectory** out);

typedef struct es_spin_config {
  int two_s;
  const double* amplitudes; /* interleaved, two_s + 1 pairs, unit norm */
  double gtilde;
  double inertia;
  double hbar;
  double field[3];
  double extra_scalar;
  double dt;
  double total_time;
} es_spin_config;

es_status es_spin_evolve(const es_spin_config* config, es_trajectory** out);

size_t es_trajectory_rows(const es_trajectory* trajectory);
size_t es_trajectory_columns(const es_trajectory* trajectory);
const char* es_trajectory_header(es_trajectory* trajectory);
double es_trajectory_cell(const es_trajectory* trajectory, size_t row,
                          size_t column);
const char* es_trajectory_csv(es_trajectory* trajectory);
void es_trajectory_free(es_trajectory* trajectory);

/* Invariant suite. */
typedef struct es_report es_report;

es_status es_verify_run(uint64_t seed, double tolerance_override,
                        es_report** out);
int es_report_passed(const es_report* report);
size_t es_report_count(const es_report* report);
const char* es_report_json(es_report* report);
const char* es_report_check_name(const es_report* report, size_t index);
double es_report_check_residual(const es_report* report, size_t index);
void es_report_free(es_report* report);

#ifdef __cplusplus
}
#endif

#endif
