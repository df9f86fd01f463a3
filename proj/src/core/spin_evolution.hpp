#ifndef EULERSPIN_CORE_SPIN_EVOLUTION_HPP
#define EULERSPIN_CORE_SPIN_EVOLUTION_HPP

#include "core/density.hpp"
#include "core/timeseries.hpp"
#include "core/types.hpp"
#include "core/units.hpp"

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace eulerspin {

// Spinor amplitudes ordered by descending projection (first entry m = s).
struct SpinorState {
  int two_s;
  Eigen::VectorXcd amplitudes;
  double t = 0.0;

  SpinorState(int two_s_in, Eigen::VectorXcd amps, double t_in = 0.0);
  double norm() const { return amplitudes.norm(); }
};

// One spin sector of the uniform-field Hamiltonian: a scalar part common to
// all amplitudes and a Hermitian matrix part -gtilde B . S. A field callback
// makes the matrix part time-dependent through re-assembly.
struct SpinHamiltonian {
  int two_s;
  double hbar = 1.0;
  double scalar_part = 0.0;
  Eigen::MatrixXcd matrix_part;
  double gtilde = 0.0;
  Vec3 field = Vec3::Zero();
  std::optional<std::function<Vec3(double)>> field_of_t;

  Eigen::MatrixXcd total() const;
  double spectral_norm() const;
};

// scalar = s(s+1) hbar^2 / 2I + I gtilde^2 |B|^2 / 2 + extra_scalar;
// matrix = -gtilde [B3 S3 + (B- S+ + B+ S-) / 2] with B+- = B1 +- i B2.
SpinHamiltonian assemble_hamiltonian(int two_s, const ParticleModel& model,
                                     const Vec3& field,
                                     double extra_scalar = 0.0,
                                     double hbar = 1.0);

// Unitary midpoint-exponential integration of i hbar dU/dt = H U.
// Columns: t, U<k>_re, U<k>_im for each amplitude, S1, S2, S3, norm.
TimeSeries evolve(const SpinorState& initial, const SpinHamiltonian& h,
                  double dt, double total_time);

// Expectation vector (<S1>, <S2>, <S3>) of a spinor.
Vec3 spin_expectation(const SpinorState& state, double hbar = 1.0);

// Integrates the same spin-1/2 problem twice: once with the matrix part from
// the spin matrices, once with the two coupled amplitude equations written
// out entrywise from the field components. Returns the maximum amplitude
// discrepancy over the run; the forms are algebraically identical.
double coupled_vs_matrix_residual(const SpinorState& initial,
                                  const SpinHamiltonian& h, double dt,
                                  double total_time);

// Levels E(mbar) = [s(s+1) hbar^2 / I1 + (1/I3 - 1/I1) mbar^2 hbar^2] / 2,
// returned as (two_mbar, energy) pairs ordered by descending mbar.
std::vector<std::pair<int, double>> symmetric_top_spectrum(int two_s,
                                                           double i1,
                                                           double i3,
                                                           double hbar = 1.0);

// The same levels as eigenvalues of the assembled operator
// [sum_i Sbar_i Sbar_i / I1 + (1/I3 - 1/I1) Sbar_3 Sbar_3] / 2.
Eigen::VectorXd symmetric_top_eigenvalues(int two_s, double i1, double i3,
                                          double hbar = 1.0);

// Delta E = [s_to(s_to+1) - s_from(s_from+1)] (hbar c)^2 / (2 m c^2 a^2)
// in MeV, with the moment of inertia modeled as m a^2.
double rotator_transition_energy(double mc2_mev, double a_fm, int two_s_from,
                                 int two_s_to,
                                 const UnitSystem& units = UnitSystem::mev_fm());

}  // namespace eulerspin

#endif
