#ifndef EULERSPIN_CORE_CLASSICAL_HPP
#define EULERSPIN_CORE_CLASSICAL_HPP

#include "core/density.hpp"
#include "core/fields.hpp"
#include "core/timeseries.hpp"
#include "core/types.hpp"
#include "core/units.hpp"

#include <utility>

namespace eulerspin {

struct ClassicalState {
  Vec3 x = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Vec3 omega = Vec3::Zero();
  double t = 0.0;
};

// Rigid body with distinct principal moments and a symmetric body-frame
// charge tensor coupling the spin to the field.
struct RigidBodyModel {
  Vec3 inertia;
  Mat3 charge_tensor;

  RigidBodyModel(const Vec3& moments, const Mat3& q_bar);
};

// Rotational kinetic energy in angle-rate form:
// (I/2)[rate1^2 + rate3^2 + 2 rate1 rate3 cos(a2) + rate2^2].
double rotational_kinetic(const EulerAngles& ang, const Vec3& rates,
                          double inertia);

// L = m V^2/2 + T_rot - q phi + (q/c) V . A + gtilde I omega . B.
double lagrangian(const ClassicalState& state, const EulerAngles& ang,
                  const Vec3& rates, const ParticleModel& model,
                  const FieldConfig& fields,
                  const UnitSystem& units = UnitSystem::natural());

// Assembled from the canonical momenta: H = (P - qA/c)^2 / 2m
// + (S - I gtilde B)^2 / 2I + q phi with P = mV + qA/c and
// S = I omega + I gtilde B; collapses to kinetic + potential energy.
double hamiltonian(const ClassicalState& state, const ParticleModel& model,
                   const FieldConfig& fields,
                   const UnitSystem& units = UnitSystem::natural());

// Fixed-step fourth-order Runge-Kutta on
//   m dV/dt = q (E + V x B / c) + gtilde I (grad B) omega,
//   I d omega/dt = gtilde I omega x B - gtilde I (V . grad) B.
// Columns: t, X1..X3, V1..V3, w1..w3, KE_trans, KE_rot, H, spin_residual,
// where spin_residual is |dS/dt - gtilde S x B| with S = I omega + I gtilde B
// and dS/dt from five-point finite differences over the stored samples
// (meaningful for static fields; uniform fields skip the gradient force).
TimeSeries integrate(const ClassicalState& initial, const ParticleModel& model,
                     const FieldConfig& fields, double dt, double total_time,
                     const UnitSystem& units = UnitSystem::natural());

// Quadratic-form energies of an anisotropic body in a body-frame field:
// H_rot = sum_i (Sbar_i - (Qbar Bbar)_i)^2 / (2 Ibar_i) and the cross term
// H_int = -sum_i Sbar_i (Qbar Bbar)_i / Ibar_i.
std::pair<double, double> anisotropic_energy(const Vec3& sbar,
                                             const RigidBodyModel& body,
                                             const Vec3& bbar);

}  // namespace eulerspin

#endif
