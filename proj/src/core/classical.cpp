#include "core/classical.hpp"

#include <array>
#include <cassert>
#include <cmath>

namespace eulerspin {

namespace {

struct Derivative {
  Vec3 dx, dv, domega;
};

Derivative motion_equations(const ClassicalState& s, const ParticleModel& model,
                            const FieldConfig& fields, const UnitSystem& units,
                            bool needs_gradient) {
  const Vec3 b = fields.magnetic(s.x, s.t);
  const Vec3 e = fields.electric(s.x, s.t);

  Derivative out;
  out.dx = s.v;
  Vec3 force = model.q * (e + s.v.cross(b) / units.c);
  Vec3 torque_rate = model.gtilde * s.omega.cross(b);
  if (needs_gradient) {
    const Mat3 grad = fields.gradient(s.x, s.t);  // grad(i,j) = d B_j / d x_i
    force += model.gtilde * model.inertia * (grad * s.omega);
    torque_rate -= model.gtilde * (grad.transpose() * s.v);
  }
  out.dv = force / model.m;
  out.domega = torque_rate;
  return out;
}

ClassicalState advance(const ClassicalState& s, const Derivative& d,
                       double h) {
  ClassicalState out = s;
  out.x += h * d.dx;
  out.v += h * d.dv;
  out.omega += h * d.domega;
  out.t += h;
  return out;
}

// Five-point fourth-order differentiation stencils: central in the interior,
// offset stencils over the outermost five-sample window near the ends. The
// right edge reuses the left-edge coefficients on reversed samples with the
// sign flipped.
Vec3 stencil_derivative(const std::vector<Vec3>& samples, std::size_t i,
                        double dt) {
  const std::size_t n = samples.size();
  assert(n >= 5);
  if (i >= 2 && i + 2 < n)
    return (samples[i - 2] - 8.0 * samples[i - 1] + 8.0 * samples[i + 1] -
            samples[i + 2]) /
           (12.0 * dt);
  static const double edge[2][5] = {
      {-25.0 / 12.0, 4.0, -3.0, 4.0 / 3.0, -0.25},
      {-0.25, -5.0 / 6.0, 1.5, -0.5, 1.0 / 12.0},
  };
  const bool left = i < 2;
  const std::size_t offset = left ? i : n - 1 - i;
  Vec3 out = Vec3::Zero();
  for (std::size_t k = 0; k < 5; ++k)
    out += edge[offset][k] * samples[left ? k : n - 1 - k];
  if (!left) out = -out;
  return out / dt;
}

}  // namespace

RigidBodyModel::RigidBodyModel(const Vec3& moments, const Mat3& q_bar)
    : inertia(moments), charge_tensor(q_bar) {
  if (moments.minCoeff() <= 0.0)
    throw InvalidArgument("principal moments must be positive");
  if ((q_bar - q_bar.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidArgument("charge tensor must be symmetric");
}

double rotational_kinetic(const EulerAngles& ang, const Vec3& rates,
                          double inertia) {
  const double r1 = rates[0], r2 = rates[1], r3 = rates[2];
  return 0.5 * inertia *
         (r1 * r1 + r3 * r3 + 2.0 * r1 * r3 * std::cos(ang.a2) + r2 * r2);
}

double lagrangian(const ClassicalState& state, const EulerAngles& ang,
                  const Vec3& rates, const ParticleModel& model,
                  const FieldConfig& fields, const UnitSystem& units) {
  const Vec3 a = fields.vector_potential(state.x, state.t);
  const Vec3 b = fields.magnetic(state.x, state.t);
  const double phi = fields.phi(state.x, state.t);
  return 0.5 * model.m * state.v.squaredNorm() +
         rotational_kinetic(ang, rates, model.inertia) - model.q * phi +
         (model.q / units.c) * state.v.dot(a) +
         model.gtilde * model.inertia * state.omega.dot(b);
}

double hamiltonian(const ClassicalState& state, const ParticleModel& model,
                   const FieldConfig& fields, const UnitSystem& units) {
  const Vec3 a = fields.vector_potential(state.x, state.t);
  const Vec3 b = fields.magnetic(state.x, state.t);
  const double phi = fields.phi(state.x, state.t);

  const Vec3 p = model.m * state.v + model.q * a / units.c;
  const Vec3 spin = model.inertia * state.omega +
                    model.inertia * model.gtilde * b;

  const Vec3 kinetic_momentum = p - model.q * a / units.c;
  const Vec3 rotational_momentum = spin - model.inertia * model.gtilde * b;
  return kinetic_momentum.squaredNorm() / (2.0 * model.m) +
         rotational_momentum.squaredNorm() / (2.0 * model.inertia) +
         model.q * phi;
}

TimeSeries integrate(const ClassicalState& initial, const ParticleModel& model,
                     const FieldConfig& fields, double dt, double total_time,
                     const UnitSystem& units) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw StepSizeInvalid("dt must be positive");
  if (!(total_time >= dt))
    throw StepSizeInvalid("total time must cover at least one step");

  const bool needs_gradient = fields.kind() != FieldClass::uniform_static;
  if (needs_gradient && !fields.has_gradient())
    throw FieldProviderMissingGradient(
        "non-uniform field integration needs the field gradient");

  const std::size_t steps = static_cast<std::size_t>(
      std::llround(total_time / dt));

  std::vector<ClassicalState> states;
  states.reserve(steps + 1);
  states.push_back(initial);
  ClassicalState s = initial;
  for (std::size_t n = 0; n < steps; ++n) {
    const Derivative k1 = motion_equations(s, model, fields, units,
                                           needs_gradient);
    const Derivative k2 = motion_equations(advance(s, k1, 0.5 * dt), model,
                                           fields, units, needs_gradient);
    const Derivative k3 = motion_equations(advance(s, k2, 0.5 * dt), model,
                                           fields, units, needs_gradient);
    const Derivative k4 = motion_equations(advance(s, k3, dt), model, fields,
                                           units, needs_gradient);
    ClassicalState next = s;
    next.x += dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    next.v += dt / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    next.omega +=
        dt / 6.0 * (k1.domega + 2.0 * k2.domega + 2.0 * k3.domega + k4.domega);
    next.t = initial.t + (n + 1) * dt;
    states.push_back(next);
    s = next;
  }

  std::vector<Vec3> spins;
  spins.reserve(states.size());
  for (const ClassicalState& st : states)
    spins.push_back(model.inertia * st.omega +
                    model.inertia * model.gtilde *
                        fields.magnetic(st.x, st.t));

  TimeSeries series;
  series.columns = {"t",  "X1", "X2", "X3", "V1",       "V2",    "V3",
                    "w1", "w2", "w3", "KE_trans", "KE_rot", "H",
                    "spin_residual"};
  for (std::size_t i = 0; i < states.size(); ++i) {
    const ClassicalState& st = states[i];
    const Vec3 b = fields.magnetic(st.x, st.t);
    double residual = 0.0;
    if (states.size() >= 5) {
      const Vec3 ds = stencil_derivative(spins, i, dt);
      residual = (ds - model.gtilde * spins[i].cross(b)).norm();
    }
    series.rows.push_back(
        {st.t, st.x[0], st.x[1], st.x[2], st.v[0], st.v[1], st.v[2],
         st.omega[0], st.omega[1], st.omega[2],
         0.5 * model.m * st.v.squaredNorm(),
         0.5 * model.inertia * st.omega.squaredNorm(),
         hamiltonian(st, model, fields, units), residual});
  }
  return series;
}

std::pair<double, double> anisotropic_energy(const Vec3& sbar,
                                             const RigidBodyModel& body,
                                             const Vec3& bbar) {
  const Vec3 coupling = body.charge_tensor * bbar;
  double h_rot = 0.0;
  double h_int = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double shifted = sbar[i] - coupling[i];
    h_rot += shifted * shifted / (2.0 * body.inertia[i]);
    h_int -= sbar[i] * coupling[i] / body.inertia[i];
  }
  return {h_rot, h_int};
}

}  // namespace eulerspin
