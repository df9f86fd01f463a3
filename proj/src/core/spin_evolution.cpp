#include "core/spin_evolution.hpp"

#include "core/wigner.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace eulerspin {

namespace {

Eigen::MatrixXcd field_coupling(int two_s, double gtilde, const Vec3& b,
                                double hbar) {
  const SpinMatrices mats = spin_matrices(two_s, hbar);
  const Complex b_plus(b[0], b[1]);
  const Complex b_minus(b[0], -b[1]);
  return -gtilde * (b[2] * mats.sz +
                    0.5 * (b_minus * mats.plus + b_plus * mats.minus));
}

Eigen::MatrixXcd propagator(const Eigen::MatrixXcd& h, double dt, double hbar) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  const Eigen::VectorXcd phases =
      (Complex(0.0, -dt / hbar) * eig.eigenvalues().cast<Complex>())
          .array()
          .exp();
  Eigen::MatrixXcd u = eig.eigenvectors() * phases.asDiagonal() *
                       eig.eigenvectors().adjoint();
  // The eigenbasis is orthonormal only to roundoff, and reapplying one step
  // thousands of times turns that bias into a linear norm drift. One
  // Newton-Schulz sweep toward the polar unitary factor squares the error
  // away.
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  u = 0.5 * u *
      (3.0 * Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()) - gram);
  return u;
}

void require_step(const SpinHamiltonian& h, double dt, double total_time) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw StepSizeInvalid("dt must be positive");
  if (!(total_time >= dt))
    throw StepSizeInvalid("total time must cover at least one step");
  const double norm = h.spectral_norm();
  if (dt * norm / h.hbar >= 0.1)
    throw StepSizeInvalid("dt " + std::to_string(dt) +
                          " too coarse for spectral norm " +
                          std::to_string(norm));
}

}  // namespace

SpinorState::SpinorState(int two_s_in, Eigen::VectorXcd amps, double t_in)
    : two_s(two_s_in), amplitudes(std::move(amps)), t(t_in) {
  if (two_s < 0) throw InvalidLabel("negative spin");
  if (amplitudes.size() != two_s + 1)
    throw InvalidArgument("amplitude count " +
                          std::to_string(amplitudes.size()) +
                          " does not match two_s=" + std::to_string(two_s));
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-12)
    throw InvalidArgument("spinor amplitudes must be unit-norm");
}

Eigen::MatrixXcd SpinHamiltonian::total() const {
  return matrix_part + scalar_part * Eigen::MatrixXcd::Identity(
                                         matrix_part.rows(), matrix_part.cols());
}

double SpinHamiltonian::spectral_norm() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(total());
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

SpinHamiltonian assemble_hamiltonian(int two_s, const ParticleModel& model,
                                     const Vec3& field, double extra_scalar,
                                     double hbar) {
  if (two_s < 0) throw InvalidLabel("negative spin");
  SpinHamiltonian h;
  h.two_s = two_s;
  h.hbar = hbar;
  h.gtilde = model.gtilde;
  h.field = field;
  const double s = 0.5 * two_s;
  h.scalar_part = s * (s + 1.0) * hbar * hbar / (2.0 * model.inertia) +
                  0.5 * model.inertia * model.gtilde * model.gtilde *
                      field.squaredNorm() +
                  extra_scalar;
  h.matrix_part = field_coupling(two_s, model.gtilde, field, hbar);
  return h;
}

Vec3 spin_expectation(const SpinorState& state, double hbar) {
  const SpinMatrices mats = spin_matrices(state.two_s, hbar);
  const Eigen::VectorXcd& u = state.amplitudes;
  return Vec3((u.adjoint() * mats.sx * u)(0).real(),
              (u.adjoint() * mats.sy * u)(0).real(),
              (u.adjoint() * mats.sz * u)(0).real());
}

TimeSeries evolve(const SpinorState& initial, const SpinHamiltonian& h,
                  double dt, double total_time) {
  require_step(h, dt, total_time);
  const std::size_t steps =
      static_cast<std::size_t>(std::llround(total_time / dt));
  const int n = h.two_s + 1;
  if (initial.amplitudes.size() != n)
    throw InvalidArgument("state and Hamiltonian spin sectors differ");

  TimeSeries series;
  series.columns = {"t"};
  for (int k = 0; k < n; ++k) {
    series.columns.push_back("U" + std::to_string(k) + "_re");
    series.columns.push_back("U" + std::to_string(k) + "_im");
  }
  series.columns.insert(series.columns.end(), {"S1", "S2", "S3", "norm"});

  auto emit = [&](const SpinorState& st) {
    std::vector<double> row = {st.t};
    for (int k = 0; k < n; ++k) {
      row.push_back(st.amplitudes[k].real());
      row.push_back(st.amplitudes[k].imag());
    }
    const Vec3 s = spin_expectation(st, h.hbar);
    row.insert(row.end(), {s[0], s[1], s[2], st.norm()});
    series.rows.push_back(std::move(row));
  };

  SpinorState st = initial;
  emit(st);

  Eigen::MatrixXcd step;
  const bool time_dependent = h.field_of_t.has_value();
  if (!time_dependent) step = propagator(h.total(), dt, h.hbar);

  for (std::size_t k = 0; k < steps; ++k) {
    if (time_dependent) {
      const double t_mid = st.t + 0.5 * dt;
      const Vec3 b = (*h.field_of_t)(t_mid);
      Eigen::MatrixXcd mid =
          field_coupling(h.two_s, h.gtilde, b, h.hbar) +
          h.scalar_part * Eigen::MatrixXcd::Identity(n, n);
      step = propagator(mid, dt, h.hbar);
    }
    st.amplitudes = step * st.amplitudes;
    st.t = initial.t + (k + 1) * dt;
    emit(st);
  }
  return series;
}

double coupled_vs_matrix_residual(const SpinorState& initial,
                                  const SpinHamiltonian& h, double dt,
                                  double total_time) {
  if (h.two_s != 1)
    throw InvalidArgument("coupled amplitude form is specific to two_s = 1");
  require_step(h, dt, total_time);

  // Entrywise form of the two coupled amplitude equations: the diagonal
  // carries scalar -/+ (hbar gtilde / 2) B3, the off-diagonal
  // -(hbar gtilde / 2) B-/+.
  const double half = 0.5 * h.hbar * h.gtilde;
  const Complex b_plus(h.field[0], h.field[1]);
  const Complex b_minus(h.field[0], -h.field[1]);
  Eigen::MatrixXcd coupled(2, 2);
  coupled << Complex(h.scalar_part - half * h.field[2], 0.0), -half * b_minus,
      -half * b_plus, Complex(h.scalar_part + half * h.field[2], 0.0);

  const Eigen::MatrixXcd step_matrix = propagator(h.total(), dt, h.hbar);
  const Eigen::MatrixXcd step_coupled = propagator(coupled, dt, h.hbar);

  const std::size_t steps =
      static_cast<std::size_t>(std::llround(total_time / dt));
  Eigen::VectorXcd u_matrix = initial.amplitudes;
  Eigen::VectorXcd u_coupled = initial.amplitudes;
  double residual = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    u_matrix = step_matrix * u_matrix;
    u_coupled = step_coupled * u_coupled;
    const double diff = (u_matrix - u_coupled).cwiseAbs().maxCoeff();
    if (diff > residual) residual = diff;
  }
  return residual;
}

std::vector<std::pair<int, double>> symmetric_top_spectrum(int two_s, double i1,
                                                           double i3,
                                                           double hbar) {
  if (two_s < 0) throw InvalidLabel("negative spin");
  if (i1 <= 0.0 || i3 <= 0.0)
    throw InvalidArgument("principal moments must be positive");
  const double s = 0.5 * two_s;
  std::vector<std::pair<int, double>> levels;
  for (int two_mb = two_s; two_mb >= -two_s; two_mb -= 2) {
    const double mb = 0.5 * two_mb;
    const double energy =
        0.5 * (s * (s + 1.0) * hbar * hbar / i1 +
               (1.0 / i3 - 1.0 / i1) * mb * mb * hbar * hbar);
    levels.emplace_back(two_mb, energy);
  }
  return levels;
}

Eigen::VectorXd symmetric_top_eigenvalues(int two_s, double i1, double i3,
                                          double hbar) {
  if (i1 <= 0.0 || i3 <= 0.0)
    throw InvalidArgument("principal moments must be positive");
  const SpinMatrices mats = spin_matrices(two_s, hbar);
  const Eigen::MatrixXcd casimir =
      mats.sx * mats.sx + mats.sy * mats.sy + mats.sz * mats.sz;
  const Eigen::MatrixXcd op =
      0.5 * (casimir / i1 + (1.0 / i3 - 1.0 / i1) * mats.sz * mats.sz);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(op);
  return eig.eigenvalues();
}

double rotator_transition_energy(double mc2_mev, double a_fm, int two_s_from,
                                 int two_s_to, const UnitSystem& units) {
  if (units.mode != UnitMode::mev_fm)
    throw InvalidArgument("transition energies are defined in MeV-fm units");
  if (mc2_mev <= 0.0 || a_fm <= 0.0)
    throw InvalidArgument("mass and radius must be positive");
  if (two_s_from < 0 || two_s_to < 0) throw InvalidLabel("negative spin");
  const double s_from = 0.5 * two_s_from;
  const double s_to = 0.5 * two_s_to;
  const double hbar_c = units.hbar_c();
  return (s_to * (s_to + 1.0) - s_from * (s_from + 1.0)) * hbar_c * hbar_c /
         (2.0 * mc2_mev * a_fm * a_fm);
}

}  // namespace eulerspin
