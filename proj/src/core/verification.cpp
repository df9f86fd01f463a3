#include "core/verification.hpp"

#include "core/classical.hpp"
#include "core/density.hpp"
#include "core/fields.hpp"
#include "core/kinematics.hpp"
#include "core/quadrature.hpp"
#include "core/ring.hpp"
#include "core/rng.hpp"
#include "core/spin_evolution.hpp"
#include "core/spin_operators.hpp"
#include "core/timeseries.hpp"
#include "core/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>

namespace eulerspin {

namespace {

constexpr double kNucleonTransitionMev = 58.40691739347245;
constexpr double kElectronTransitionMev = 1.1681383478694493e9;
constexpr double kElectronLambda = 1.7589e4;
constexpr double kBaryonLambda = 9.77e-2;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.16e", value);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

class Suite {
 public:
  Suite(std::uint64_t seed, double tol_override)
      : seed_(seed), tol_override_(tol_override) {}

  // Residual-style check: the tolerance is an upper bound on a residual and
  // yields to the override.
  void residual_check(const std::string& name, const std::string& statement,
                      double residual, double tolerance) {
    const double tol = tol_override_ > 0.0 ? tol_override_ : tolerance;
    push(name, statement, residual, tol);
  }

  // The constant encodes a window, a rejection, or a pinned reference; the
  // override never touches it.
  void fixed_check(const std::string& name, const std::string& statement,
                   double residual, double tolerance) {
    push(name, statement, residual, tolerance);
  }

  Rng rng() { return Rng(seed_ + 0x9e3779b97f4a7c15ULL * ++check_index_); }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void push(const std::string& name, const std::string& statement,
            double residual, double tolerance) {
    results_.push_back(
        {name, statement, residual, tolerance, residual < tolerance});
  }

  std::uint64_t seed_;
  double tol_override_;
  std::uint64_t check_index_ = 0;
  std::vector<CheckResult> results_;
};

double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

std::size_t column_of(const TimeSeries& series, const std::string& name) {
  for (std::size_t i = 0; i < series.columns.size(); ++i)
    if (series.columns[i] == name) return i;
  return 0;
}

void check_rotation_orthogonality(Suite& suite) {
  Rng rng = suite.rng();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const EulerAngles ang = rng.angles(0.0);
    const Mat3 r = rotation_matrix(ang);
    worst = std::max(worst, max_abs(r * r.transpose() - Mat3::Identity()));
    worst = std::max(worst, std::abs(r.determinant() - 1.0));
  }
  suite.residual_check(
      "rotation-orthogonality",
      "R is orthogonal with unit determinant at 100 seeded orientations",
      worst, 1e-12);
}

void check_velocity_maps(Suite& suite) {
  Rng rng = suite.rng();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const EulerAngles ang = rng.angles();
    const Mat3 r = rotation_matrix(ang);
    const KinematicMatrices maps = kinematic_matrices(ang);
    const KinematicInverses inv = kinematic_inverses(ang);
    worst = std::max(worst, max_abs(maps.b - r * maps.a));
    worst = std::max(worst, max_abs(inv.a_inv * maps.a - Mat3::Identity()));
    worst = std::max(worst, max_abs(inv.b_inv * maps.b - Mat3::Identity()));
    const double det = -std::sin(ang.a2);
    worst = std::max(worst, std::abs(maps.a.determinant() - det));
    worst = std::max(worst, std::abs(maps.b.determinant() - det));
  }
  suite.residual_check(
      "velocity-maps",
      "b = R a, both velocity maps invert, and det a = det b = -sin(a2)",
      worst, 1e-12);
}

void check_epsilon_identity(Suite& suite) {
  Rng rng = suite.rng();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k)
    worst = std::max(worst, epsilon_identity_residual(rng.angles()));
  suite.residual_check(
      "epsilon-identity",
      "the inverse-map curl contraction reproduces the Levi-Civita symbol "
      "at 100 interior orientations",
      worst, 1e-11);
}

void check_metric_inverse(Suite& suite) {
  Rng rng = suite.rng();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const EulerAngles ang = rng.angles();
    const double inertia = rng.uniform(0.2, 3.0);
    const double mass = rng.uniform(0.2, 3.0);
    const MetricResult g = metric(ang, inertia, mass);
    worst = std::max(
        worst, max_abs(g.covariant * g.contravariant - Mat3::Identity()));
    const double det_ref =
        std::pow(inertia / mass, 1.5) * std::abs(std::sin(ang.a2));
    worst = std::max(worst, std::abs(g.sqrt_det - det_ref));
  }
  suite.residual_check(
      "metric-inverse",
      "covariant and contravariant metrics invert each other away from the "
      "polar singularity",
      worst, 1e-12);
}

void check_cayley_klein(Suite& suite) {
  Rng rng = suite.rng();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const EulerAngles ang = rng.angles(0.0);
    const double inertia = rng.uniform(0.2, 3.0);
    const double mass = rng.uniform(0.2, 3.0);
    const Mat3 g = cayley_klein_metric(ang, inertia, mass);
    const double ratio = inertia / mass;
    Mat3 expected = Mat3::Zero();
    expected(0, 0) = 2.0 * ratio * (1.0 + std::cos(ang.a2));
    expected(1, 1) = ratio;
    expected(2, 2) = 2.0 * ratio * (1.0 - std::cos(ang.a2));
    worst = std::max(worst, max_abs(g - expected));
    Mat3 off = g;
    off.diagonal().setZero();
    worst = std::max(worst, max_abs(off));
  }
  suite.residual_check(
      "cayley-klein-diagonal",
      "the half-sum / half-difference azimuth coordinates diagonalize the "
      "metric",
      worst, 1e-14);
}

void check_commutators(Suite& suite, Frame frame) {
  Rng rng = suite.rng();
  const std::vector<AngleFunction> family = operator_test_family();
  double worst = 0.0;
  for (const AngleFunction& f : family) {
    for (int point = 0; point < 50; ++point) {
      const EulerAngles ang = rng.angles();
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          worst =
              std::max(worst, commutator_residual(i, j, frame, f, ang));
    }
  }
  const bool space = frame == Frame::space;
  suite.residual_check(
      space ? "space-commutators" : "body-commutators",
      space ? "[S_i, S_j] = i hbar eps_ijk S_k over the twenty-function "
              "family at 50 points each"
            : "[Sbar_i, Sbar_j] = -i hbar eps_ijk Sbar_k over the "
              "twenty-function family at 50 points each",
      worst, 1e-9);
}

void check_casimir_routes(Suite& suite) {
  Rng rng = suite.rng();
  const std::vector<AngleFunction> family = operator_test_family();
  double worst = 0.0;
  for (const AngleFunction& f : family) {
    AngleFunction direct = apply_spin_squared(f);
    AngleFunction space_sum = AngleFunction::constant(Complex(0.0, 0.0));
    AngleFunction body_sum = AngleFunction::constant(Complex(0.0, 0.0));
    for (int i = 1; i <= 3; ++i) {
      space_sum =
          space_sum + apply_spin(i, Frame::space, apply_spin(i, Frame::space, f));
      body_sum =
          body_sum + apply_spin(i, Frame::body, apply_spin(i, Frame::body, f));
    }
    for (int point = 0; point < 25; ++point) {
      const EulerAngles ang = rng.angles();
      const Complex d = direct.value(ang);
      worst = std::max(worst, std::abs(d - space_sum.value(ang)));
      worst = std::max(worst, std::abs(d - body_sum.value(ang)));
    }
  }
  suite.residual_check(
      "casimir-routes",
      "the closed-form S^2 equals sum_i S_i S_i and sum_i Sbar_i Sbar_i on "
      "the test family",
      worst, 1e-9);
}

std::vector<AngleFunction> sector_harmonics(int parity) {
  std::vector<AngleFunction> fs;
  for (int two_s = parity; two_s <= kDefaultMaxTwoS; two_s += 2)
    for (int two_m = two_s; two_m >= -two_s; two_m -= 2)
      for (int two_mb = two_s; two_mb >= -two_s; two_mb -= 2)
        fs.push_back(wigner_harmonic({two_s, two_m, two_mb}));
  return fs;
}

void check_half_spin_norms(Suite& suite) {
  const GroupQuadrature quad;
  std::vector<AngleFunction> fs;
  for (int two_m : {1, -1})
    for (int two_mb : {1, -1})
      fs.push_back(wigner_harmonic({1, two_m, two_mb}));
  const Eigen::MatrixXcd gram = quad.gram(fs);
  const double worst =
      (gram - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff();
  suite.residual_check(
      "half-spin-norms",
      "the four s = 1/2 harmonics are orthonormal under the group measure",
      worst, 1e-10);
}

void check_gram_all_sectors(Suite& suite) {
  const GroupQuadrature quad;
  double worst = 0.0;
  for (int parity : {0, 1}) {
    const std::vector<AngleFunction> fs = sector_harmonics(parity);
    const Eigen::MatrixXcd gram = quad.gram(fs);
    const Eigen::Index n = gram.rows();
    worst = std::max(
        worst,
        (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
  }
  suite.residual_check(
      "gram-all-sectors",
      "all 91 harmonics with two_s <= 5 are orthonormal within their parity "
      "sector (35 integer plus 56 half-integer functions)",
      worst, 1e-8);
}

void check_eigen_relations(Suite& suite) {
  Rng rng = suite.rng();
  double worst = 0.0;
  for (int two_s = 0; two_s <= kDefaultMaxTwoS; ++two_s) {
    const double s = 0.5 * two_s;
    for (int two_m = two_s; two_m >= -two_s; two_m -= 2) {
      for (int two_mb = two_s; two_mb >= -two_s; two_mb -= 2) {
        const AngleFunction u = wigner_harmonic({two_s, two_m, two_mb});
        const AngleFunction squared = apply_spin_squared(u);
        const AngleFunction space3 = apply_spin(3, Frame::space, u);
        const AngleFunction body3 = apply_spin(3, Frame::body, u);
        for (int point = 0; point < 5; ++point) {
          const EulerAngles ang = rng.angles();
          const Complex base = u.value(ang);
          worst = std::max(
              worst, std::abs(squared.value(ang) - s * (s + 1.0) * base));
          worst = std::max(worst,
                           std::abs(space3.value(ang) - 0.5 * two_m * base));
          worst = std::max(worst,
                           std::abs(body3.value(ang) - 0.5 * two_mb * base));
        }
      }
    }
  }
  suite.residual_check(
      "eigen-relations",
      "every harmonic with two_s <= 5 is a joint eigenfunction of S^2, S_3, "
      "and Sbar_3 with eigenvalues s(s+1), m, mbar",
      worst, 1e-9);
}

void check_ladder_relations(Suite& suite) {
  Rng rng = suite.rng();
  double worst = 0.0;
  for (int two_s = 0; two_s <= kDefaultMaxTwoS; ++two_s) {
    for (int two_m = two_s; two_m >= -two_s; two_m -= 2) {
      for (int two_mb = two_s; two_mb >= -two_s; two_mb -= 2) {
        const AngleFunction u = wigner_harmonic({two_s, two_m, two_mb});
        for (const LadderSign sign : {LadderSign::plus, LadderSign::minus}) {
          const int dm = sign == LadderSign::plus ? 2 : -2;

          const AngleFunction space = apply_ladder(sign, Frame::space, u);
          const double cs = ladder_coefficient(sign, two_s, two_m);
          const AngleFunction space_ref =
              std::abs(two_m + dm) <= two_s
                  ? wigner_harmonic({two_s, two_m + dm, two_mb})
                  : AngleFunction::constant(Complex(0.0, 0.0));

          const AngleFunction body = apply_ladder(sign, Frame::body, u);
          const double cb = ladder_coefficient(sign, two_s, two_mb);
          const AngleFunction body_ref =
              std::abs(two_mb + dm) <= two_s
                  ? wigner_harmonic({two_s, two_m, two_mb + dm})
                  : AngleFunction::constant(Complex(0.0, 0.0));

          for (int point = 0; point < 3; ++point) {
            const EulerAngles ang = rng.angles();
            worst = std::max(worst, std::abs(space.value(ang) -
                                             cs * space_ref.value(ang)));
            worst = std::max(worst, std::abs(body.value(ang) -
                                             cb * body_ref.value(ang)));
          }
        }
      }
    }
  }
  suite.residual_check(
      "ladder-relations",
      "space and body ladders shift m and mbar with coefficient "
      "hbar sqrt((s -+ m)(s +- m + 1)) across every sector",
      worst, 1e-9);
}

void check_parity_superselection(Suite& suite) {
  double residual = 1.0;
  try {
    const SpinLabel mixed[] = {{2, 0, 0}, {1, 1, 1}};
    validate_superposition(mixed);
  } catch (const ParityMixing&) {
    residual = 0.0;
  }
  try {
    const SpinLabel pure[] = {{1, 1, 1}, {3, 1, -1}};
    validate_superposition(pure);
  } catch (const ParityMixing&) {
    residual = 1.0;
  }
  suite.fixed_check(
      "parity-superselection",
      "superpositions mixing integer with half-integer spin are rejected "
      "while same-parity mixtures pass",
      residual, 0.5);
}

void check_half_odd_periodicity(Suite& suite) {
  Rng rng = suite.rng();
  const Complex c(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const Complex d(rng.uniform(-1, 1), rng.uniform(-1, 1));
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double a1 = rng.uniform(0.0, 4.0 * kPi);
    const auto density = [&](double angle) {
      return std::norm(c + d * std::exp(Complex(0.0, 0.5 * angle)));
    };
    worst = std::max(worst, std::abs(density(a1) - density(a1 + 4.0 * kPi)));
    // 2 pi alone flips the cross term, so the density is genuinely 4 pi
    // periodic unless one coefficient vanishes.
  }
  suite.residual_check(
      "half-odd-periodicity",
      "|C + D exp(i a1 / 2)|^2 returns to itself after 4 pi pointwise",
      worst, 1e-12);
}

ParticleModel verification_particle() {
  ParticleModel model;
  model.m = 1.0;
  model.q = 1.0;
  model.inertia = 0.5;
  model.g = 1.0;
  model.gtilde = 1.0;
  return model;
}

ClassicalState verification_state() {
  ClassicalState state;
  state.x = Vec3(0.6, 0.5, 0.0);
  state.v = Vec3(0.3, -0.2, 0.1);
  state.omega = Vec3(1.0, 1.2, -0.8);
  return state;
}

void check_energy_drift(Suite& suite) {
  const ParticleModel model = verification_particle();
  const FieldConfig fields = FieldConfig::linear(0.7);
  const TimeSeries run =
      integrate(verification_state(), model, fields, 1e-3, 10.0);
  const std::size_t h_col = column_of(run, "H");
  const double h0 = run.rows.front()[h_col];
  double drift = 0.0;
  for (const auto& row : run.rows)
    drift = std::max(drift, std::abs(row[h_col] - h0));
  suite.residual_check(
      "energy-drift",
      "total kinetic energy is conserved to relative 1e-8 over 10^4 steps in "
      "the linear field b(x, -y, 0)",
      drift / std::abs(h0), 1e-8);
}

void check_integrator_order(Suite& suite) {
  const ParticleModel model = verification_particle();
  const FieldConfig fields = FieldConfig::linear(2.0);
  const ClassicalState initial = verification_state();

  const auto end_state = [&](double dt) {
    const TimeSeries run = integrate(initial, model, fields, dt, 10.0);
    Eigen::VectorXd out(9);
    for (int i = 0; i < 9; ++i) out[i] = run.rows.back()[1 + i];
    return out;
  };

  const Eigen::VectorXd reference = end_state(0.02 / 16.0);
  const double coarse = (end_state(0.02) - reference).norm();
  const double fine = (end_state(0.01) - reference).norm();
  const double factor = coarse / fine;
  suite.fixed_check(
      "integrator-order",
      "halving the step divides the end-state error by 16 within 20 percent "
      "(step-halving estimate against a 16x finer reference)",
      std::abs(factor - 16.0) / 16.0, 0.2);

  const auto drift_at = [&](double dt) {
    const TimeSeries run = integrate(initial, model, fields, dt, 10.0);
    const std::size_t h_col = column_of(run, "H");
    const double h0 = run.rows.front()[h_col];
    double drift = 0.0;
    for (const auto& row : run.rows)
      drift = std::max(drift, std::abs(row[h_col] - h0));
    return drift;
  };
  const double drift_factor = drift_at(0.02) / drift_at(0.01);
  // The energy is a quadratic invariant of a skew subsystem, which the
  // stepper contracts fifth-order, so its drift shrinks faster than the
  // fourth-order state error; at least fourth-order is the requirement.
  suite.fixed_check(
      "energy-drift-halving",
      "halving the step shrinks the energy drift at least fourth-order "
      "(measured superconvergent, about a factor 30)",
      12.8 / drift_factor, 1.0);
}

void check_precession_residual(Suite& suite) {
  const ParticleModel model = verification_particle();
  const FieldConfig fields = FieldConfig::linear(0.7);
  const TimeSeries run =
      integrate(verification_state(), model, fields, 1e-3, 5.0);
  const std::size_t res_col = column_of(run, "spin_residual");
  const std::size_t w_col = column_of(run, "w1");
  const std::size_t x_col = column_of(run, "X1");
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < run.rows.size(); ++i) {
    const auto& row = run.rows[i];
    const Vec3 x(row[x_col], row[x_col + 1], row[x_col + 2]);
    const Vec3 omega(row[w_col], row[w_col + 1], row[w_col + 2]);
    const Vec3 b = fields.magnetic(x, row[0]);
    const Vec3 spin = model.inertia * (omega + model.gtilde * b);
    const double scale =
        std::abs(model.gtilde) * spin.norm() * b.norm();
    if (scale > 0.0) worst = std::max(worst, row[res_col] / scale);
  }
  suite.residual_check(
      "precession-residual",
      "|dS/dt - gtilde S x B| stays below 1e-8 gtilde |S| |B| along a "
      "static-field trajectory (five-point differenced dS/dt)",
      worst, 1e-8);
}

void check_coupled_vs_matrix(Suite& suite) {
  Rng rng = suite.rng();
  const ParticleModel model = verification_particle();
  Eigen::VectorXcd amps(2);
  amps << Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
      Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  amps.normalize();
  const SpinorState state(1, amps);
  double worst = 0.0;
  for (const Vec3& b : {Vec3(0.0, 0.0, 1.0), Vec3(1.0, 2.0, -1.0)}) {
    const SpinHamiltonian h = assemble_hamiltonian(1, model, b);
    worst = std::max(worst,
                     coupled_vs_matrix_residual(state, h, 0.005, 50.0));
  }
  suite.residual_check(
      "coupled-vs-matrix",
      "the two coupled amplitude equations and the matrix Hamiltonian give "
      "the same two-level evolution",
      worst, 1e-12);
}

void check_larmor_period(Suite& suite) {
  const double gtilde = 0.8;
  const double b0 = 1.5;
  ParticleModel model = verification_particle();
  model.gtilde = gtilde;
  const SpinHamiltonian h = assemble_hamiltonian(1, model, Vec3(0, 0, b0));
  Eigen::VectorXcd amps(2);
  amps << Complex(1.0, 0.0), Complex(1.0, 0.0);
  amps /= amps.norm();
  const double rate = gtilde * b0;
  const double period = 2.0 * kPi / rate;
  const TimeSeries run =
      evolve(SpinorState(1, amps), h, period / 1000.0, 3.0 * period);
  const std::size_t s1 = column_of(run, "S1");
  const std::size_t s2 = column_of(run, "S2");
  const auto phase = [&](std::size_t i) {
    return std::atan2(run.rows[i][s2], run.rows[i][s1]);
  };
  const std::size_t last = run.rows.size() - 1;
  const double t_a = run.rows[100][0];
  const double t_b = run.rows[last][0];
  double wrapped = phase(last) - phase(100) + rate * (t_b - t_a);
  wrapped = std::remainder(wrapped, 2.0 * kPi);
  const double measured_period =
      2.0 * kPi / (rate - wrapped / (t_b - t_a));
  suite.residual_check(
      "larmor-period",
      "the extracted transverse precession period equals 2 pi / (gtilde B)",
      std::abs(measured_period - period) / period, 1e-8);
}

void check_norm_drift(Suite& suite) {
  Rng rng = suite.rng();
  const ParticleModel model = verification_particle();
  const SpinHamiltonian h =
      assemble_hamiltonian(3, model, Vec3(0.4, -0.8, 0.9));
  Eigen::VectorXcd amps(4);
  for (int i = 0; i < 4; ++i)
    amps[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  amps.normalize();
  const TimeSeries run = evolve(SpinorState(3, amps), h, 0.01, 100.0);
  const std::size_t norm_col = column_of(run, "norm");
  double worst = 0.0;
  for (const auto& row : run.rows)
    worst = std::max(worst, std::abs(row[norm_col] - 1.0));
  suite.residual_check(
      "norm-drift",
      "the spinor norm stays within 1e-12 of one over 10^4 unitary steps",
      worst, 1e-12);
}

void check_scalar_phase_invariance(Suite& suite) {
  Rng rng = suite.rng();
  const ParticleModel model = verification_particle();
  const Vec3 b(0.3, 0.4, -1.0);
  const SpinHamiltonian with_scalar = assemble_hamiltonian(1, model, b, 2.7);
  SpinHamiltonian without_scalar = with_scalar;
  without_scalar.scalar_part = 0.0;
  Eigen::VectorXcd amps(2);
  amps << Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
      Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  amps.normalize();
  const SpinorState state(1, amps);
  const TimeSeries a = evolve(state, with_scalar, 0.02, 20.0);
  const TimeSeries c = evolve(state, without_scalar, 0.02, 20.0);
  double worst = 0.0;
  for (const char* name : {"S1", "S2", "S3"}) {
    const std::size_t col = column_of(a, name);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
      worst = std::max(worst, std::abs(a.rows[i][col] - c.rows[i][col]));
  }
  suite.residual_check(
      "scalar-phase-invariance",
      "scalar Hamiltonian terms change no spin expectation value",
      worst, 1e-12);
}

void check_spectrum_formula(Suite& suite) {
  double worst = 0.0;
  for (int two_s = 0; two_s <= 5; ++two_s) {
    const double i1 = 1.3, i3 = 0.4;
    std::vector<double> formula;
    for (const auto& [two_mb, energy] : symmetric_top_spectrum(two_s, i1, i3)) {
      (void)two_mb;
      formula.push_back(energy);
    }
    std::sort(formula.begin(), formula.end());
    const Eigen::VectorXd eig = symmetric_top_eigenvalues(two_s, i1, i3);
    for (int k = 0; k <= two_s; ++k)
      worst = std::max(worst,
                       std::abs(formula[static_cast<std::size_t>(k)] - eig[k]));
  }
  suite.residual_check(
      "spectrum-formula",
      "the closed symmetric-top level formula matches the assembled "
      "operator's eigenvalues for every two_s <= 5",
      worst, 1e-12);
}

void check_spherical_limit(Suite& suite) {
  double worst = 0.0;
  for (int two_s = 0; two_s <= 5; ++two_s) {
    const double s = 0.5 * two_s;
    const double inertia = 1.7;
    const double reference = s * (s + 1.0) / (2.0 * inertia);
    for (const auto& [two_mb, energy] :
         symmetric_top_spectrum(two_s, inertia, inertia)) {
      (void)two_mb;
      worst = std::max(worst, std::abs(energy - reference));
    }
  }
  suite.fixed_check(
      "spherical-limit",
      "equal principal moments collapse every level to s(s+1) hbar^2 / 2I "
      "exactly",
      worst, 1e-15);
}

void check_transitions(Suite& suite) {
  const double nucleon = rotator_transition_energy(1000.0, 1.0, 1, 3);
  double residual = std::abs(nucleon - kNucleonTransitionMev) /
                    kNucleonTransitionMev;
  if (nucleon < 50.0 / 1.3 || nucleon > 50.0 * 1.3) residual = 1.0;
  suite.fixed_check(
      "nucleon-transition",
      "the 1/2 to 3/2 transition at mc^2 = 1000 MeV, a = 1 fm lands near "
      "58.4 MeV, within a factor 1.3 of 50 MeV",
      residual, 1e-10);

  const double electron = rotator_transition_energy(0.5, 1e-2, 1, 3);
  double electron_residual =
      std::abs(electron - kElectronTransitionMev) / kElectronTransitionMev;
  if (electron < 1e9) electron_residual = 1.0;
  suite.fixed_check(
      "electron-transition",
      "electron parameters push the same transition beyond 1e9 MeV",
      electron_residual, 1e-10);
}

void check_ring(Suite& suite) {
  const UnitSystem cgs = UnitSystem::cgs();
  const RingSolution electron = ring_solution(
      RingModel::with_half_hbar(1e-27, fm_to_cm(1e-2), cgs), cgs);
  double beta_residual = std::abs(1.0 - electron.beta);
  if (electron.lambda < 1e4) beta_residual = 1.0;
  suite.fixed_check(
      "ring-electron-beta",
      "an electron-scale ring needs lambda above 1e4 and a rim speed within "
      "1e-8 of light speed",
      beta_residual, 1e-8);
  suite.fixed_check(
      "ring-electron-lambda",
      "the electron spin parameter matches its quoted magnitude 1.7589e4 "
      "within one percent",
      std::abs(electron.lambda / kElectronLambda - 1.0), 1e-2);

  const RingSolution baryon = ring_solution(
      RingModel::with_half_hbar(1.8e-24, fm_to_cm(1.0), cgs), cgs);
  double lambda_residual = std::abs(baryon.lambda / kBaryonLambda - 1.0);
  if (baryon.beta > 0.1) lambda_residual = 1.0;
  suite.fixed_check(
      "ring-baryon",
      "a baryon-scale ring stays nonrelativistic with lambda near 9.77e-2 "
      "and beta at most 0.1",
      lambda_residual, 1e-2);
}

void check_g_factor(Suite& suite) {
  const auto profile = [](double r) { return std::exp(-3.0 * r * r); };
  const DensityProfile charge = DensityProfile::from_function(profile, 1.2);
  const DensityProfile mass = DensityProfile::from_function(profile, 1.2);
  const ParticleModel model = moments_from_profiles(charge, mass, 2.0, -1.0);
  suite.residual_check(
      "g-factor-unity",
      "identical charge and mass densities give shape factor g = 1 through "
      "the quadrature route",
      std::abs(model.g - 1.0), 1e-10);

  const double a = 1.5, m = 2.0;
  const DensityProfile ball =
      DensityProfile::from_function([](double) { return 1.0; }, a);
  const ParticleModel ball_model = moments_from_profiles(ball, ball, m, 1.0);
  suite.residual_check(
      "ball-inertia",
      "a uniform ball integrates to I = (2/5) m a^2 through the quadrature "
      "route",
      std::abs(ball_model.inertia - 0.4 * m * a * a) / (0.4 * m * a * a),
      1e-10);
}

void check_body_field_commutator(Suite& suite) {
  Rng rng = suite.rng();
  const Vec3 field(1.0, 2.0, -3.0);
  const std::vector<AngleFunction> family = operator_test_family();
  double worst = 0.0;
  for (const AngleFunction& f : family)
    for (int point = 0; point < 10; ++point)
      worst = std::max(
          worst, body_field_commutator_residual(field, f, rng.angles()));
  suite.residual_check(
      "body-field-commutator",
      "sum_i [Sbar_i, Bbar_i] annihilates every test function for a uniform "
      "field",
      worst, 1e-9);
}

void check_hermiticity(Suite& suite) {
  const GroupQuadrature quad;
  std::vector<AngleFunction> probes;
  probes.push_back(wigner_harmonic({1, 1, -1}));
  probes.push_back(wigner_harmonic({3, 1, 1}));
  {
    const std::vector<SpinLabel> labels = {{1, 1, 1}, {3, -1, 1}};
    const std::vector<Complex> coeffs = {Complex(0.6, 0.0),
                                         Complex(0.0, 0.8)};
    probes.push_back(BasisExpansion(labels, coeffs, true).to_function());
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = 0; j < probes.size(); ++j) {
      const AngleFunction& f = probes[i];
      const AngleFunction& g = probes[j];
      for (int axis = 1; axis <= 3; ++axis) {
        for (const Frame frame : {Frame::space, Frame::body}) {
          const Complex lhs = quad.inner_product(f, apply_spin(axis, frame, g));
          const Complex rhs =
              std::conj(quad.inner_product(g, apply_spin(axis, frame, f)));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
      const Complex lhs = quad.inner_product(f, apply_spin_squared(g));
      const Complex rhs = std::conj(quad.inner_product(g, apply_spin_squared(f)));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  suite.residual_check(
      "hermiticity",
      "every spin component and the Casimir are Hermitian under the group "
      "inner product on band-limited states",
      worst, 1e-9);
}

void check_projection_equivalence(Suite& suite) {
  // Matrix elements of the differential coupling -gtilde B . S between the
  // s = 1/2 harmonics reproduce the two-level matrix, identically for both
  // body projections.
  const GroupQuadrature quad;
  const ParticleModel model = verification_particle();
  const Vec3 b(0.7, -0.4, 1.1);
  const SpinHamiltonian h = assemble_hamiltonian(1, model, b);
  double worst = 0.0;
  for (int two_mb : {1, -1}) {
    const AngleFunction up = wigner_harmonic({1, 1, two_mb});
    const AngleFunction down = wigner_harmonic({1, -1, two_mb});
    const AngleFunction fields[2] = {up, down};
    Eigen::MatrixXcd elements(2, 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        AngleFunction coupled = AngleFunction::constant(Complex(0.0, 0.0));
        for (int axis = 1; axis <= 3; ++axis)
          coupled = coupled + Complex(-model.gtilde * b[axis - 1], 0.0) *
                                  apply_spin(axis, Frame::space, fields[c]);
        elements(r, c) = quad.inner_product(fields[r], coupled);
      }
    }
    worst = std::max(worst,
                     (elements - h.matrix_part).cwiseAbs().maxCoeff());
  }
  suite.residual_check(
      "projection-equivalence",
      "differential matrix elements of -gtilde B . S in the s = 1/2 sector "
      "equal the two-level matrix for both body projections",
      worst, 1e-10);
}

}  // namespace

bool VerificationReport::passed() const {
  for (const CheckResult& check : checks)
    if (!check.passed) return false;
  return true;
}

std::string VerificationReport::to_json() const {
  std::string out = "{\n";
  out += "  \"seed\": " + std::to_string(seed) + ",\n";
  out += "  \"tolerance_override\": ";
  out += tolerance_override > 0.0 ? format_double(tolerance_override) : "null";
  out += ",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const CheckResult& check = checks[i];
    out += "    {\"name\": \"" + escape(check.name) + "\", ";
    out += "\"statement\": \"" + escape(check.statement) + "\", ";
    out += "\"residual\": " + format_double(check.residual) + ", ";
    out += "\"tolerance\": " + format_double(check.tolerance) + ", ";
    out += std::string("\"passed\": ") + (check.passed ? "true" : "false");
    out += i + 1 < checks.size() ? "},\n" : "}\n";
  }
  out += "  ],\n";
  out += std::string("  \"passed\": ") + (passed() ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

VerificationReport run_verification(std::uint64_t seed,
                                    double tolerance_override) {
  Suite suite(seed, tolerance_override);

  check_rotation_orthogonality(suite);
  check_velocity_maps(suite);
  check_epsilon_identity(suite);
  check_metric_inverse(suite);
  check_cayley_klein(suite);
  check_commutators(suite, Frame::space);
  check_commutators(suite, Frame::body);
  check_casimir_routes(suite);
  check_half_spin_norms(suite);
  check_gram_all_sectors(suite);
  check_eigen_relations(suite);
  check_ladder_relations(suite);
  check_parity_superselection(suite);
  check_half_odd_periodicity(suite);
  check_energy_drift(suite);
  check_integrator_order(suite);
  check_precession_residual(suite);
  check_coupled_vs_matrix(suite);
  check_larmor_period(suite);
  check_norm_drift(suite);
  check_scalar_phase_invariance(suite);
  check_spectrum_formula(suite);
  check_spherical_limit(suite);
  check_transitions(suite);
  check_ring(suite);
  check_g_factor(suite);
  check_body_field_commutator(suite);
  check_hermiticity(suite);
  check_projection_equivalence(suite);

  VerificationReport report;
  report.seed = seed;
  report.tolerance_override = tolerance_override;
  report.checks = suite.take();
  return report;
}

}  // namespace eulerspin
