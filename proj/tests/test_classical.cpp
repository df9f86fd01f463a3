#include "core/classical.hpp"
#include "core/kinematics.hpp"
#include "core/rng.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <cmath>

using namespace eulerspin;
using namespace eulerspin::testing;

namespace {

ParticleModel unit_particle() {
  ParticleModel model;
  model.m = 1.0;
  model.q = 1.0;
  model.inertia = 0.5;
  model.g = 1.0;
  model.gtilde = 0.5;
  return model;
}

std::vector<double> column(const TimeSeries& series, const std::string& name) {
  std::size_t idx = series.columns.size();
  for (std::size_t i = 0; i < series.columns.size(); ++i)
    if (series.columns[i] == name) idx = i;
  REQUIRE(idx < series.columns.size());
  std::vector<double> out;
  out.reserve(series.rows.size());
  for (const auto& row : series.rows) out.push_back(row[idx]);
  return out;
}

}  // namespace

TEST_CASE("profile moments in closed form") {
  const DensityProfile ball = DensityProfile::uniform_ball(2.0);
  CHECK(ball.mean_square_radius() == doctest::Approx(2.4).epsilon(1e-14));
  const DensityProfile shell = DensityProfile::thin_shell(2.0);
  CHECK(shell.mean_square_radius() == doctest::Approx(4.0).epsilon(1e-14));

  // The quadrature route reproduces the closed forms: a constant profile is
  // the uniform ball, and it is rescaled regardless of the input amplitude.
  const DensityProfile sampled =
      DensityProfile::from_function([](double) { return 7.3; }, 2.0);
  CHECK(sampled.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sampled.mean_square_radius() == doctest::Approx(2.4).epsilon(1e-10));

  CHECK_THROWS_AS(DensityProfile::uniform_ball(-1.0), InvalidArgument);
  CHECK_THROWS_AS(DensityProfile::from_function([](double) { return 0.0; }, 1.0),
                  UnnormalizedProfile);
}

TEST_CASE("moments of inertia and shape factors") {
  SUBCASE("identical profiles give unit shape factor") {
    const DensityProfile gaussian = DensityProfile::from_function(
        [](double r) { return std::exp(-3.0 * r * r); }, 4.0);
    const ParticleModel model =
        moments_from_profiles(gaussian, gaussian, 2.0, -1.0);
    CHECK(model.g == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(model.gtilde ==
          doctest::Approx(model.g * model.q / (2.0 * model.m)).epsilon(1e-14));
  }

  SUBCASE("uniform ball inertia") {
    const DensityProfile ball = DensityProfile::uniform_ball(1.5);
    const ParticleModel model = moments_from_profiles(ball, ball, 2.0, 1.0);
    CHECK(model.inertia ==
          doctest::Approx(0.4 * 2.0 * 1.5 * 1.5).epsilon(1e-14));
  }

  SUBCASE("shell charge over ball mass") {
    const ParticleModel model =
        moments_from_profiles(DensityProfile::thin_shell(1.0),
                              DensityProfile::uniform_ball(1.0), 1.0, 1.0);
    CHECK(model.g == doctest::Approx(5.0 / 3.0).epsilon(1e-13));
  }

  SUBCASE("rescaling the profile leaves g invariant and scales I") {
    auto f = [](double r) { return 1.0 + r * r; };
    const double lam = 2.0;
    const DensityProfile base = DensityProfile::from_function(f, 1.0);
    const DensityProfile squeezed = DensityProfile::from_function(
        [&](double r) { return f(lam * r) / (lam * lam * lam); }, 1.0 / lam);
    const ParticleModel coarse = moments_from_profiles(base, base, 1.0, 1.0);
    const ParticleModel fine =
        moments_from_profiles(squeezed, squeezed, 1.0, 1.0);
    CHECK(fine.g == doctest::Approx(coarse.g).epsilon(1e-10));
    CHECK(fine.inertia ==
          doctest::Approx(coarse.inertia / (lam * lam)).epsilon(1e-10));
  }

  SUBCASE("model consistency validation") {
    ParticleModel model = unit_particle();
    CHECK_NOTHROW(validate_particle_model(model));
    model.gtilde = 0.7;
    CHECK_THROWS_AS(validate_particle_model(model), InvalidArgument);
  }
}

TEST_CASE("energy function equals kinetic plus potential") {
  const ParticleModel model = unit_particle();

  SUBCASE("kinetic-only reference value") {
    ClassicalState state;
    state.v = Vec3(1.0, 0.0, 0.0);
    state.omega = Vec3(0.0, 0.0, 2.0);
    CHECK(hamiltonian(state, model, FieldConfig::zero()) ==
          doctest::Approx(1.5).epsilon(1e-15));
    CHECK(hamiltonian(state, model, FieldConfig::uniform(Vec3(0, 0, 1))) ==
          doctest::Approx(1.5).epsilon(1e-13));
  }

  SUBCASE("random states and fields") {
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
      ClassicalState state;
      state.x = Vec3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
      state.v = Vec3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
      state.omega =
          Vec3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
      const FieldConfig fields = FieldConfig::uniform(
          Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)),
          Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)));
      const double direct = 0.5 * model.m * state.v.squaredNorm() +
                            0.5 * model.inertia * state.omega.squaredNorm() +
                            model.q * fields.phi(state.x, state.t);
      const double assembled = hamiltonian(state, model, fields);
      CHECK(assembled == doctest::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("angle-rate kinetic energy matches the velocity-map route") {
  SUBCASE("reference values") {
    CHECK(rotational_kinetic({0, 1.0, 0}, Vec3(1, 0, 0), 1.0) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rotational_kinetic({0, kPi / 2, 0}, Vec3(1, 0, 1), 2.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
  }

  SUBCASE("random rates agree with half I omega squared") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
      const EulerAngles ang = rng.angles();
      const Vec3 rates(rng.uniform(-2, 2), rng.uniform(-2, 2),
                       rng.uniform(-2, 2));
      const Vec3 omega = kinematic_matrices(ang).a * rates;
      const double inertia = rng.uniform(0.5, 3.0);
      CHECK(rotational_kinetic(ang, rates, inertia) ==
            doctest::Approx(0.5 * inertia * omega.squaredNorm())
                .epsilon(1e-13));
    }
  }

  SUBCASE("full scalar function includes field couplings") {
    const ParticleModel model = unit_particle();
    ClassicalState state;
    state.x = Vec3(0.3, -0.2, 0.5);
    state.v = Vec3(1.0, 0.5, -0.25);
    state.omega = Vec3(0.0, 0.0, 2.0);
    const EulerAngles ang{0.4, 1.1, -0.3};
    const Vec3 rates = kinematic_inverses(ang).a_inv * state.omega;
    const FieldConfig fields =
        FieldConfig::uniform(Vec3(0.0, 0.0, 1.5), Vec3(0.1, 0.0, 0.0));
    const double expected =
        0.5 * model.m * state.v.squaredNorm() +
        0.5 * model.inertia * state.omega.squaredNorm() -
        model.q * fields.phi(state.x, state.t) +
        model.q * state.v.dot(fields.vector_potential(state.x, state.t)) +
        model.gtilde * model.inertia *
            state.omega.dot(fields.magnetic(state.x, state.t));
    CHECK(lagrangian(state, ang, rates, model, fields) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("free motion is exactly inertial") {
  const ParticleModel model = unit_particle();
  ClassicalState state;
  state.v = Vec3(0.3, -0.1, 0.2);
  state.omega = Vec3(1.0, 2.0, -0.5);
  const TimeSeries series =
      integrate(state, model, FieldConfig::zero(), 0.01, 1.0);
  REQUIRE(series.rows.size() == 101);
  const auto v1 = column(series, "V1");
  const auto w2 = column(series, "w2");
  for (double v : v1) CHECK(v == doctest::Approx(0.3).epsilon(1e-14));
  for (double w : w2) CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
  // Straight-line translation.
  const auto x1 = column(series, "X1");
  CHECK(x1.back() == doctest::Approx(0.3 * 1.0).epsilon(1e-12));
}

TEST_CASE("uniform field precession") {
  ParticleModel model = unit_particle();
  model.gtilde = 0.8;
  const double b0 = 2.5;
  const double rate = model.gtilde * b0;
  const double period = 2.0 * kPi / rate;
  const FieldConfig fields = FieldConfig::uniform(Vec3(0.0, 0.0, b0));

  ClassicalState state;
  state.omega = Vec3(1.0, 0.0, 0.0);
  const double dt = period / 1000.0;
  const TimeSeries series = integrate(state, model, fields, dt, 10.0 * period);

  const auto w1 = column(series, "w1");
  const auto w2 = column(series, "w2");
  const auto w3 = column(series, "w3");
  const auto t = column(series, "t");

  SUBCASE("magnitude and axis component are conserved") {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double mag = std::sqrt(w1[i] * w1[i] + w2[i] * w2[i] + w3[i] * w3[i]);
      CHECK(std::abs(mag - 1.0) < 1e-9);
      CHECK(std::abs(w3[i]) < 1e-12);
    }
  }

  SUBCASE("the transverse components rotate clockwise at the field rate") {
    for (std::size_t i = 0; i < t.size(); i += 500) {
      const double phase = -rate * t[i];
      CHECK(std::abs(w1[i] - std::cos(phase)) < 1e-8);
      CHECK(std::abs(w2[i] - std::sin(phase)) < 1e-8);
    }
  }

  SUBCASE("spin precession residual stays small along the run") {
    const auto residual = column(series, "spin_residual");
    // |S| >= I gtilde B0 along this run, so the contract bound
    // 1e-8 gtilde |S| |B| is at least this large.
    const double bound =
        1e-8 * model.gtilde * (model.inertia * model.gtilde * b0) * b0;
    for (double r : residual) CHECK(r < bound);
  }
}

TEST_CASE("linear-field trajectories conserve the total kinetic energy") {
  ParticleModel model = unit_particle();
  model.gtilde = 0.6;
  const FieldConfig fields = FieldConfig::linear(0.7);

  ClassicalState state;
  state.x = Vec3(0.4, 0.3, 0.0);
  state.v = Vec3(0.2, -0.1, 0.05);
  state.omega = Vec3(0.5, 1.0, -0.7);

  const double dt = 1e-3;
  const TimeSeries series = integrate(state, model, fields, dt, 10.0);
  const auto h = column(series, "H");
  double max_drift = 0.0;
  for (double value : h)
    max_drift = std::max(max_drift, std::abs(value - h.front()));
  CHECK(max_drift / std::abs(h.front()) < 1e-8);

  SUBCASE("halving the step is fourth-order on the state, faster on H") {
    // A hotter configuration keeps the discretization error of both runs
    // well above roundoff so the scaling exponents are measurable.
    ParticleModel hot = model;
    hot.gtilde = 1.0;
    const FieldConfig strong = FieldConfig::linear(2.0);
    ClassicalState hot_state;
    hot_state.x = Vec3(0.6, 0.5, 0.0);
    hot_state.v = Vec3(0.3, -0.2, 0.1);
    hot_state.omega = Vec3(1.0, 1.2, -0.8);

    auto run_at = [&](double step) {
      return integrate(hot_state, hot, strong, step, 10.0);
    };
    auto end_state = [](const TimeSeries& run) {
      Eigen::VectorXd out(9);
      for (int i = 0; i < 9; ++i) out[i] = run.rows.back()[1 + i];
      return out;
    };

    const Eigen::VectorXd reference = end_state(run_at(0.02 / 16.0));
    const double coarse_err = (end_state(run_at(0.02)) - reference).norm();
    const double fine_err = (end_state(run_at(0.01)) - reference).norm();
    CHECK(coarse_err / fine_err == doctest::Approx(16.0).epsilon(0.2));

    // The conserved energy is a quadratic invariant of a skew system in
    // (V, w); the stability function of the classical fourth-order stepper
    // has |R(i theta)|^2 = 1 - theta^6/72 + O(theta^8), so its drift
    // contracts fifth-order over a fixed horizon, faster than the state.
    auto drift_at = [&](double step) {
      const TimeSeries run = run_at(step);
      const auto energy = column(run, "H");
      double drift = 0.0;
      for (double value : energy)
        drift = std::max(drift, std::abs(value - energy.front()));
      return drift;
    };
    const double drift_ratio = drift_at(0.02) / drift_at(0.01);
    CHECK(drift_ratio > 16.0 * 0.8);
  }
}

TEST_CASE("integration rejects bad steps and missing gradients") {
  const ParticleModel model = unit_particle();
  const ClassicalState state;
  CHECK_THROWS_AS(integrate(state, model, FieldConfig::zero(), -0.1, 1.0),
                  StepSizeInvalid);
  CHECK_THROWS_AS(integrate(state, model, FieldConfig::zero(), 0.0, 1.0),
                  StepSizeInvalid);
  CHECK_THROWS_AS(integrate(state, model, FieldConfig::zero(), 0.1, 0.01),
                  StepSizeInvalid);

  const FieldConfig no_gradient = FieldConfig::user(
      [](const Vec3&, double) { return 0.0; },
      [](const Vec3&, double) { return Vec3::Zero(); },
      [](const Vec3&, double) { return Vec3(0.0, 0.0, 1.0); },
      [](const Vec3&, double) { return Vec3::Zero(); });
  CHECK_THROWS_AS(integrate(state, model, no_gradient, 0.1, 1.0),
                  FieldProviderMissingGradient);
  CHECK_THROWS_AS(no_gradient.gradient(Vec3::Zero(), 0.0),
                  FieldProviderMissingGradient);
}

TEST_CASE("built-in field classes satisfy the static consistency rules") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec3 x(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double h = 1e-5;

    for (const FieldConfig& fields :
         {FieldConfig::uniform(Vec3(0.4, -0.2, 1.0), Vec3(0.1, 0.2, -0.3)),
          FieldConfig::linear(0.9)}) {
      // curl A = B by central differences.
      Mat3 da;
      for (int i = 0; i < 3; ++i) {
        Vec3 dx = Vec3::Zero();
        dx[i] = h;
        da.row(i) = ((fields.vector_potential(x + dx, 0.0) -
                      fields.vector_potential(x - dx, 0.0)) /
                     (2.0 * h))
                        .transpose();
      }
      const Vec3 curl(da(1, 2) - da(2, 1), da(2, 0) - da(0, 2),
                      da(0, 1) - da(1, 0));
      CHECK((curl - fields.magnetic(x, 0.0)).norm() < 1e-9);

      // The declared gradient matches differences, is trace-free, and
      // symmetric (divergence- and curl-free field).
      const Mat3 grad = fields.gradient(x, 0.0);
      for (int i = 0; i < 3; ++i) {
        Vec3 dx = Vec3::Zero();
        dx[i] = h;
        const Vec3 diff =
            (fields.magnetic(x + dx, 0.0) - fields.magnetic(x - dx, 0.0)) /
            (2.0 * h);
        for (int j = 0; j < 3; ++j)
          CHECK(std::abs(grad(i, j) - diff[j]) < 1e-9);
      }
      CHECK(std::abs(grad.trace()) < 1e-12);
      CHECK((grad - grad.transpose()).cwiseAbs().maxCoeff() < 1e-12);

      // E = -grad phi for the static classes.
      for (int i = 0; i < 3; ++i) {
        Vec3 dx = Vec3::Zero();
        dx[i] = h;
        const double dphi =
            (fields.phi(x + dx, 0.0) - fields.phi(x - dx, 0.0)) / (2.0 * h);
        CHECK(std::abs(-dphi - fields.electric(x, 0.0)[i]) < 1e-9);
      }
    }
  }
}

TEST_CASE("anisotropic energies expand as expected") {
  const Vec3 moments(0.5, 1.0, 2.0);

  SUBCASE("no coupling reduces to the free rotor") {
    const RigidBodyModel body(moments, Mat3::Zero());
    const Vec3 sbar(1.0, -2.0, 0.5);
    const auto [h_rot, h_int] = anisotropic_energy(sbar, body, Vec3(1, 1, 1));
    CHECK(h_int == doctest::Approx(0.0));
    CHECK(h_rot == doctest::Approx(1.0 / 1.0 + 4.0 / 2.0 + 0.25 / 4.0)
                       .epsilon(1e-14));
  }

  SUBCASE("proportional coupling reproduces the dot-product form") {
    const double gtilde = 0.35;
    const RigidBodyModel body(moments,
                              (gtilde * moments.asDiagonal().toDenseMatrix()));
    const Vec3 sbar(0.0, 0.0, 1.0);
    const Vec3 bbar(0.0, 0.0, 2.0);
    const auto [h_rot, h_int] = anisotropic_energy(sbar, body, bbar);
    CHECK(h_int == doctest::Approx(-2.0 * gtilde).epsilon(1e-14));
    CHECK(h_int == doctest::Approx(-gtilde * sbar.dot(bbar)).epsilon(1e-14));
    (void)h_rot;
  }

  SUBCASE("quadratic expansion identity") {
    Rng rng(44);
    for (int trial = 0; trial < 25; ++trial) {
      const Vec3 diag(rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0),
                      rng.uniform(0.1, 2.0));
      const RigidBodyModel body(moments, diag.asDiagonal().toDenseMatrix());
      const Vec3 sbar(rng.uniform(-2, 2), rng.uniform(-2, 2),
                      rng.uniform(-2, 2));
      const Vec3 bbar(rng.uniform(-2, 2), rng.uniform(-2, 2),
                      rng.uniform(-2, 2));
      const auto [h_rot, h_int] = anisotropic_energy(sbar, body, bbar);
      const Vec3 coupling = body.charge_tensor * bbar;
      double free_term = 0.0, quad_term = 0.0;
      for (int i = 0; i < 3; ++i) {
        free_term += sbar[i] * sbar[i] / (2.0 * moments[i]);
        quad_term += coupling[i] * coupling[i] / (2.0 * moments[i]);
      }
      CHECK(h_rot ==
            doctest::Approx(free_term + h_int + quad_term).epsilon(1e-12));
    }
  }

  SUBCASE("construction validates the inputs") {
    CHECK_THROWS_AS(RigidBodyModel(Vec3(1.0, -1.0, 1.0), Mat3::Zero()),
                    InvalidArgument);
    Mat3 lopsided = Mat3::Zero();
    lopsided(0, 1) = 1.0;
    CHECK_THROWS_AS(RigidBodyModel(Vec3(1.0, 1.0, 1.0), lopsided),
                    InvalidArgument);
  }
}

TEST_CASE("trajectory serialization carries the frozen header") {
  const ParticleModel model = unit_particle();
  ClassicalState state;
  state.v = Vec3(1.0, 0.0, 0.0);
  const TimeSeries series =
      integrate(state, model, FieldConfig::zero(), 0.125, 0.5);
  CHECK(series.header() ==
        "t,X1,X2,X3,V1,V2,V3,w1,w2,w3,KE_trans,KE_rot,H,spin_residual");
  const std::string csv = series.csv();
  CHECK(csv.find("1.2500000000000000e-01") != std::string::npos);
  CHECK(csv.find("e+") != std::string::npos);
}
