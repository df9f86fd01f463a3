#include "core/kinematics.hpp"
#include "core/rng.hpp"
#include "core/spin_operators.hpp"
#include "core/wigner.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <cmath>

using namespace eulerspin;
using namespace eulerspin::testing;

namespace {

const EulerAngles kProbeA{0.3, 0.7, 1.1};
const EulerAngles kProbeB{1.9, 2.2, -4.0};
const EulerAngles kProbeC{0.4, 0.9, 1.3};

// Matrix-plus-finite-difference route to S_i f, independent of the jet
// machinery: numerically differentiate the plain values of f and contract
// with the inverse velocity map.
Complex spin_by_finite_difference(int axis, Frame frame, const AngleFunction& f,
                                  const EulerAngles& ang, double hbar) {
  const KinematicInverses inv = kinematic_inverses(ang);
  const Mat3& m = frame == Frame::space ? inv.a_inv : inv.b_inv;
  Complex sum(0.0, 0.0);
  for (int b = 1; b <= 3; ++b) {
    const Complex df = central_diff(
        [&](const EulerAngles& x) { return f.value(x); }, ang, b);
    sum += m(b - 1, axis - 1) * df;
  }
  return Complex(0.0, -hbar) * sum;
}

}  // namespace

TEST_CASE("first-order action matches finite differences of plain values") {
  const double hbar = 1.0;
  const auto family = operator_test_family();
  for (const EulerAngles& ang : {kProbeA, kProbeB}) {
    for (const AngleFunction& f : family) {
      for (int axis = 1; axis <= 3; ++axis) {
        for (Frame frame : {Frame::space, Frame::body}) {
          const Complex via_jets = apply_spin(axis, frame, f, hbar).value(ang);
          const Complex via_fd =
              spin_by_finite_difference(axis, frame, f, ang, hbar);
          CHECK(std::abs(via_jets - via_fd) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("jet derivatives of a harmonic match finite differences") {
  const AngleFunction u = wigner_harmonic({3, 1, -1});
  const EulerAngles ang = kProbeA;
  const Jet j = u.jet(ang, 2);
  for (int b = 1; b <= 3; ++b) {
    const Complex grad_fd =
        central_diff([&](const EulerAngles& x) { return u.value(x); }, ang, b);
    CHECK(std::abs(j.grad(b - 1) - grad_fd) < 1e-10);
    for (int c = b; c <= 3; ++c) {
      const Complex hess_fd = central_diff(
          [&](const EulerAngles& x) { return u.jet(x, 1).grad(c - 1); }, ang, b);
      CHECK(std::abs(j.hess(b - 1, c - 1) - hess_fd) < 1e-9);
    }
  }
}

TEST_CASE("basis harmonics are joint eigenfunctions") {
  const double hbar = 1.0;
  Rng rng(31);
  for (int two_s = 0; two_s <= 5; ++two_s) {
    for (int two_m = -two_s; two_m <= two_s; two_m += 2) {
      for (int two_mb = -two_s; two_mb <= two_s; two_mb += 2) {
        const AngleFunction u = wigner_harmonic({two_s, two_m, two_mb});
        const EulerAngles ang = rng.angles();
        const Complex value = u.value(ang);

        const Complex s3 = apply_spin(3, Frame::space, u, hbar).value(ang);
        CHECK(std::abs(s3 - 0.5 * two_m * hbar * value) < 1e-11);

        const Complex sbar3 = apply_spin(3, Frame::body, u, hbar).value(ang);
        CHECK(std::abs(sbar3 - 0.5 * two_mb * hbar * value) < 1e-11);

        const double s = 0.5 * two_s;
        const Complex s2 = apply_spin_squared(u, hbar).value(ang);
        CHECK(std::abs(s2 - s * (s + 1) * hbar * hbar * value) < 1e-9);
      }
    }
  }
}

TEST_CASE("square of the spin equals the sum of squared components") {
  const double hbar = 0.8;
  const auto family = operator_test_family();
  for (const EulerAngles& ang : {kProbeA, kProbeB}) {
    for (const AngleFunction& f : family) {
      const Complex direct = apply_spin_squared(f, hbar).value(ang);
      for (Frame frame : {Frame::space, Frame::body}) {
        Complex composed(0.0, 0.0);
        for (int axis = 1; axis <= 3; ++axis)
          composed +=
              apply_spin(axis, frame, apply_spin(axis, frame, f, hbar), hbar)
                  .value(ang);
        CHECK(std::abs(direct - composed) < 1e-9);
      }
    }
  }
}

TEST_CASE("ladders shift projections with the standard coefficients") {
  const double hbar = 1.0;
  Rng rng(32);
  for (int two_s = 1; two_s <= 5; ++two_s) {
    const EulerAngles ang = rng.angles();
    for (int two_m = -two_s; two_m <= two_s; two_m += 2) {
      for (int two_mb = -two_s; two_mb <= two_s; two_mb += 2) {
        const AngleFunction u = wigner_harmonic({two_s, two_m, two_mb});

        // Space-frame raising: m -> m + 1, mbar untouched.
        const Complex raised = apply_ladder(LadderSign::plus, Frame::space, u,
                                            hbar)
                                   .value(ang);
        if (two_m == two_s) {
          CHECK(std::abs(raised) < 1e-11);
        } else {
          const double coeff = ladder_coefficient(LadderSign::plus, two_s,
                                                  two_m, hbar);
          const Complex target =
              wigner_harmonic({two_s, two_m + 2, two_mb}).value(ang);
          CHECK(std::abs(raised - coeff * target) < 1e-11);
        }

        // Body-frame lowering: mbar -> mbar - 1.
        const Complex lowered = apply_ladder(LadderSign::minus, Frame::body, u,
                                             hbar)
                                    .value(ang);
        if (two_mb == -two_s) {
          CHECK(std::abs(lowered) < 1e-11);
        } else {
          const double coeff = ladder_coefficient(LadderSign::minus, two_s,
                                                  two_mb, hbar);
          const Complex target =
              wigner_harmonic({two_s, two_m, two_mb - 2}).value(ang);
          CHECK(std::abs(lowered - coeff * target) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("spin-1/2 operator actions in closed form") {
  const double hbar = 1.0;
  const AngleFunction upp = wigner_harmonic({1, 1, 1});
  const AngleFunction upm = wigner_harmonic({1, 1, -1});

  const Complex upp_val = upp.value(kProbeC);
  CHECK(std::abs(apply_spin(3, Frame::space, upp, hbar).value(kProbeC) -
                 0.5 * hbar * upp_val) < 1e-13);

  // Body-frame raising takes the mbar = -1/2 partner onto u_{++} with unit
  // coefficient.
  const Complex raised =
      apply_ladder(LadderSign::plus, Frame::body, upm, hbar).value(kProbeC);
  CHECK(std::abs(raised - hbar * upp_val) < 1e-12);

  const AngleFunction mix = Complex(0.6, 0.0) * upp +
                            Complex(0.0, 0.8) * wigner_harmonic({1, -1, 1});
  const Complex squared = apply_spin_squared(mix, hbar).value(kProbeC);
  CHECK(std::abs(squared - 0.75 * hbar * hbar * mix.value(kProbeC)) < 1e-12);
}

TEST_CASE("component commutators close with opposite handedness per frame") {
  const double hbar = 1.0;
  const auto family = operator_test_family();
  for (const EulerAngles& ang : {kProbeA, kProbeB}) {
    for (const AngleFunction& f : family) {
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          CHECK(commutator_residual(i, j, Frame::space, f, ang, hbar) < 1e-10);
          CHECK(commutator_residual(i, j, Frame::body, f, ang, hbar) < 1e-10);
        }
    }
  }
}

TEST_CASE("rotated field components match the rotation matrix") {
  const Vec3 field(1.0, 2.0, -3.0);
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const EulerAngles ang = rng.angles();
    const Vec3 body_field = rotation_matrix(ang) * field;
    for (int axis = 1; axis <= 3; ++axis) {
      const Complex value = rotated_field_component(field, axis).value(ang);
      CHECK(std::abs(value - Complex(body_field[axis - 1], 0.0)) < 1e-13);
    }
  }
}

TEST_CASE("body components commute with the body-frame field") {
  const Vec3 field(1.0, 2.0, -3.0);
  const auto family = operator_test_family();
  for (const EulerAngles& ang : {kProbeA, kProbeB}) {
    for (const AngleFunction& f : family)
      CHECK(body_field_commutator_residual(field, f, ang) < 1e-10);
  }
}

TEST_CASE("principal-moment weights cancel in the body spin") {
  const Vec3 moments(0.7, 1.9, 3.1);
  const AngleFunction f = wigner_harmonic({3, 1, -1});
  for (const EulerAngles& ang : {kProbeA, kProbeB}) {
    for (int axis = 1; axis <= 3; ++axis) {
      const Complex weighted =
          apply_body_spin_weighted(axis, moments, f).value(ang);
      const Complex plain = apply_spin(axis, Frame::body, f).value(ang);
      CHECK(std::abs(weighted - plain) < 1e-10);
    }
  }
  CHECK_THROWS_AS(apply_body_spin_weighted(1, Vec3(1.0, -2.0, 3.0), f),
                  InvalidArgument);
}

TEST_CASE("operators reject the chart singularity") {
  const AngleFunction u = wigner_harmonic({1, 1, 1});
  CHECK_THROWS_AS(apply_spin(1, Frame::space, u).value({0.1, 0.0, 0.2}),
                  SingularOrientation);
  CHECK_THROWS_AS(apply_spin_squared(u).value({0.1, kPi, 0.2}),
                  SingularOrientation);
  CHECK_THROWS_AS(apply_spin(0, Frame::space, u), InvalidArgument);
  CHECK_THROWS_AS(apply_spin(4, Frame::body, u), InvalidArgument);
}

TEST_CASE("ladder coefficients follow the square-root rule") {
  CHECK(ladder_coefficient(LadderSign::plus, 1, -1) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ladder_coefficient(LadderSign::plus, 1, 1) == doctest::Approx(0.0));
  CHECK(ladder_coefficient(LadderSign::plus, 3, -1, 2.0) ==
        doctest::Approx(4.0).epsilon(1e-15));
  CHECK(ladder_coefficient(LadderSign::minus, 3, -1) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(ladder_coefficient(LadderSign::minus, 2, 2) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}
