#include "core/ring.hpp"

#include "doctest.h"

#include <cmath>

using namespace eulerspin;

TEST_CASE("balanced ring at unit spin parameter") {
  // lambda = 1 means spin = m a c, so beta = 1/sqrt(2), gamma = sqrt(2).
  const UnitSystem natural = UnitSystem::natural();
  const RingModel model{1.0, 1.0, 1.0};
  const RingSolution sol = ring_solution(model, natural);
  CHECK(sol.lambda == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sol.beta == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sol.gamma == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("solution satisfies the defining relations") {
  const UnitSystem cgs = UnitSystem::cgs();
  for (double m : {1e-27, 1.8e-24, 3e-22}) {
    for (double a_fm : {1e-2, 0.3, 1.0, 10.0}) {
      const RingModel model =
          RingModel::with_half_hbar(m, fm_to_cm(a_fm), cgs);
      const RingSolution sol = ring_solution(model, cgs);

      CHECK(sol.beta > 0.0);
      CHECK(sol.beta < 1.0);
      CHECK(sol.gamma >= 1.0);

      // beta gamma = lambda reproduces the angular-momentum constraint.
      CHECK(sol.beta * sol.gamma ==
            doctest::Approx(sol.lambda).epsilon(1e-14));
      // 1/gamma^2 + beta^2 = 1, written without the ill-conditioned
      // 1 - beta^2 subtraction so it holds at ultrarelativistic lambda too.
      CHECK(std::abs(1.0 / (sol.gamma * sol.gamma) + sol.beta * sol.beta -
                     1.0) < 1e-14);

      // Full consistency: m gamma a^2 omega = spin with omega = beta c / a.
      const double spin = m * sol.gamma * model.a * sol.beta * cgs.c;
      CHECK(spin == doctest::Approx(model.spin_target).epsilon(1e-12));
    }
  }
}

TEST_CASE("electron-scale ring is ultrarelativistic") {
  const UnitSystem cgs = UnitSystem::cgs();
  const RingModel model =
      RingModel::with_half_hbar(1e-27, fm_to_cm(1e-2), cgs);
  const RingSolution sol = ring_solution(model, cgs);
  CHECK(sol.lambda > 1e4);
  CHECK(std::abs(1.0 - sol.beta) < 1e-8);
  CHECK(sol.lambda == doctest::Approx(17589.0).epsilon(1e-2));
}

TEST_CASE("baryon-scale ring stays nonrelativistic") {
  const UnitSystem cgs = UnitSystem::cgs();
  const RingModel model =
      RingModel::with_half_hbar(1.8e-24, fm_to_cm(1.0), cgs);
  const RingSolution sol = ring_solution(model, cgs);
  CHECK(sol.beta <= 0.1);
  CHECK(sol.lambda == doctest::Approx(0.0977).epsilon(1e-2));
  // Small-lambda expansion: beta = lambda (1 - lambda^2 / 2 + ...).
  const double series =
      sol.lambda * (1.0 - 0.5 * sol.lambda * sol.lambda);
  CHECK(sol.beta == doctest::Approx(series).epsilon(1e-4));
  CHECK(nonrelativistic_beta(model, cgs) ==
        doctest::Approx(sol.lambda).epsilon(1e-15));
}

TEST_CASE("beta grows with spin and shrinks with mass or radius") {
  const UnitSystem natural = UnitSystem::natural();
  const double base =
      ring_solution(RingModel{2.0, 3.0, 0.5}, natural).beta;
  CHECK(ring_solution(RingModel{2.0, 3.0, 1.0}, natural).beta > base);
  CHECK(ring_solution(RingModel{4.0, 3.0, 0.5}, natural).beta < base);
  CHECK(ring_solution(RingModel{2.0, 6.0, 0.5}, natural).beta < base);
  // beta < lambda always: the relativistic mass increase slows the rim.
  const RingSolution sol = ring_solution(RingModel{2.0, 3.0, 0.5}, natural);
  CHECK(sol.beta < sol.lambda);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS((RingModel{-1.0, 1.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS((RingModel{1.0, 0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS((RingModel{1.0, 1.0, -0.5}), InvalidArgument);
}
