#include "core/quadrature.hpp"
#include "core/rng.hpp"
#include "core/wigner.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

using namespace eulerspin;

namespace {

// Independent route to the rotation functions: exponentiate the middle-axis
// generator through its eigendecomposition and read off matrix entries.
Eigen::MatrixXd rotation_function_by_exponential(int two_s, double beta) {
  const SpinMatrices mats = spin_matrices(two_s, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(mats.sy);
  const Eigen::VectorXcd phases =
      (Complex(0.0, -beta) * eig.eigenvalues().cast<Complex>()).array().exp();
  const Eigen::MatrixXcd result = eig.eigenvectors() * phases.asDiagonal() *
                                  eig.eigenvectors().adjoint();
  return result.real();
}

int row_of(int two_s, int two_m) { return (two_s - two_m) / 2; }

}  // namespace

TEST_CASE("rotation functions match the exponential of the generator") {
  for (int two_s = 0; two_s <= 5; ++two_s) {
    for (double beta : {0.0, 0.3, 0.9, 1.7, 2.6, 3.1}) {
      const Eigen::MatrixXd expected =
          rotation_function_by_exponential(two_s, beta);
      for (int two_m = -two_s; two_m <= two_s; two_m += 2)
        for (int two_mb = -two_s; two_mb <= two_s; two_mb += 2) {
          const double entry = little_d(two_s, two_m, two_mb, beta);
          CHECK(entry == doctest::Approx(expected(row_of(two_s, two_m),
                                                  row_of(two_s, two_mb)))
                             .epsilon(1e-11));
        }
    }
  }
}

TEST_CASE("rotation function closed forms at low spin") {
  const double beta = 0.7;
  const double c = std::cos(beta / 2);
  const double s = std::sin(beta / 2);

  CHECK(little_d(1, 1, 1, beta) == doctest::Approx(c).epsilon(1e-14));
  CHECK(little_d(1, 1, -1, beta) == doctest::Approx(-s).epsilon(1e-14));
  CHECK(little_d(1, -1, 1, beta) == doctest::Approx(s).epsilon(1e-14));
  CHECK(little_d(1, -1, -1, beta) == doctest::Approx(c).epsilon(1e-14));

  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  CHECK(little_d(2, 2, 2, beta) == doctest::Approx(0.5 * (1 + cb)).epsilon(1e-14));
  CHECK(little_d(2, 2, 0, beta) ==
        doctest::Approx(-sb / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(little_d(2, 0, 2, beta) ==
        doctest::Approx(sb / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(little_d(2, 2, -2, beta) == doctest::Approx(0.5 * (1 - cb)).epsilon(1e-14));
  CHECK(little_d(2, 0, 0, beta) == doctest::Approx(cb).epsilon(1e-14));
}

TEST_CASE("rotation function symmetries") {
  Rng rng(21);
  for (int two_s = 1; two_s <= 5; ++two_s)
    for (int trial = 0; trial < 5; ++trial) {
      const double beta = rng.uniform(0.0, kPi);
      for (int two_m = -two_s; two_m <= two_s; two_m += 2)
        for (int two_mb = -two_s; two_mb <= two_s; two_mb += 2) {
          const double d = little_d(two_s, two_m, two_mb, beta);
          CHECK(d == doctest::Approx(little_d(two_s, two_mb, two_m, -beta))
                         .epsilon(1e-12));
          CHECK(d == doctest::Approx(little_d(two_s, -two_mb, -two_m, beta))
                         .epsilon(1e-12));
        }
      // At beta = 0 the function reduces to the identity matrix.
      for (int two_m = -two_s; two_m <= two_s; two_m += 2)
        CHECK(little_d(two_s, two_m, two_m, 0.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("spin-1/2 harmonics in closed form") {
  const EulerAngles ang{0.4, 0.9, 1.3};
  const double inv_2pi = 1.0 / (2.0 * kPi);
  const double c = std::cos(ang.a2 / 2);
  const double s = std::sin(ang.a2 / 2);

  const Complex upp = wigner_harmonic({1, 1, 1}).value(ang);
  const Complex upm = wigner_harmonic({1, 1, -1}).value(ang);
  const Complex ump = wigner_harmonic({1, -1, 1}).value(ang);
  const Complex umm = wigner_harmonic({1, -1, -1}).value(ang);

  const Complex sum_phase = std::exp(Complex(0.0, 0.5 * (ang.a1 + ang.a3)));
  const Complex diff_phase = std::exp(Complex(0.0, 0.5 * (ang.a1 - ang.a3)));

  CHECK(std::abs(upp - inv_2pi * sum_phase * c) < 1e-14);
  CHECK(std::abs(upm + inv_2pi * diff_phase * s) < 1e-14);
  CHECK(std::abs(ump - inv_2pi * std::conj(diff_phase) * s) < 1e-14);
  CHECK(std::abs(umm - inv_2pi * std::conj(sum_phase) * c) < 1e-14);
}

TEST_CASE("harmonics are orthonormal under the group measure") {
  const GroupQuadrature quad;

  SUBCASE("spin-1/2 Gram matrix is the identity") {
    std::vector<AngleFunction> basis;
    for (int two_m : {1, -1})
      for (int two_mb : {1, -1})
        basis.push_back(wigner_harmonic({1, two_m, two_mb}));
    const Eigen::MatrixXcd gram = quad.gram(basis);
    CHECK((gram - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-10);
  }

  SUBCASE("mixed integer-spin set stays orthonormal") {
    std::vector<AngleFunction> basis;
    basis.push_back(wigner_harmonic({0, 0, 0}));
    for (int two_m = -2; two_m <= 2; two_m += 2)
      basis.push_back(wigner_harmonic({2, two_m, 0}));
    basis.push_back(wigner_harmonic({4, 2, -2}));
    basis.push_back(wigner_harmonic({4, 0, 4}));
    const int n = static_cast<int>(basis.size());
    const Eigen::MatrixXcd gram = quad.gram(basis);
    CHECK((gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <
          1e-10);
  }

  SUBCASE("half-integer set up to the spin cap") {
    std::vector<AngleFunction> basis;
    basis.push_back(wigner_harmonic({1, 1, 1}));
    basis.push_back(wigner_harmonic({3, 1, 1}));
    basis.push_back(wigner_harmonic({3, 3, -1}));
    basis.push_back(wigner_harmonic({5, 1, 1}));
    basis.push_back(wigner_harmonic({5, 5, 3}));
    const int n = static_cast<int>(basis.size());
    const Eigen::MatrixXcd gram = quad.gram(basis);
    CHECK((gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("matrix representations close the angular momentum algebra") {
  const double hbar = 0.7;
  for (int two_s : {1, 2, 3, 4, 5}) {
    const SpinMatrices m = spin_matrices(two_s, hbar);
    const int n = two_s + 1;
    const Complex ih(0.0, hbar);

    CHECK(((m.sx * m.sy - m.sy * m.sx) - ih * m.sz).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(((m.sy * m.sz - m.sz * m.sy) - ih * m.sx).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(((m.sz * m.sx - m.sx * m.sz) - ih * m.sy).cwiseAbs().maxCoeff() < 1e-13);

    const double s = 0.5 * two_s;
    const Eigen::MatrixXcd casimir =
        m.sx * m.sx + m.sy * m.sy + m.sz * m.sz;
    CHECK((casimir - s * (s + 1) * hbar * hbar *
                         Eigen::MatrixXcd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() < 1e-13);

    CHECK((m.plus - (m.sx + Complex(0.0, 1.0) * m.sy)).cwiseAbs().maxCoeff() <
          1e-13);
  }
}

TEST_CASE("label validation rejects out-of-range quantum numbers") {
  CHECK_THROWS_AS(validate_label({-1, 1, 1}), InvalidLabel);
  CHECK_THROWS_AS(validate_label({1, 3, 1}), InvalidLabel);
  CHECK_THROWS_AS(validate_label({1, 0, 1}), InvalidLabel);
  CHECK_THROWS_AS(validate_label({2, 1, 0}), InvalidLabel);
  CHECK_THROWS_AS(validate_label({7, 1, 1}), InvalidLabel);
  CHECK_NOTHROW(validate_label({7, 1, 1}, 8));
  CHECK_NOTHROW(validate_label({5, -3, 5}));
  CHECK_THROWS_AS(wigner_harmonic({1, 1, 2}), InvalidLabel);
}

TEST_CASE("superpositions cannot mix spin parity sectors") {
  const std::vector<SpinLabel> mixed = {{1, 1, 1}, {2, 0, 0}};
  try {
    validate_superposition(mixed);
    FAIL("expected ParityMixing");
  } catch (const ParityMixing& err) {
    CHECK(err.two_s_a == 1);
    CHECK(err.two_s_b == 2);
  }

  const std::vector<SpinLabel> half = {{1, 1, 1}, {3, 1, -3}, {5, 5, 1}};
  CHECK_NOTHROW(validate_superposition(half));
  const std::vector<SpinLabel> whole = {{0, 0, 0}, {2, 2, -2}, {4, 0, 0}};
  CHECK_NOTHROW(validate_superposition(whole));
}

TEST_CASE("basis expansions validate and evaluate") {
  const std::vector<SpinLabel> labels = {{1, 1, 1}, {1, -1, 1}};
  const std::vector<Complex> coeffs = {Complex(0.6, 0.0), Complex(0.0, 0.8)};

  const BasisExpansion state(labels, coeffs, true);
  CHECK(state.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));

  const EulerAngles ang{1.1, 0.8, -0.4};
  const Complex direct = coeffs[0] * wigner_harmonic(labels[0]).value(ang) +
                         coeffs[1] * wigner_harmonic(labels[1]).value(ang);
  CHECK(std::abs(state.to_function().value(ang) - direct) < 1e-14);

  CHECK_THROWS_AS(
      BasisExpansion(labels, {Complex(1.0, 0.0), Complex(1.0, 0.0)}, true),
      InvalidArgument);
  CHECK_NOTHROW(
      BasisExpansion(labels, {Complex(1.0, 0.0), Complex(1.0, 0.0)}, false));
  CHECK_THROWS_AS(BasisExpansion({{1, 1, 1}, {2, 0, 0}},
                                 {Complex(1.0, 0.0), Complex(0.0, 0.0)}, false),
                  ParityMixing);
  CHECK_THROWS_AS(BasisExpansion(labels, {Complex(1.0, 0.0)}, false),
                  InvalidArgument);
}

TEST_CASE("quadrature norm of an expansion matches its coefficients") {
  const BasisExpansion state({{1, 1, 1}, {1, -1, -1}},
                             {Complex(0.6, 0.0), Complex(0.0, 0.8)}, true);
  const GroupQuadrature quad;
  CHECK(quad.norm_squared(state.to_function()) ==
        doctest::Approx(1.0).epsilon(1e-10));
}
