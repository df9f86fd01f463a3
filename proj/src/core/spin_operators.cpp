#include "core/spin_operators.hpp"

#include "core/kinematics.hpp"
#include "core/wigner.hpp"

#include <cassert>
#include <cmath>

namespace eulerspin {

namespace {

constexpr Complex kMinusIHbar(double hbar) { return Complex(0.0, -hbar); }

void require_axis(int axis) {
  if (axis < 1 || axis > 3)
    throw InvalidArgument("spin axis must be 1, 2, or 3; got " +
                          std::to_string(axis));
}

void require_nonsingular(const EulerAngles& ang) {
  if (std::abs(std::sin(ang.a2)) < 1e-12)
    throw SingularOrientation("polar angle " + std::to_string(ang.a2) +
                              " has vanishing sin");
}

struct TrigJets {
  Jet c1, s1, c2, s2, c3, s3;
};

TrigJets trig_jets(const EulerAngles& ang, int order) {
  const Jet x1 = jet_coordinate(ang, 0, order);
  const Jet x2 = jet_coordinate(ang, 1, order);
  const Jet x3 = jet_coordinate(ang, 2, order);
  return {cos(x1), sin(x1), cos(x2), sin(x2), cos(x3), sin(x3)};
}

// Column `axis` of the inverse coordinate-velocity map: space frame uses
// inv(a), body frame inv(b). Entry [b] multiplies d/d alpha^{b+1}.
std::array<Jet, 3> inverse_column(Frame frame, int axis, const EulerAngles& ang,
                                  int order) {
  const TrigJets t = trig_jets(ang, order);
  if (frame == Frame::space) {
    const Jet cot2 = t.c2 / t.s2;
    switch (axis) {
      case 1:
        return {-(t.c1 * cot2), -t.s1, t.c1 / t.s2};
      case 2:
        return {-(t.s1 * cot2), t.c1, t.s1 / t.s2};
      default:
        return {jet_constant(1.0, order), jet_constant(0.0, order),
                jet_constant(0.0, order)};
    }
  }
  switch (axis) {
    case 1:
      return {-(t.c3 / t.s2), t.s3, (t.c2 * t.c3) / t.s2};
    case 2:
      return {t.s3 / t.s2, t.c3, -((t.c2 * t.s3) / t.s2)};
    default:
      return {jet_constant(0.0, order), jet_constant(0.0, order),
              jet_constant(1.0, order)};
  }
}

BandLimit operator_band(Frame frame, int axis, const BandLimit& in) {
  if (!in.known) return BandLimit::unknown();
  BandLimit out = in;
  if (axis != 3) {
    if (frame == Frame::space)
      ++out.p;
    else
      ++out.q;
  }
  return out;
}

}  // namespace

AngleFunction apply_spin(int axis, Frame frame, const AngleFunction& f,
                         double hbar) {
  require_axis(axis);
  auto eval = [axis, frame, f, hbar](const EulerAngles& ang, int order) {
    require_nonsingular(ang);
    const int inner_order = order + 1 < 2 ? order + 1 : 2;
    const Jet fj = f.jet(ang, inner_order);
    const int out_order = fj.order - 1;
    const std::array<Jet, 3> coef = inverse_column(frame, axis, ang, out_order);
    Jet sum = coef[0] * jet_derivative(fj, 0);
    sum = sum + coef[1] * jet_derivative(fj, 1);
    sum = sum + coef[2] * jet_derivative(fj, 2);
    return kMinusIHbar(hbar) * sum;
  };
  return AngleFunction::from_evaluator(std::move(eval),
                                       operator_band(frame, axis, f.band()));
}

AngleFunction apply_spin_squared(const AngleFunction& f, double hbar) {
  auto eval = [f, hbar](const EulerAngles& ang, int) {
    require_nonsingular(ang);
    const Jet fj = f.jet(ang, 2);
    const double c2 = std::cos(ang.a2);
    const double s2 = std::sin(ang.a2);
    const Complex laplacian =
        fj.hess(1, 1) + (c2 / s2) * fj.grad(1) +
        (fj.hess(0, 0) + fj.hess(2, 2) - 2.0 * c2 * fj.hess(0, 2)) / (s2 * s2);
    Jet out;
    out.order = fj.order - 2;
    out.f = -hbar * hbar * laplacian;
    return out;
  };
  return AngleFunction::from_evaluator(std::move(eval), f.band());
}

AngleFunction apply_ladder(LadderSign sign, Frame frame, const AngleFunction& f,
                           double hbar) {
  const AngleFunction s1 = apply_spin(1, frame, f, hbar);
  const AngleFunction s2 = apply_spin(2, frame, f, hbar);
  double combo = sign == LadderSign::plus ? 1.0 : -1.0;
  if (frame == Frame::body) combo = -combo;
  return s1 + Complex(0.0, combo) * s2;
}

double ladder_coefficient(LadderSign sign, int two_s, int two_m, double hbar) {
  validate_label({two_s, two_m, two_s % 2 == 0 ? 0 : 1}, two_s);
  const double s = 0.5 * two_s;
  const double m = 0.5 * two_m;
  const double arg = sign == LadderSign::plus ? (s - m) * (s + m + 1.0)
                                              : (s + m) * (s - m + 1.0);
  return hbar * std::sqrt(arg);
}

double commutator_residual(int i, int j, Frame frame, const AngleFunction& f,
                           const EulerAngles& ang, double hbar) {
  require_axis(i);
  require_axis(j);
  const Complex sisj =
      apply_spin(i, frame, apply_spin(j, frame, f, hbar), hbar).value(ang);
  const Complex sjsi =
      apply_spin(j, frame, apply_spin(i, frame, f, hbar), hbar).value(ang);

  Complex structure(0.0, 0.0);
  for (int k = 1; k <= 3; ++k) {
    const double eps = levi_civita(i, j, k);
    if (eps != 0.0)
      structure += eps * apply_spin(k, frame, f, hbar).value(ang);
  }
  const double handedness = frame == Frame::space ? 1.0 : -1.0;
  return std::abs(sisj - sjsi - Complex(0.0, handedness * hbar) * structure);
}

AngleFunction rotated_field_component(const Vec3& field, int axis) {
  require_axis(axis);
  auto eval = [field, axis](const EulerAngles& ang, int order) {
    const TrigJets t = trig_jets(ang, order);
    std::array<Jet, 3> row;
    switch (axis) {
      case 1:
        row = {t.c3 * t.c2 * t.c1 - t.s3 * t.s1,
               t.c3 * t.c2 * t.s1 + t.s3 * t.c1, -(t.c3 * t.s2)};
        break;
      case 2:
        row = {-(t.s3 * t.c2 * t.c1) - t.c3 * t.s1,
               -(t.s3 * t.c2 * t.s1) + t.c3 * t.c1, t.s3 * t.s2};
        break;
      default:
        row = {t.s2 * t.c1, t.s2 * t.s1, t.c2};
        break;
    }
    return field[0] * row[0] + field[1] * row[1] + field[2] * row[2];
  };
  return AngleFunction::from_evaluator(std::move(eval), BandLimit{1, 1, true});
}

double body_field_commutator_residual(const Vec3& field, const AngleFunction& f,
                                      const EulerAngles& ang, double hbar) {
  Complex total(0.0, 0.0);
  for (int i = 1; i <= 3; ++i) {
    const AngleFunction component = rotated_field_component(field, i);
    const Complex applied_product =
        apply_spin(i, Frame::body, component * f, hbar).value(ang);
    const Complex product_applied =
        component.value(ang) * apply_spin(i, Frame::body, f, hbar).value(ang);
    total += applied_product - product_applied;
  }
  return std::abs(total);
}

AngleFunction apply_body_spin_weighted(int axis, const Vec3& inertia_diag,
                                       const AngleFunction& f, double hbar) {
  require_axis(axis);
  if (inertia_diag.minCoeff() <= 0.0)
    throw InvalidArgument("principal moments must be positive");
  auto eval = [axis, inertia_diag, f, hbar](const EulerAngles& ang, int order) {
    require_nonsingular(ang);
    const int inner_order = order + 1 < 2 ? order + 1 : 2;
    const Jet fj = f.jet(ang, inner_order);
    const int out_order = fj.order - 1;
    const TrigJets t = trig_jets(ang, out_order);

    const Jet zero = jet_constant(0.0, out_order);
    const Jet one = jet_constant(1.0, out_order);
    const std::array<std::array<Jet, 3>, 3> bmat = {{
        {-(t.s2 * t.c3), t.s3, zero},
        {t.s2 * t.s3, t.c3, zero},
        {t.c2, zero, one},
    }};
    std::array<std::array<Jet, 3>, 3> binv_col;
    for (int i = 1; i <= 3; ++i)
      binv_col[static_cast<std::size_t>(i - 1)] =
          inverse_column(Frame::body, i, ang, out_order);

    Jet sum = zero;
    for (int c = 0; c < 3; ++c) {
      Jet coef = zero;
      for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 3; ++i)
          coef = coef + (1.0 / inertia_diag[i]) *
                            (bmat[static_cast<std::size_t>(axis - 1)]
                                 [static_cast<std::size_t>(b)] *
                             binv_col[static_cast<std::size_t>(i)]
                                     [static_cast<std::size_t>(b)] *
                             binv_col[static_cast<std::size_t>(i)]
                                     [static_cast<std::size_t>(c)]);
      sum = sum + coef * jet_derivative(fj, c);
    }
    return (inertia_diag[axis - 1] * kMinusIHbar(hbar)) * sum;
  };
  return AngleFunction::from_evaluator(std::move(eval),
                                       operator_band(Frame::body, axis, f.band()));
}

std::vector<AngleFunction> operator_test_family() {
  const AngleFunction polar_smooth = AngleFunction::from_evaluator(
      [](const EulerAngles& ang, int order) {
        const Jet x2 = jet_coordinate(ang, 1, order);
        return AngleFunction::azimuthal_wave(2, 2).jet(ang, order) *
               exp(cos(x2));
      },
      BandLimit{1, 1, true});
  const AngleFunction full_smooth = AngleFunction::from_evaluator(
      [](const EulerAngles& ang, int order) {
        const Jet x1 = jet_coordinate(ang, 0, order);
        const Jet x2 = jet_coordinate(ang, 1, order);
        const Jet x3 = jet_coordinate(ang, 2, order);
        return exp(Complex(0.0, 1.0) * (sin(x1) + cos(x3))) *
               (jet_constant(Complex(2.0, 0.0), order) + cos(x2));
      },
      BandLimit::unknown());
  const AngleFunction gaussian_polar = AngleFunction::from_evaluator(
      [](const EulerAngles& ang, int order) {
        const Jet c2 = cos(jet_coordinate(ang, 1, order));
        return exp(Complex(-0.5, 0.0) * (c2 * c2)) *
               AngleFunction::azimuthal_wave(-2, 4).jet(ang, order);
      },
      BandLimit{1, 2, true});
  const AngleFunction half_wave = AngleFunction::from_evaluator(
      [](const EulerAngles& ang, int order) {
        const Jet s2 = sin(jet_coordinate(ang, 1, order));
        return AngleFunction::azimuthal_wave(1, -3).jet(ang, order) *
               (jet_constant(Complex(1.5, 0.0), order) + s2 * s2);
      },
      BandLimit{1, 2, true});

  return {
      wigner_harmonic({0, 0, 0}),
      wigner_harmonic({1, 1, 1}),
      wigner_harmonic({1, 1, -1}),
      wigner_harmonic({1, -1, -1}),
      wigner_harmonic({2, 0, 0}),
      wigner_harmonic({2, 2, -2}),
      wigner_harmonic({2, 0, 2}),
      wigner_harmonic({3, 1, -1}),
      wigner_harmonic({3, 3, 3}),
      wigner_harmonic({3, -1, 1}),
      wigner_harmonic({4, 2, 0}),
      wigner_harmonic({4, -4, 2}),
      wigner_harmonic({5, 1, 1}),
      wigner_harmonic({5, 5, -3}),
      Complex(0.6, 0.0) * wigner_harmonic({2, 2, 0}) +
          Complex(0.0, 0.8) * wigner_harmonic({2, 0, 2}),
      Complex(0.5, 0.5) * wigner_harmonic({1, 1, 1}) +
          Complex(0.5, -0.5) * wigner_harmonic({3, -1, 3}),
      polar_smooth,
      full_smooth,
      gaussian_polar,
      half_wave,
  };
}

}  // namespace eulerspin
