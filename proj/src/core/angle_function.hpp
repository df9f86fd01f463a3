#ifndef EULERSPIN_CORE_ANGLE_FUNCTION_HPP
#define EULERSPIN_CORE_ANGLE_FUNCTION_HPP

#include "core/jet.hpp"
#include "core/types.hpp"

#include <functional>
#include <utility>

namespace eulerspin {

// Highest azimuthal frequency a function carries in alpha^1 (p) and alpha^3
// (q). Quadrature uses it to decide whether a uniform grid can integrate a
// product without aliasing. `known` is false for functions built from raw
// evaluators, which disables that guard.
struct BandLimit {
  int p = 0;
  int q = 0;
  bool known = true;

  static BandLimit unknown() { return {0, 0, false}; }

  friend BandLimit combine_sum(const BandLimit& x, const BandLimit& y) {
    return {x.p > y.p ? x.p : y.p, x.q > y.q ? x.q : y.q, x.known && y.known};
  }
  friend BandLimit combine_product(const BandLimit& x, const BandLimit& y) {
    return {x.p + y.p, x.q + y.q, x.known && y.known};
  }
};

// A complex function on orientation space, evaluated pointwise as a Jet of a
// requested derivative order. Order 0 is a plain value; operators ask for
// one or two levels more than they deliver.
class AngleFunction {
 public:
  using Evaluator = std::function<Jet(const EulerAngles&, int)>;

  AngleFunction() : AngleFunction(constant(Complex(0.0, 0.0))) {}

  AngleFunction(Evaluator eval, BandLimit band)
      : eval_(std::move(eval)), band_(band) {}

  Jet jet(const EulerAngles& ang, int order = 2) const {
    return eval_(ang, order);
  }
  Complex value(const EulerAngles& ang) const { return eval_(ang, 0).f; }
  const BandLimit& band() const { return band_; }

  static AngleFunction constant(Complex c) {
    return AngleFunction(
        [c](const EulerAngles&, int order) { return jet_constant(c, order); },
        BandLimit{0, 0, true});
  }

  // exp(i (p alpha^1 + q alpha^3)) with integer or half-integer frequencies
  // passed as doubled values two_p, two_q.
  static AngleFunction azimuthal_wave(int two_p, int two_q) {
    const double p = 0.5 * two_p;
    const double q = 0.5 * two_q;
    auto eval = [p, q](const EulerAngles& ang, int order) {
      const Complex v = std::exp(Complex(0.0, p * ang.a1 + q * ang.a3));
      const Complex ip(0.0, p);
      const Complex iq(0.0, q);
      Jet w;
      w.order = order;
      w.f = v;
      if (order >= 1) {
        w.g[0] = ip * v;
        w.g[2] = iq * v;
      }
      if (order >= 2) {
        w.h[Jet::pack(0, 0)] = ip * ip * v;
        w.h[Jet::pack(2, 2)] = iq * iq * v;
        w.h[Jet::pack(0, 2)] = ip * iq * v;
      }
      return w;
    };
    const int ap = two_p < 0 ? -two_p : two_p;
    const int aq = two_q < 0 ? -two_q : two_q;
    return AngleFunction(std::move(eval), BandLimit{(ap + 1) / 2, (aq + 1) / 2, true});
  }

  // cos^a(alpha^2/2) sin^b(alpha^2/2); depends on the polar angle only.
  static AngleFunction polar_half_angle(int cos_pow, int sin_pow) {
    auto eval = [cos_pow, sin_pow](const EulerAngles& ang, int order) {
      const Jet half = 0.5 * jet_coordinate(ang, 1, order);
      return pow_int(cos(half), cos_pow) * pow_int(sin(half), sin_pow);
    };
    return AngleFunction(std::move(eval), BandLimit{0, 0, true});
  }

  static AngleFunction from_evaluator(Evaluator eval,
                                      BandLimit band = BandLimit::unknown()) {
    return AngleFunction(std::move(eval), band);
  }

  friend AngleFunction operator+(const AngleFunction& f, const AngleFunction& g) {
    auto fe = f.eval_;
    auto ge = g.eval_;
    return AngleFunction(
        [fe, ge](const EulerAngles& ang, int order) {
          return fe(ang, order) + ge(ang, order);
        },
        combine_sum(f.band_, g.band_));
  }

  friend AngleFunction operator-(const AngleFunction& f, const AngleFunction& g) {
    auto fe = f.eval_;
    auto ge = g.eval_;
    return AngleFunction(
        [fe, ge](const EulerAngles& ang, int order) {
          return fe(ang, order) - ge(ang, order);
        },
        combine_sum(f.band_, g.band_));
  }

  friend AngleFunction operator*(const AngleFunction& f, const AngleFunction& g) {
    auto fe = f.eval_;
    auto ge = g.eval_;
    return AngleFunction(
        [fe, ge](const EulerAngles& ang, int order) {
          return fe(ang, order) * ge(ang, order);
        },
        combine_product(f.band_, g.band_));
  }

  friend AngleFunction operator*(Complex c, const AngleFunction& f) {
    auto fe = f.eval_;
    return AngleFunction(
        [c, fe](const EulerAngles& ang, int order) { return c * fe(ang, order); },
        f.band_);
  }

  friend AngleFunction operator*(const AngleFunction& f, Complex c) {
    return c * f;
  }

 private:
  Evaluator eval_;
  BandLimit band_;
};

}  // namespace eulerspin

#endif
