#ifndef EULERSPIN_CORE_JET_HPP
#define EULERSPIN_CORE_JET_HPP

#include "core/types.hpp"

#include <array>
#include <cassert>
#include <cmath>

namespace eulerspin {

// Truncated second-order Taylor data of a complex function of the three
// orientation coordinates: value, gradient, and symmetric Hessian, evaluated
// at one point. `order` says how many derivative levels are trustworthy;
// extracting a derivative lowers it by one, so an operator chain knows when
// it has run out of exact information instead of silently reading zeros.
struct Jet {
  Complex f{};
  std::array<Complex, 3> g{};
  std::array<Complex, 6> h{};
  int order = 2;

  // Packed symmetric index: (0,0)(1,1)(2,2)(0,1)(0,2)(1,2) -> 0..5.
  static constexpr int pack(int i, int j) {
    if (i == j) return i;
    const int lo = i < j ? i : j;
    const int hi = i < j ? j : i;
    return lo == 0 ? (hi == 1 ? 3 : 4) : 5;
  }

  Complex grad(int b) const {
    assert(order >= 1 && "Jet::grad: derivative order exhausted");
    return g[static_cast<std::size_t>(b)];
  }

  Complex hess(int i, int j) const {
    assert(order >= 2 && "Jet::hess: derivative order exhausted");
    return h[static_cast<std::size_t>(pack(i, j))];
  }
};

inline Jet jet_constant(Complex value, int order = 2) {
  Jet out;
  out.f = value;
  out.order = order;
  return out;
}

// The coordinate alpha^b itself (b in 0..2), seeded with unit gradient.
inline Jet jet_coordinate(const EulerAngles& ang, int b, int order = 2) {
  Jet out;
  out.f = Complex(ang[b], 0.0);
  out.order = order;
  if (order >= 1) out.g[static_cast<std::size_t>(b)] = Complex(1.0, 0.0);
  return out;
}

inline Jet operator+(const Jet& u, const Jet& v) {
  Jet w;
  w.order = u.order < v.order ? u.order : v.order;
  w.f = u.f + v.f;
  if (w.order >= 1)
    for (int i = 0; i < 3; ++i) w.g[i] = u.g[i] + v.g[i];
  if (w.order >= 2)
    for (int i = 0; i < 6; ++i) w.h[i] = u.h[i] + v.h[i];
  return w;
}

inline Jet operator-(const Jet& u, const Jet& v) {
  Jet w;
  w.order = u.order < v.order ? u.order : v.order;
  w.f = u.f - v.f;
  if (w.order >= 1)
    for (int i = 0; i < 3; ++i) w.g[i] = u.g[i] - v.g[i];
  if (w.order >= 2)
    for (int i = 0; i < 6; ++i) w.h[i] = u.h[i] - v.h[i];
  return w;
}

inline Jet operator-(const Jet& u) {
  Jet w = u;
  w.f = -w.f;
  for (auto& x : w.g) x = -x;
  for (auto& x : w.h) x = -x;
  return w;
}

inline Jet operator*(const Jet& u, const Jet& v) {
  Jet w;
  w.order = u.order < v.order ? u.order : v.order;
  w.f = u.f * v.f;
  if (w.order >= 1)
    for (int i = 0; i < 3; ++i) w.g[i] = u.g[i] * v.f + u.f * v.g[i];
  if (w.order >= 2)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const int p = Jet::pack(i, j);
        w.h[p] = u.h[p] * v.f + u.f * v.h[p] + u.g[i] * v.g[j] + u.g[j] * v.g[i];
      }
  return w;
}

inline Jet operator*(Complex c, const Jet& u) {
  Jet w = u;
  w.f *= c;
  for (auto& x : w.g) x *= c;
  for (auto& x : w.h) x *= c;
  return w;
}

inline Jet operator*(const Jet& u, Complex c) { return c * u; }
inline Jet operator*(double c, const Jet& u) { return Complex(c, 0.0) * u; }

inline Jet operator/(const Jet& u, const Jet& v) {
  assert(std::abs(v.f) > 0.0 && "Jet division by zero value");
  Jet w;
  w.order = u.order < v.order ? u.order : v.order;
  w.f = u.f / v.f;
  if (w.order >= 1)
    for (int i = 0; i < 3; ++i) w.g[i] = (u.g[i] - w.f * v.g[i]) / v.f;
  if (w.order >= 2)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const int p = Jet::pack(i, j);
        w.h[p] = (u.h[p] - w.g[i] * v.g[j] - w.g[j] * v.g[i] - w.f * v.h[p]) / v.f;
      }
  return w;
}

inline Jet conj(const Jet& u) {
  Jet w = u;
  w.f = std::conj(w.f);
  for (auto& x : w.g) x = std::conj(x);
  for (auto& x : w.h) x = std::conj(x);
  return w;
}

namespace detail {

// Chain rule for an analytic scalar map applied to a jet:
// w = F(u), with dF and d2F evaluated at u.f.
inline Jet jet_map(const Jet& u, Complex F, Complex dF, Complex d2F) {
  Jet w;
  w.order = u.order;
  w.f = F;
  if (w.order >= 1)
    for (int i = 0; i < 3; ++i) w.g[i] = dF * u.g[i];
  if (w.order >= 2)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const int p = Jet::pack(i, j);
        w.h[p] = dF * u.h[p] + d2F * u.g[i] * u.g[j];
      }
  return w;
}

}  // namespace detail

inline Jet exp(const Jet& u) {
  const Complex e = std::exp(u.f);
  return detail::jet_map(u, e, e, e);
}

inline Jet sin(const Jet& u) {
  const Complex s = std::sin(u.f);
  const Complex c = std::cos(u.f);
  return detail::jet_map(u, s, c, -s);
}

inline Jet cos(const Jet& u) {
  const Complex s = std::sin(u.f);
  const Complex c = std::cos(u.f);
  return detail::jet_map(u, c, -s, -c);
}

inline Jet pow_int(const Jet& u, int n) {
  assert(n >= 0 && "pow_int: negative exponent");
  Jet w = jet_constant(Complex(1.0, 0.0), u.order);
  for (int k = 0; k < n; ++k) w = w * u;
  return w;
}

// d/d alpha^b as jet data: the result's value is the b-th gradient entry and
// its gradient is the b-th Hessian row; one derivative level is consumed.
inline Jet jet_derivative(const Jet& u, int b) {
  assert(u.order >= 1 && "jet_derivative: derivative order exhausted");
  Jet w;
  w.order = u.order - 1;
  w.f = u.g[static_cast<std::size_t>(b)];
  if (w.order >= 1)
    for (int i = 0; i < 3; ++i) w.g[i] = u.h[Jet::pack(b, i)];
  return w;
}

}  // namespace eulerspin

#endif
