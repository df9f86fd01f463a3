#include "core/kinematics.hpp"

#include <cmath>

namespace eulerspin {

double levi_civita(int i, int j, int k) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3)
    throw InvalidArgument("levi_civita: component indices must be in 1..3");
  return 0.5 * (i - j) * (j - k) * (k - i);
}

namespace {

struct Trig {
  double c1, s1, c2, s2, c3, s3;
  explicit Trig(const EulerAngles& ang)
      : c1(std::cos(ang.a1)), s1(std::sin(ang.a1)),
        c2(std::cos(ang.a2)), s2(std::sin(ang.a2)),
        c3(std::cos(ang.a3)), s3(std::sin(ang.a3)) {}
};

Mat3 rot_z(double u) {
  Mat3 r;
  r << std::cos(u), std::sin(u), 0.0,
      -std::sin(u), std::cos(u), 0.0,
       0.0, 0.0, 1.0;
  return r;
}

Mat3 rot_y(double u) {
  Mat3 r;
  r << std::cos(u), 0.0, -std::sin(u),
       0.0, 1.0, 0.0,
       std::sin(u), 0.0, std::cos(u);
  return r;
}

void require_nonsingular(double s2, double sin_eps) {
  if (std::abs(s2) < sin_eps)
    throw SingularOrientation(
        "orientation too close to sin(a2) = 0 for an invertible angle chart");
}

}  // namespace

Mat3 rotation_matrix(const EulerAngles& ang) {
  return rot_z(ang.a3) * rot_y(ang.a2) * rot_z(ang.a1);
}

KinematicMatrices kinematic_matrices(const EulerAngles& ang) {
  const Trig t(ang);
  KinematicMatrices km;
  km.a << 0.0, -t.s1, t.s2 * t.c1,
          0.0,  t.c1, t.s2 * t.s1,
          1.0,  0.0,  t.c2;
  km.b << -t.s2 * t.c3, t.s3, 0.0,
           t.s2 * t.s3, t.c3, 0.0,
           t.c2,        0.0,  1.0;
  return km;
}

KinematicInverses kinematic_inverses(const EulerAngles& ang, double sin_eps) {
  const Trig t(ang);
  require_nonsingular(t.s2, sin_eps);
  const double cot2 = t.c2 / t.s2;
  KinematicInverses ki;
  ki.a_inv << -t.c1 * cot2, -t.s1 * cot2, 1.0,
              -t.s1,         t.c1,        0.0,
               t.c1 / t.s2,  t.s1 / t.s2, 0.0;
  ki.b_inv << -t.c3 / t.s2,  t.s3 / t.s2, 0.0,
               t.s3,         t.c3,        0.0,
               cot2 * t.c3, -cot2 * t.s3, 1.0;
  return ki;
}

Mat3 da_dalpha(const EulerAngles& ang, int b) {
  const Trig t(ang);
  Mat3 d = Mat3::Zero();
  switch (b) {
    case 1:
      d << 0.0, -t.c1, -t.s2 * t.s1,
           0.0, -t.s1,  t.s2 * t.c1,
           0.0,  0.0,   0.0;
      return d;
    case 2:
      d << 0.0, 0.0,  t.c2 * t.c1,
           0.0, 0.0,  t.c2 * t.s1,
           0.0, 0.0, -t.s2;
      return d;
    case 3:
      return d;
    default:
      throw InvalidArgument("da_dalpha: angle index must be in 1..3");
  }
}

Mat3 db_dalpha(const EulerAngles& ang, int b) {
  const Trig t(ang);
  Mat3 d = Mat3::Zero();
  switch (b) {
    case 1:
      return d;
    case 2:
      d << -t.c2 * t.c3, 0.0, 0.0,
            t.c2 * t.s3, 0.0, 0.0,
           -t.s2,        0.0, 0.0;
      return d;
    case 3:
      d << t.s2 * t.s3,  t.c3, 0.0,
           t.s2 * t.c3, -t.s3, 0.0,
           0.0,          0.0,  0.0;
      return d;
    default:
      throw InvalidArgument("db_dalpha: angle index must be in 1..3");
  }
}

Mat3 covariant_metric(const EulerAngles& ang, double inertia, double mass) {
  if (inertia <= 0.0 || mass <= 0.0)
    throw InvalidArgument("metric: inertia and mass must be positive");
  const double k = inertia / mass;
  const double c2 = std::cos(ang.a2);
  Mat3 g;
  g << k, 0.0, k * c2,
       0.0, k, 0.0,
       k * c2, 0.0, k;
  return g;
}

MetricResult metric(const EulerAngles& ang, double inertia, double mass,
                    double sin_eps) {
  MetricResult res;
  res.covariant = covariant_metric(ang, inertia, mass);
  const double k = inertia / mass;
  const double c2 = std::cos(ang.a2);
  const double s2 = std::sin(ang.a2);
  require_nonsingular(s2, sin_eps);
  const double inv_ks2 = 1.0 / (k * s2 * s2);
  res.contravariant << inv_ks2, 0.0, -c2 * inv_ks2,
                       0.0, 1.0 / k, 0.0,
                      -c2 * inv_ks2, 0.0, inv_ks2;
  res.sqrt_det = k * std::sqrt(k) * std::abs(s2);
  return res;
}

double epsilon_identity_component(const EulerAngles& ang, int i, int j, int k,
                                  double sin_eps) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3)
    throw InvalidArgument("epsilon_identity_component: indices must be in 1..3");
  const Mat3 a_inv = kinematic_inverses(ang, sin_eps).a_inv;
  const Mat3 da[3] = {da_dalpha(ang, 1), da_dalpha(ang, 2), da_dalpha(ang, 3)};
  double sum = 0.0;
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) {
      const double anti = a_inv(b, i - 1) * a_inv(c, j - 1) -
                          a_inv(b, j - 1) * a_inv(c, i - 1);
      sum += anti * da[b](k - 1, c);
    }
  }
  return sum;
}

double epsilon_identity_residual(const EulerAngles& ang, double sin_eps) {
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const double dev = std::abs(epsilon_identity_component(ang, i, j, k, sin_eps) -
                                    levi_civita(i, j, k));
        worst = std::max(worst, dev);
      }
  return worst;
}

Mat3 cayley_klein_metric(const EulerAngles& ang, double inertia, double mass) {
  // Columns of J = d(alpha)/d(xi) for a1 = xi1 + xi3, a2 = xi2, a3 = xi1 - xi3.
  Mat3 jac;
  jac << 1.0, 0.0, 1.0,
         0.0, 1.0, 0.0,
         1.0, 0.0, -1.0;
  const Mat3 g = covariant_metric(ang, inertia, mass);
  return jac.transpose() * g * jac;
}

}  // namespace eulerspin
