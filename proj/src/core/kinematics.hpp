#ifndef EULERSPIN_CORE_KINEMATICS_HPP
#define EULERSPIN_CORE_KINEMATICS_HPP

#include "core/types.hpp"

namespace eulerspin {

// Orientations closer to the chart singularity than this (measured by
// |sin a2|) are rejected wherever an inverse kinematic matrix is needed.
inline constexpr double kSingularSinEps = 1e-12;

// Levi-Civita symbol with 1-based component indices.
double levi_civita(int i, int j, int k);

// Body-to-space rotation for the z-y-z angle set: R = Rz(a3) Ry(a2) Rz(a1),
// where Rz(u) rows are (cos u, sin u, 0), (-sin u, cos u, 0), (0, 0, 1) and
// Ry(u) rows are (cos u, 0, -sin u), (0, 1, 0), (sin u, 0, cos u).
Mat3 rotation_matrix(const EulerAngles& ang);

// Angular-velocity maps: omega_i = a(i,b) * adot^b in space components and
// omega_bar_i = b(i,b) * adot^b in body components, with b = R * a.
struct KinematicMatrices {
  Mat3 a;
  Mat3 b;
};
KinematicMatrices kinematic_matrices(const EulerAngles& ang);

struct KinematicInverses {
  Mat3 a_inv;  // a_inv(b,i): adot^b = a_inv(b,i) * omega_i
  Mat3 b_inv;
};
KinematicInverses kinematic_inverses(const EulerAngles& ang,
                                     double sin_eps = kSingularSinEps);

// Closed-form entrywise derivatives d a / d alpha^b and d b / d alpha^b,
// with the angle index b in 1..3.
Mat3 da_dalpha(const EulerAngles& ang, int b);
Mat3 db_dalpha(const EulerAngles& ang, int b);

// Configuration-space metric of the spherical rigid rotator,
// g_cov = (I/m) * [[1, 0, cos a2], [0, 1, 0], [cos a2, 0, 1]],
// equal to (I/m) a^T a and (I/m) b^T b.
struct MetricResult {
  Mat3 covariant;
  Mat3 contravariant;
  double sqrt_det;  // (I/m)^(3/2) |sin a2|
};
Mat3 covariant_metric(const EulerAngles& ang, double inertia, double mass);
MetricResult metric(const EulerAngles& ang, double inertia, double mass,
                    double sin_eps = kSingularSinEps);

// Contraction (a_inv(b,i) a_inv(c,j) - a_inv(b,j) a_inv(c,i)) * d a(k,c)/d alpha^b,
// which collapses to the Levi-Civita symbol. Component indices are 1-based.
double epsilon_identity_component(const EulerAngles& ang, int i, int j, int k,
                                  double sin_eps = kSingularSinEps);
// Max over all (i,j,k) of |component - eps_ijk|.
double epsilon_identity_residual(const EulerAngles& ang,
                                 double sin_eps = kSingularSinEps);

// Metric pulled back to the half-sum / half-difference azimuth coordinates
// xi1 = (a1 + a3)/2, xi3 = (a1 - a3)/2 (middle coordinate unchanged), where
// it is diagonal: diag(2(I/m)(1 + cos a2), I/m, 2(I/m)(1 - cos a2)).
Mat3 cayley_klein_metric(const EulerAngles& ang, double inertia, double mass);

}  // namespace eulerspin

#endif
