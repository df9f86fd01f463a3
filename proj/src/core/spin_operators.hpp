#ifndef EULERSPIN_CORE_SPIN_OPERATORS_HPP
#define EULERSPIN_CORE_SPIN_OPERATORS_HPP

#include "core/angle_function.hpp"
#include "core/types.hpp"

#include <vector>

namespace eulerspin {

enum class Frame { space, body };

enum class LadderSign { plus, minus };

// S_i f = -i hbar sum_b inv(a)_{b i} d f / d alpha^b in the space frame;
// the body frame uses inv(b) instead. Consumes one derivative level of f.
AngleFunction apply_spin(int axis, Frame frame, const AngleFunction& f,
                         double hbar = 1.0);

// S^2 f = -hbar^2 [d2_22 + cot(a2) d_2
//                  + (d2_11 + d2_33 - 2 cos(a2) d_13) / sin^2(a2)] f.
// Same result in either frame; consumes two derivative levels.
AngleFunction apply_spin_squared(const AngleFunction& f, double hbar = 1.0);

// Space frame: S1 +/- i S2. Body frame: Sbar1 -/+ i Sbar2, the combination
// that raises or lowers mbar with the same positive coefficients as the
// space ladder does m.
AngleFunction apply_ladder(LadderSign sign, Frame frame,
                           const AngleFunction& f, double hbar = 1.0);

// hbar sqrt((s -+ m)(s +- m + 1)) for S_{+/-} acting on projection m,
// from doubled quantum numbers.
double ladder_coefficient(LadderSign sign, int two_s, int two_m, double hbar = 1.0);

// ([S_i, S_j] - i hbar sign eps_{ijk} S_k) f at one point, where sign is +1
// in the space frame and -1 in the body frame. Returns the absolute value.
double commutator_residual(int i, int j, Frame frame, const AngleFunction& f,
                           const EulerAngles& ang, double hbar = 1.0);

// Matrix entry function B_bar_i = R_{i k} B_k of a constant space-frame
// field seen from the body frame.
AngleFunction rotated_field_component(const Vec3& field, int axis);

// | sum_i [Sbar_i, B_bar_i] f | at one point; vanishes identically because
// the body-frame components commute with the rotated field seen from the
// same frame.
double body_field_commutator_residual(const Vec3& field, const AngleFunction& f,
                                      const EulerAngles& ang, double hbar = 1.0);

// Body-frame spin built from momentum-space structure with explicit
// principal moments:
//   Sbar_k = Ibar_k sum_b b_{k b} sum_{i c} Ibar_i^{-1}
//            inv(b)_{b i} inv(b)_{c i} (-i hbar) d_c.
// The moments cancel identically, so the result equals apply_spin(k, body).
AngleFunction apply_body_spin_weighted(int axis, const Vec3& inertia_diag,
                                       const AngleFunction& f,
                                       double hbar = 1.0);

// Cross-checking family of twenty functions: basis harmonics across all spin
// sectors up to the cap, superpositions, and smooth non-harmonic functions.
// The verification checks probe operator identities against every member.
std::vector<AngleFunction> operator_test_family();

}  // namespace eulerspin

#endif
