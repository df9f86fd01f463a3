#ifndef EULERSPIN_CORE_WIGNER_HPP
#define EULERSPIN_CORE_WIGNER_HPP

#include "core/angle_function.hpp"
#include "core/types.hpp"

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace eulerspin {

inline constexpr int kDefaultMaxTwoS = 5;

// Basis label |s, m, mbar> stored as doubled integers so integer and
// half-integer spins share one exact representation. m is the space-fixed
// projection (conjugate to alpha^1), mbar the body-fixed one (alpha^3).
struct SpinLabel {
  int two_s = 0;
  int two_m = 0;
  int two_mbar = 0;

  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;
};

// Throws InvalidLabel unless two_s >= 0, two_s <= max_two_s, and both
// projections lie in range with the same parity as two_s.
void validate_label(const SpinLabel& label, int max_two_s = kDefaultMaxTwoS);

// Rotation-function matrix element d^s_{m,mbar}(beta), Condon-Shortley
// phase convention. Arguments are doubled quantum numbers.
double little_d(int two_s, int two_m, int two_mbar, double beta);

// Orthonormal eigenfunction of {S^2, S_3, Sbar_3}:
//   sqrt((2s+1)/(8 pi^2)) exp(i(m a1 + mbar a3)) d^s_{m,mbar}(a2)
// with eigenvalues s(s+1) hbar^2, m hbar, mbar hbar.
AngleFunction wigner_harmonic(const SpinLabel& label,
                              int max_two_s = kDefaultMaxTwoS);

// (2s+1)-dimensional matrices of S_1, S_2, S_3 in the |s, mbar> column
// convention (first component mbar = +s), satisfying
// [S_i, S_j] = i hbar eps_{ijk} S_k.
struct SpinMatrices {
  Eigen::MatrixXcd sx, sy, sz;
  Eigen::MatrixXcd plus, minus;
};

SpinMatrices spin_matrices(int two_s, double hbar);

// Rejects superpositions mixing integer with half-integer spin; throws
// ParityMixing carrying the first offending pair.
void validate_superposition(std::span<const SpinLabel> labels);

// A finite linear combination of basis harmonics. When constructed as a
// state the coefficients must be unit-norm.
class BasisExpansion {
 public:
  BasisExpansion(std::vector<SpinLabel> labels, std::vector<Complex> coeffs,
                 bool as_state = false, int max_two_s = kDefaultMaxTwoS);

  const std::vector<SpinLabel>& labels() const { return labels_; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  double norm_squared() const;
  AngleFunction to_function() const;

 private:
  std::vector<SpinLabel> labels_;
  std::vector<Complex> coeffs_;
  int max_two_s_;
};

}  // namespace eulerspin

#endif
