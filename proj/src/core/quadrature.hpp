#ifndef EULERSPIN_CORE_QUADRATURE_HPP
#define EULERSPIN_CORE_QUADRATURE_HPP

#include "core/angle_function.hpp"
#include "core/types.hpp"

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace eulerspin {

// Nodes and weights for n-point Gauss-Legendre on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

// Integration over orientation space with measure
// d alpha^1 d(cos alpha^2) d alpha^3: Gauss-Legendre in cos alpha^2 crossed
// with uniform grids in the two azimuthal angles. Exact for integrands that
// are polynomials in cos alpha^2 times azimuthal waves below the grid's
// Nyquist frequency, which covers products of basis harmonics within one
// parity sector.
class GroupQuadrature {
 public:
  explicit GroupQuadrature(int polar_points = 32, int azimuthal_points = 64);

  int polar_points() const { return static_cast<int>(polar_.nodes.size()); }
  int azimuthal_points() const { return azimuthal_points_; }

  // <f, g> = integral of conj(f) g. Throws QuadratureUnderresolved when the
  // combined azimuthal band limit reaches the grid's aliasing threshold.
  Complex inner_product(const AngleFunction& f, const AngleFunction& g) const;

  double norm_squared(const AngleFunction& f) const;

  // Hermitian matrix of pairwise inner products.
  Eigen::MatrixXcd gram(std::span<const AngleFunction> fs) const;

 private:
  void require_resolved(const BandLimit& combined) const;

  GaussLegendre polar_;
  int azimuthal_points_;
};

}  // namespace eulerspin

#endif
