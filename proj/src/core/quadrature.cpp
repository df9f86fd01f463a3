#include "core/quadrature.hpp"

#include <cassert>
#include <cmath>

namespace eulerspin {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: need at least one node");
  GaussLegendre out;
  out.nodes.resize(static_cast<std::size_t>(n));
  out.weights.resize(static_cast<std::size_t>(n));

  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.nodes[static_cast<std::size_t>(i)] = -x;
    out.weights[static_cast<std::size_t>(i)] = w;
    out.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    out.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return out;
}

GroupQuadrature::GroupQuadrature(int polar_points, int azimuthal_points)
    : polar_(gauss_legendre(polar_points)), azimuthal_points_(azimuthal_points) {
  if (azimuthal_points < 4)
    throw InvalidArgument("GroupQuadrature: need at least 4 azimuthal points");
}

void GroupQuadrature::require_resolved(const BandLimit& combined) const {
  if (!combined.known) return;
  const int worst = combined.p > combined.q ? combined.p : combined.q;
  if (worst >= azimuthal_points_)
    throw QuadratureUnderresolved(
        "azimuthal band " + std::to_string(worst) + " needs more than " +
        std::to_string(azimuthal_points_) + " grid points");
}

Complex GroupQuadrature::inner_product(const AngleFunction& f,
                                       const AngleFunction& g) const {
  require_resolved(combine_product(f.band(), g.band()));
  const int naz = azimuthal_points_;
  const double step = 2.0 * kPi / naz;
  const double az_weight = step * step;

  Complex total(0.0, 0.0);
  for (std::size_t k = 0; k < polar_.nodes.size(); ++k) {
    const double a2 = std::acos(polar_.nodes[k]);
    Complex slice(0.0, 0.0);
    for (int i = 0; i < naz; ++i) {
      const double a1 = step * i;
      for (int j = 0; j < naz; ++j) {
        const EulerAngles ang{a1, a2, step * j};
        slice += std::conj(f.value(ang)) * g.value(ang);
      }
    }
    total += polar_.weights[k] * slice;
  }
  return az_weight * total;
}

double GroupQuadrature::norm_squared(const AngleFunction& f) const {
  return inner_product(f, f).real();
}

Eigen::MatrixXcd GroupQuadrature::gram(std::span<const AngleFunction> fs) const {
  const int nf = static_cast<int>(fs.size());
  BandLimit worst{0, 0, true};
  for (const AngleFunction& f : fs) worst = combine_sum(worst, f.band());
  require_resolved(combine_product(worst, worst));

  const int naz = azimuthal_points_;
  const double step = 2.0 * kPi / naz;
  const double az_weight = step * step;

  Eigen::MatrixXcd gram_matrix = Eigen::MatrixXcd::Zero(nf, nf);
  Eigen::MatrixXcd values(naz * naz, nf);
  for (std::size_t k = 0; k < polar_.nodes.size(); ++k) {
    const double a2 = std::acos(polar_.nodes[k]);
    for (int c = 0; c < nf; ++c) {
      for (int i = 0; i < naz; ++i) {
        const double a1 = step * i;
        for (int j = 0; j < naz; ++j)
          values(i * naz + j, c) = fs[static_cast<std::size_t>(c)].value(
              EulerAngles{a1, a2, step * j});
      }
    }
    gram_matrix.noalias() += polar_.weights[k] * (values.adjoint() * values);
  }
  return az_weight * gram_matrix;
}

}  // namespace eulerspin
