#include "core/density.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace eulerspin {

namespace {

using Integrator = boost::math::quadrature::gauss_kronrod<double, 61>;

double radial_integral(const std::function<double(double)>& f, double radius,
                       int power) {
  return Integrator::integrate(
      [&](double r) { return std::pow(r, power) * f(r); }, 0.0, radius, 15,
      1e-12);
}

}  // namespace

DensityProfile DensityProfile::uniform_ball(double radius) {
  if (radius <= 0.0) throw InvalidArgument("profile radius must be positive");
  return DensityProfile(Kind::uniform, radius);
}

DensityProfile DensityProfile::thin_shell(double radius) {
  if (radius <= 0.0) throw InvalidArgument("profile radius must be positive");
  return DensityProfile(Kind::shell, radius);
}

DensityProfile DensityProfile::from_function(std::function<double(double)> f,
                                             double radius) {
  if (radius <= 0.0) throw InvalidArgument("profile radius must be positive");
  DensityProfile out(Kind::tabulated, radius);
  out.f_ = std::move(f);
  const double raw = 4.0 * kPi * radial_integral(out.f_, radius, 2);
  if (!std::isfinite(raw) || raw <= 0.0)
    throw UnnormalizedProfile("profile norm " + std::to_string(raw) +
                              " cannot be rescaled to one");
  out.scale_ = 1.0 / raw;
  return out;
}

double DensityProfile::mean_square_radius() const {
  switch (kind_) {
    case Kind::uniform:
      return 0.6 * radius_ * radius_;
    case Kind::shell:
      return radius_ * radius_;
    case Kind::tabulated:
      return scale_ * 4.0 * kPi * radial_integral(f_, radius_, 4);
  }
  return 0.0;
}

double DensityProfile::norm() const {
  if (kind_ != Kind::tabulated) return 1.0;
  return scale_ * 4.0 * kPi * radial_integral(f_, radius_, 2);
}

ParticleModel moments_from_profiles(const DensityProfile& charge,
                                    const DensityProfile& mass, double m,
                                    double q, const UnitSystem& units) {
  if (m <= 0.0) throw InvalidArgument("mass must be positive");
  const double charge_norm = charge.norm();
  const double mass_norm = mass.norm();
  if (std::abs(charge_norm - 1.0) > 1e-10)
    throw UnnormalizedProfile("charge profile norm " +
                              std::to_string(charge_norm));
  if (std::abs(mass_norm - 1.0) > 1e-10)
    throw UnnormalizedProfile("mass profile norm " +
                              std::to_string(mass_norm));

  ParticleModel model;
  model.m = m;
  model.q = q;
  const double r2_mass = mass.mean_square_radius();
  model.inertia = (2.0 / 3.0) * m * r2_mass;
  model.g = charge.mean_square_radius() / r2_mass;
  model.gtilde = model.g * q / (2.0 * m * units.c);
  return model;
}

void validate_particle_model(const ParticleModel& model,
                             const UnitSystem& units) {
  if (model.m <= 0.0) throw InvalidArgument("mass must be positive");
  if (model.inertia <= 0.0)
    throw InvalidArgument("moment of inertia must be positive");
  const double expected = model.g * model.q / (2.0 * model.m * units.c);
  const double scale = std::abs(expected) > 1.0 ? std::abs(expected) : 1.0;
  if (std::abs(model.gtilde - expected) > 1e-12 * scale)
    throw InvalidArgument(
        "gtilde inconsistent with g q / 2mc: " + std::to_string(model.gtilde) +
        " vs " + std::to_string(expected));
}

}  // namespace eulerspin
