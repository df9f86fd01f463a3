#ifndef EULERSPIN_CORE_DENSITY_HPP
#define EULERSPIN_CORE_DENSITY_HPP

#include "core/types.hpp"
#include "core/units.hpp"

#include <functional>

namespace eulerspin {

// Normalized spherical density on [0, radius]: 4 pi int r^2 f(r) dr = 1.
// The constructor rescales whatever is supplied; a profile whose raw norm is
// nonpositive or non-finite cannot be rescaled and is rejected.
class DensityProfile {
 public:
  static DensityProfile uniform_ball(double radius);
  static DensityProfile thin_shell(double radius);
  static DensityProfile from_function(std::function<double(double)> f,
                                      double radius);

  double radius() const { return radius_; }

  // <r^2> = 4 pi int r^4 f(r) dr; closed form for the built-in shapes,
  // adaptive quadrature (relative error < 1e-10) otherwise.
  double mean_square_radius() const;

  // 4 pi int r^2 f dr after rescaling; 1 up to quadrature error.
  double norm() const;

 private:
  enum class Kind { uniform, shell, tabulated };

  DensityProfile(Kind kind, double radius) : kind_(kind), radius_(radius) {}

  Kind kind_;
  double radius_;
  std::function<double(double)> f_;
  double scale_ = 1.0;
};

// Spherically symmetric particle with charge and mass distributions:
// moment of inertia, shape factor g, and magnetogyric ratio gtilde.
struct ParticleModel {
  double m = 1.0;
  double q = 1.0;
  double inertia = 1.0;
  double g = 1.0;
  double gtilde = 0.5;
};

// I = (2/3) m <r^2>_mass, g = <r^2>_charge / <r^2>_mass,
// gtilde = g q / (2 m c).
ParticleModel moments_from_profiles(const DensityProfile& charge,
                                    const DensityProfile& mass, double m,
                                    double q,
                                    const UnitSystem& units = UnitSystem::natural());

// gtilde consistent with g q / 2mc within 1e-12 relative, positive m and I.
void validate_particle_model(const ParticleModel& model,
                             const UnitSystem& units = UnitSystem::natural());

}  // namespace eulerspin

#endif
