#ifndef EULERSPIN_CORE_RING_HPP
#define EULERSPIN_CORE_RING_HPP

#include "core/types.hpp"
#include "core/units.hpp"

namespace eulerspin {

// Spinning charged ring: mass m, radius a, and the angular momentum the
// tangential motion must supply.
struct RingModel {
  double m;
  double a;
  double spin_target;

  RingModel(double mass, double radius, double spin);
  static RingModel with_half_hbar(double mass, double radius,
                                  const UnitSystem& units);
};

struct RingSolution {
  double lambda;  // spin_target / (m a c)
  double beta;    // lambda / sqrt(1 + lambda^2), always below one
  double gamma;   // sqrt(1 + lambda^2), so beta gamma = lambda
};

// Relativistic tangential speed: solves gamma m a^2 (beta c / a) =
// spin_target exactly through the closed form beta = Lambda / sqrt(1 + L^2).
RingSolution ring_solution(const RingModel& model,
                           const UnitSystem& units = UnitSystem::cgs());

// The naive nonrelativistic estimate beta = Lambda, which exceeds one for
// light particles; that overflow is the model's point.
double nonrelativistic_beta(const RingModel& model,
                            const UnitSystem& units = UnitSystem::cgs());

}  // namespace eulerspin

#endif
