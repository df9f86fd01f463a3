#include "core/ring.hpp"

#include <cmath>

namespace eulerspin {

RingModel::RingModel(double mass, double radius, double spin)
    : m(mass), a(radius), spin_target(spin) {
  if (m <= 0.0) throw InvalidArgument("ring mass must be positive");
  if (a <= 0.0) throw InvalidArgument("ring radius must be positive");
  if (spin_target <= 0.0)
    throw InvalidArgument("ring spin target must be positive");
}

RingModel RingModel::with_half_hbar(double mass, double radius,
                                    const UnitSystem& units) {
  return RingModel(mass, radius, 0.5 * units.hbar);
}

RingSolution ring_solution(const RingModel& model, const UnitSystem& units) {
  const double lambda = model.spin_target / (model.m * model.a * units.c);
  RingSolution out;
  out.lambda = lambda;
  out.gamma = std::sqrt(1.0 + lambda * lambda);
  out.beta = lambda / out.gamma;
  return out;
}

double nonrelativistic_beta(const RingModel& model, const UnitSystem& units) {
  return model.spin_target / (model.m * model.a * units.c);
}

}  // namespace eulerspin
