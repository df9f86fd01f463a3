#ifndef EULERSPIN_CORE_RNG_HPP
#define EULERSPIN_CORE_RNG_HPP

#include "core/types.hpp"

#include <cstdint>
#include <random>

namespace eulerspin {

// Deterministic uniform generator. The double mapping is done by hand rather
// than through std::uniform_real_distribution so that a seed pins the exact
// byte stream regardless of standard-library internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double unit() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Orientation with the middle angle kept a margin away from the chart
  // singularities at 0 and pi.
  EulerAngles angles(double margin = 0.05) {
    EulerAngles ang;
    ang.a1 = uniform(0.0, 2.0 * kPi);
    ang.a2 = uniform(margin, kPi - margin);
    ang.a3 = uniform(0.0, 2.0 * kPi);
    return ang;
  }

  Complex unit_complex() {
    const double phase = uniform(0.0, 2.0 * kPi);
    return Complex(std::cos(phase), std::sin(phase));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace eulerspin

#endif
