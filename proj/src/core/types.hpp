#ifndef EULERSPIN_CORE_TYPES_HPP
#define EULERSPIN_CORE_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace eulerspin {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Orientation coordinates in the z-y-z convention: a rotation by a1 about the
// space-fixed 3-axis, then a2 about the intermediate 2-axis, then a3 about the
// body-fixed 3-axis. Values are stored unreduced so that half-integer waves
// exp(i*m*a1) keep their sheet; reduced() maps into principal ranges when a
// caller wants a canonical representative.
struct EulerAngles {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double operator[](int b) const {
    switch (b) {
      case 0: return a1;
      case 1: return a2;
      default: return a3;
    }
  }

  EulerAngles reduced() const;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orientation lies on the coordinate singularity sin(a2) = 0 where the
// kinematic matrices lose rank and the chart breaks down.
struct SingularOrientation : Error {
  using Error::Error;
};

// Spin label outside the representable set (|m| <= s, matching parity, s cap).
struct InvalidLabel : Error {
  using Error::Error;
};

// Superposition across the integer / half-odd-integer sectors. The offending
// pair of two_s values is kept for reporting.
struct ParityMixing : Error {
  int two_s_a;
  int two_s_b;
  ParityMixing(int a, int b)
      : Error("superposition mixes integer and half-integer spin: two_s=" +
              std::to_string(a) + " with two_s=" + std::to_string(b)),
        two_s_a(a),
        two_s_b(b) {}
};

// Integrand band limit exceeds what the configured grid can resolve.
struct QuadratureUnderresolved : Error {
  using Error::Error;
};

// Radial profile does not integrate to one.
struct UnnormalizedProfile : Error {
  using Error::Error;
};

// Nonpositive or otherwise unusable step size / horizon.
struct StepSizeInvalid : Error {
  using Error::Error;
};

// User-supplied field class used in a context that needs the field gradient,
// but no gradient callback was provided.
struct FieldProviderMissingGradient : Error {
  using Error::Error;
};

// Bad run configuration (unknown key, missing key, out-of-range value).
struct ConfigError : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

inline double wrap_2pi(double x) {
  const double two_pi = 2.0 * kPi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

inline EulerAngles EulerAngles::reduced() const {
  return EulerAngles{wrap_2pi(a1), wrap_2pi(a2), wrap_2pi(a3)};
}

}  // namespace eulerspin

#endif
