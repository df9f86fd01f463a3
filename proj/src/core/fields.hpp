#ifndef EULERSPIN_CORE_FIELDS_HPP
#define EULERSPIN_CORE_FIELDS_HPP

#include "core/types.hpp"

#include <functional>
#include <optional>

namespace eulerspin {

enum class FieldClass { uniform_static, linear_static, user_supplied };

// Electromagnetic field providers. The built-in static classes carry their
// potentials and gradients analytically (divergence- and curl-free by
// construction); user-supplied fields must hand over the gradient explicitly
// when a consumer needs it.
class FieldConfig {
 public:
  using ScalarProvider = std::function<double(const Vec3&, double)>;
  using VectorProvider = std::function<Vec3(const Vec3&, double)>;
  using MatrixProvider = std::function<Mat3(const Vec3&, double)>;

  // A = B0 x x / 2, phi = -E0 . x.
  static FieldConfig uniform(const Vec3& b0, const Vec3& e0 = Vec3::Zero());

  // B = strength (x, -y, 0), A = (0, 0, strength x y), E = 0.
  static FieldConfig linear(double strength);

  static FieldConfig zero() { return uniform(Vec3::Zero()); }

  static FieldConfig user(ScalarProvider phi, VectorProvider a,
                          VectorProvider b, VectorProvider e,
                          std::optional<MatrixProvider> grad_b = std::nullopt);

  FieldClass kind() const { return kind_; }
  bool static_fields() const { return kind_ != FieldClass::user_supplied; }
  bool has_gradient() const { return grad_b_.has_value(); }

  double phi(const Vec3& x, double t) const { return phi_(x, t); }
  Vec3 vector_potential(const Vec3& x, double t) const { return a_(x, t); }
  Vec3 magnetic(const Vec3& x, double t) const { return b_(x, t); }
  Vec3 electric(const Vec3& x, double t) const { return e_(x, t); }

  // Entry (i, j) holds d B_j / d x_i; throws when no provider exists.
  Mat3 gradient(const Vec3& x, double t) const;

 private:
  FieldConfig(FieldClass kind) : kind_(kind) {}

  FieldClass kind_;
  ScalarProvider phi_;
  VectorProvider a_, b_, e_;
  std::optional<MatrixProvider> grad_b_;
};

}  // namespace eulerspin

#endif
