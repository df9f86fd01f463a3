#include "core/fields.hpp"

namespace eulerspin {

FieldConfig FieldConfig::uniform(const Vec3& b0, const Vec3& e0) {
  FieldConfig out(FieldClass::uniform_static);
  out.phi_ = [e0](const Vec3& x, double) { return -e0.dot(x); };
  out.a_ = [b0](const Vec3& x, double) -> Vec3 { return 0.5 * b0.cross(x); };
  out.b_ = [b0](const Vec3&, double) { return b0; };
  out.e_ = [e0](const Vec3&, double) { return e0; };
  out.grad_b_ = [](const Vec3&, double) -> Mat3 { return Mat3::Zero(); };
  return out;
}

FieldConfig FieldConfig::linear(double strength) {
  FieldConfig out(FieldClass::linear_static);
  out.phi_ = [](const Vec3&, double) { return 0.0; };
  out.a_ = [strength](const Vec3& x, double) -> Vec3 {
    return Vec3(0.0, 0.0, strength * x[0] * x[1]);
  };
  out.b_ = [strength](const Vec3& x, double) -> Vec3 {
    return Vec3(strength * x[0], -strength * x[1], 0.0);
  };
  out.e_ = [](const Vec3&, double) { return Vec3::Zero(); };
  out.grad_b_ = [strength](const Vec3&, double) -> Mat3 {
    Mat3 grad = Mat3::Zero();
    grad(0, 0) = strength;
    grad(1, 1) = -strength;
    return grad;
  };
  return out;
}

FieldConfig FieldConfig::user(ScalarProvider phi, VectorProvider a,
                              VectorProvider b, VectorProvider e,
                              std::optional<MatrixProvider> grad_b) {
  FieldConfig out(FieldClass::user_supplied);
  out.phi_ = std::move(phi);
  out.a_ = std::move(a);
  out.b_ = std::move(b);
  out.e_ = std::move(e);
  out.grad_b_ = std::move(grad_b);
  return out;
}

Mat3 FieldConfig::gradient(const Vec3& x, double t) const {
  if (!grad_b_)
    throw FieldProviderMissingGradient(
        "field gradient requested but no provider was supplied");
  return (*grad_b_)(x, t);
}

}  // namespace eulerspin
