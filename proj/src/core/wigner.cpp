#include "core/wigner.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace eulerspin {

namespace {

double factorial(int n) {
  assert(n >= 0);
  static const std::vector<double> table = [] {
    std::vector<double> t(33);
    t[0] = 1.0;
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] * double(k);
    return t;
  }();
  assert(static_cast<std::size_t>(n) < table.size());
  return table[static_cast<std::size_t>(n)];
}

struct DTerm {
  double coeff;
  int cos_pow;
  int sin_pow;
};

// Expansion of d^s_{m,mbar}(beta) in powers of cos(beta/2), sin(beta/2),
// summed over the standard factorial range with alternating sign.
std::vector<DTerm> little_d_terms(int two_s, int two_m, int two_mbar) {
  const int sp_m = (two_s + two_m) / 2;     // s + m
  const int sm_m = (two_s - two_m) / 2;     // s - m
  const int sp_mb = (two_s + two_mbar) / 2; // s + mbar
  const int sm_mb = (two_s - two_mbar) / 2; // s - mbar
  const int dm = (two_m - two_mbar) / 2;    // m - mbar

  const double prefactor = std::sqrt(factorial(sp_m) * factorial(sm_m) *
                                     factorial(sp_mb) * factorial(sm_mb));
  const int k_lo = dm < 0 ? -dm : 0;
  const int k_hi = sp_mb < sm_m ? sp_mb : sm_m;

  std::vector<DTerm> terms;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double denom = factorial(sp_mb - k) * factorial(k) *
                         factorial(dm + k) * factorial(sm_m - k);
    const double sign = ((dm + k) % 2 == 0) ? 1.0 : -1.0;
    terms.push_back({sign * prefactor / denom,
                     two_s - dm - 2 * k,   // 2s + mbar - m - 2k
                     dm + 2 * k});         // m - mbar + 2k
  }
  return terms;
}

void require_half_integer_pair(int two_s, int two_m, const char* what) {
  if ((two_s - two_m) % 2 != 0) {
    std::ostringstream msg;
    msg << what << " parity mismatch: two_s=" << two_s << " two_m=" << two_m;
    throw InvalidLabel(msg.str());
  }
}

}  // namespace

void validate_label(const SpinLabel& label, int max_two_s) {
  if (label.two_s < 0)
    throw InvalidLabel("negative spin: two_s=" + std::to_string(label.two_s));
  if (label.two_s > max_two_s)
    throw InvalidLabel("two_s=" + std::to_string(label.two_s) +
                       " exceeds max_two_s=" + std::to_string(max_two_s));
  require_half_integer_pair(label.two_s, label.two_m, "space projection");
  require_half_integer_pair(label.two_s, label.two_mbar, "body projection");
  if (std::abs(label.two_m) > label.two_s)
    throw InvalidLabel("|m| > s: two_m=" + std::to_string(label.two_m) +
                       " two_s=" + std::to_string(label.two_s));
  if (std::abs(label.two_mbar) > label.two_s)
    throw InvalidLabel("|mbar| > s: two_mbar=" + std::to_string(label.two_mbar) +
                       " two_s=" + std::to_string(label.two_s));
}

double little_d(int two_s, int two_m, int two_mbar, double beta) {
  require_half_integer_pair(two_s, two_m, "space projection");
  require_half_integer_pair(two_s, two_mbar, "body projection");
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  double sum = 0.0;
  for (const DTerm& t : little_d_terms(two_s, two_m, two_mbar))
    sum += t.coeff * std::pow(c, t.cos_pow) * std::pow(s, t.sin_pow);
  return sum;
}

AngleFunction wigner_harmonic(const SpinLabel& label, int max_two_s) {
  validate_label(label, max_two_s);
  const double norm = std::sqrt((label.two_s + 1) / (8.0 * kPi * kPi));
  const auto terms = little_d_terms(label.two_s, label.two_m, label.two_mbar);
  const double m = 0.5 * label.two_m;
  const double mbar = 0.5 * label.two_mbar;

  auto eval = [norm, terms, m, mbar](const EulerAngles& ang, int order) {
    const Complex phase_v = std::exp(Complex(0.0, m * ang.a1 + mbar * ang.a3));
    const Complex im(0.0, m);
    const Complex imb(0.0, mbar);
    Jet phase;
    phase.order = order;
    phase.f = phase_v;
    if (order >= 1) {
      phase.g[0] = im * phase_v;
      phase.g[2] = imb * phase_v;
    }
    if (order >= 2) {
      phase.h[Jet::pack(0, 0)] = im * im * phase_v;
      phase.h[Jet::pack(2, 2)] = imb * imb * phase_v;
      phase.h[Jet::pack(0, 2)] = im * imb * phase_v;
    }

    const Jet half = 0.5 * jet_coordinate(ang, 1, order);
    const Jet c = cos(half);
    const Jet s = sin(half);
    Jet d = jet_constant(Complex(0.0, 0.0), order);
    for (const DTerm& t : terms)
      d = d + t.coeff * (pow_int(c, t.cos_pow) * pow_int(s, t.sin_pow));
    return norm * (phase * d);
  };

  const int ap = std::abs(label.two_m);
  const int aq = std::abs(label.two_mbar);
  return AngleFunction::from_evaluator(
      std::move(eval), BandLimit{(ap + 1) / 2, (aq + 1) / 2, true});
}

SpinMatrices spin_matrices(int two_s, double hbar) {
  if (two_s < 0)
    throw InvalidLabel("negative spin: two_s=" + std::to_string(two_s));
  const int n = two_s + 1;
  SpinMatrices out;
  out.sz = Eigen::MatrixXcd::Zero(n, n);
  out.plus = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r)
    out.sz(r, r) = hbar * 0.5 * (two_s - 2 * r);
  // Raising connects row r (projection s - r) to row r - 1; the ladder
  // coefficient hbar sqrt((s - m)(s + m + 1)) becomes sqrt(r (2s - r + 1)).
  for (int r = 1; r < n; ++r)
    out.plus(r - 1, r) = hbar * std::sqrt(double(r) * double(two_s - r + 1));
  out.minus = out.plus.adjoint();
  out.sx = 0.5 * (out.plus + out.minus);
  out.sy = Complex(0.0, -0.5) * (out.plus - out.minus);
  return out;
}

void validate_superposition(std::span<const SpinLabel> labels) {
  if (labels.empty()) return;
  const int parity = labels[0].two_s % 2;
  for (const SpinLabel& label : labels)
    if (label.two_s % 2 != parity)
      throw ParityMixing(labels[0].two_s, label.two_s);
}

BasisExpansion::BasisExpansion(std::vector<SpinLabel> labels,
                               std::vector<Complex> coeffs, bool as_state,
                               int max_two_s)
    : labels_(std::move(labels)),
      coeffs_(std::move(coeffs)),
      max_two_s_(max_two_s) {
  if (labels_.size() != coeffs_.size())
    throw InvalidArgument("label/coefficient count mismatch");
  if (labels_.empty()) throw InvalidArgument("empty expansion");
  for (const SpinLabel& label : labels_) validate_label(label, max_two_s_);
  validate_superposition(labels_);
  if (as_state) {
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > 1e-12)
      throw InvalidArgument("state coefficients not unit-norm: |c|^2 = " +
                            std::to_string(n2));
  }
}

double BasisExpansion::norm_squared() const {
  double n2 = 0.0;
  for (const Complex& c : coeffs_) n2 += std::norm(c);
  return n2;
}

AngleFunction BasisExpansion::to_function() const {
  AngleFunction out = coeffs_[0] * wigner_harmonic(labels_[0], max_two_s_);
  for (std::size_t k = 1; k < labels_.size(); ++k)
    out = out + coeffs_[k] * wigner_harmonic(labels_[k], max_two_s_);
  return out;
}

}  // namespace eulerspin
