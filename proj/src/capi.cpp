#include "eulerspin/eulerspin.h"

#include "core/classical.hpp"
#include "core/density.hpp"
#include "core/fields.hpp"
#include "core/kinematics.hpp"
#include "core/ring.hpp"
#include "core/spin_evolution.hpp"
#include "core/timeseries.hpp"
#include "core/types.hpp"
#include "core/units.hpp"
#include "core/verification.hpp"
#include "core/wigner.hpp"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

struct es_trajectory {
  eulerspin::TimeSeries series;
  std::string header_cache;
  std::string csv_cache;
};

struct es_report {
  eulerspin::VerificationReport report;
  std::string json_cache;
};

namespace {

thread_local std::string last_error;

void write_matrix(const eulerspin::Mat3& m, double out[9]) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[3 * r + c] = m(r, c);
}

void write_complex_matrix(const Eigen::MatrixXcd& m, double* out) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      *out++ = m(r, c).real();
      *out++ = m(r, c).imag();
    }
  }
}

es_status classify(const std::exception& e) {
  using namespace eulerspin;
  if (dynamic_cast<const SingularOrientation*>(&e))
    return ES_SINGULAR_ORIENTATION;
  if (dynamic_cast<const InvalidLabel*>(&e)) return ES_INVALID_LABEL;
  if (dynamic_cast<const ParityMixing*>(&e)) return ES_PARITY_MIXING;
  if (dynamic_cast<const QuadratureUnderresolved*>(&e))
    return ES_QUADRATURE_UNDERRESOLVED;
  if (dynamic_cast<const UnnormalizedProfile*>(&e))
    return ES_UNNORMALIZED_PROFILE;
  if (dynamic_cast<const StepSizeInvalid*>(&e)) return ES_STEP_SIZE_INVALID;
  if (dynamic_cast<const FieldProviderMissingGradient*>(&e))
    return ES_FIELD_GRADIENT_MISSING;
  if (dynamic_cast<const ConfigError*>(&e)) return ES_CONFIG_ERROR;
  if (dynamic_cast<const InvalidArgument*>(&e)) return ES_INVALID_ARGUMENT;
  return ES_INTERNAL_ERROR;
}

template <typename Fn>
es_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return ES_OK;
  } catch (const std::exception& e) {
    last_error = e.what();
    return classify(e);
  } catch (...) {
    last_error = "unknown error";
    return ES_INTERNAL_ERROR;
  }
}

es_status require(bool condition, const char* message) {
  if (condition) return ES_OK;
  last_error = message;
  return ES_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* es_last_error(void) { return last_error.c_str(); }

es_status es_rotation_matrix(double a1, double a2, double a3, double out[9]) {
  if (es_status s = require(out != nullptr, "out buffer is null"); s != ES_OK)
    return s;
  return guarded([&] {
    write_matrix(eulerspin::rotation_matrix({a1, a2, a3}), out);
  });
}

es_status es_metric(double a1, double a2, double a3, double inertia,
                    double mass, double covariant[9], double contravariant[9],
                    double* sqrt_det) {
  if (es_status s = require(covariant && contravariant && sqrt_det,
                            "output buffer is null");
      s != ES_OK)
    return s;
  return guarded([&] {
    const eulerspin::MetricResult g =
        eulerspin::metric({a1, a2, a3}, inertia, mass);
    write_matrix(g.covariant, covariant);
    write_matrix(g.contravariant, contravariant);
    *sqrt_det = g.sqrt_det;
  });
}

es_status es_cayley_klein_metric(double a1, double a2, double a3,
                                 double inertia, double mass, double out[9]) {
  if (es_status s = require(out != nullptr, "out buffer is null"); s != ES_OK)
    return s;
  return guarded([&] {
    write_matrix(eulerspin::cayley_klein_metric({a1, a2, a3}, inertia, mass),
                 out);
  });
}

es_status es_epsilon_identity_residual(double a1, double a2, double a3,
                                       double* out) {
  if (es_status s = require(out != nullptr, "out buffer is null"); s != ES_OK)
    return s;
  return guarded([&] {
    *out = eulerspin::epsilon_identity_residual({a1, a2, a3});
  });
}

es_status es_little_d(int two_s, int two_m, int two_mbar, double beta,
                      double* out) {
  if (es_status s = require(out != nullptr, "out buffer is null"); s != ES_OK)
    return s;
  return guarded([&] {
    eulerspin::validate_label({two_s, two_m, two_mbar}, two_s);
    *out = eulerspin::little_d(two_s, two_m, two_mbar, beta);
  });
}

es_status es_harmonic_value(int two_s, int two_m, int two_mbar, double a1,
                            double a2, double a3, double out[2]) {
  if (es_status s = require(out != nullptr, "out buffer is null"); s != ES_OK)
    return s;
  return guarded([&] {
    const eulerspin::AngleFunction u =
        eulerspin::wigner_harmonic({two_s, two_m, two_mbar}, two_s);
    const eulerspin::Complex value = u.value({a1, a2, a3});
    out[0] = value.real();
    out[1] = value.imag();
  });
}

es_status es_spin_matrices(int two_s, double hbar, double* sx, double* sy,
                           double* sz) {
  if (es_status s = require(sx && sy && sz, "output buffer is null");
      s != ES_OK)
    return s;
  return guarded([&] {
    const eulerspin::SpinMatrices mats = eulerspin::spin_matrices(two_s, hbar);
    write_complex_matrix(mats.sx, sx);
    write_complex_matrix(mats.sy, sy);
    write_complex_matrix(mats.sz, sz);
  });
}

es_status es_validate_superposition(const int* two_s, size_t count) {
  if (es_status s = require(two_s != nullptr || count == 0,
                            "label array is null");
      s != ES_OK)
    return s;
  return guarded([&] {
    std::vector<eulerspin::SpinLabel> labels;
    labels.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      const eulerspin::SpinLabel label{two_s[i], two_s[i], two_s[i]};
      eulerspin::validate_label(label, two_s[i]);
      labels.push_back(label);
    }
    eulerspin::validate_superposition(labels);
  });
}

es_status es_symmetric_top_spectrum(int two_s, double i1, double i3,
                                    double hbar, int* two_mbar_out,
                                    double* energy_out) {
  if (es_status s = require(two_mbar_out && energy_out,
                            "output buffer is null");
      s != ES_OK)
    return s;
  return guarded([&] {
    const auto levels =
        eulerspin::symmetric_top_spectrum(two_s, i1, i3, hbar);
    for (size_t i = 0; i < levels.size(); ++i) {
      two_mbar_out[i] = levels[i].first;
      energy_out[i] = levels[i].second;
    }
  });
}

es_status es_transition_energy(double mc2_mev, double a_fm, int two_s_from,
                               int two_s_to, double* out_mev) {
  if (es_status s = require(out_mev != nullptr, "out buffer is null");
      s != ES_OK)
    return s;
  return guarded([&] {
    *out_mev = eulerspin::rotator_transition_energy(mc2_mev, a_fm, two_s_from,
                                                    two_s_to);
  });
}

es_status es_ring_solution(double m_grams, double a_fm, double out[3]) {
  if (es_status s = require(out != nullptr, "out buffer is null"); s != ES_OK)
    return s;
  return guarded([&] {
    const eulerspin::UnitSystem cgs = eulerspin::UnitSystem::cgs();
    const eulerspin::RingModel model = eulerspin::RingModel::with_half_hbar(
        m_grams, eulerspin::fm_to_cm(a_fm), cgs);
    const eulerspin::RingSolution solution =
        eulerspin::ring_solution(model, cgs);
    out[0] = solution.lambda;
    out[1] = solution.beta;
    out[2] = solution.gamma;
  });
}

es_status es_moments(int charge_kind, int mass_kind, double radius, double m,
                     double q, double* inertia, double* g, double* gtilde) {
  if (es_status s = require(inertia && g && gtilde, "output buffer is null");
      s != ES_OK)
    return s;
  return guarded([&] {
    const auto profile = [&](int kind) {
      switch (kind) {
        case 0:
          return eulerspin::DensityProfile::uniform_ball(radius);
        case 1:
          return eulerspin::DensityProfile::thin_shell(radius);
        default:
          throw eulerspin::InvalidArgument("unknown profile kind " +
                                           std::to_string(kind));
      }
    };
    const eulerspin::ParticleModel model = eulerspin::moments_from_profiles(
        profile(charge_kind), profile(mass_kind), m, q);
    *inertia = model.inertia;
    *g = model.g;
    *gtilde = model.gtilde;
  });
}

es_status es_classical_run(const es_classical_config* config,
                           es_trajectory** out) {
  if (es_status s = require(config && out, "null argument"); s != ES_OK)
    return s;
  return guarded([&] {
    eulerspin::ParticleModel model;
    model.m = config->m;
    model.q = config->q;
    model.inertia = config->inertia;
    model.g = config->g;
    model.gtilde = config->gtilde;

    eulerspin::FieldConfig fields = [&] {
      switch (config->field_kind) {
        case 0:
          return eulerspin::FieldConfig::zero();
        case 1:
          return eulerspin::FieldConfig::uniform(
              eulerspin::Vec3(config->b0[0], config->b0[1], config->b0[2]),
              eulerspin::Vec3(config->e0[0], config->e0[1], config->e0[2]));
        case 2:
          return eulerspin::FieldConfig::linear(config->strength);
        default:
          throw eulerspin::ConfigError("unknown field kind " +
                                       std::to_string(config->field_kind));
      }
    }();

    eulerspin::ClassicalState state;
    state.x = eulerspin::Vec3(config->x0[0], config->x0[1], config->x0[2]);
    state.v = eulerspin::Vec3(config->v0[0], config->v0[1], config->v0[2]);
    state.omega = eulerspin::Vec3(config->w0[0], config->w0[1], config->w0[2]);

    auto* handle = new es_trajectory;
    try {
      handle->series = eulerspin::integrate(state, model, fields, config->dt,
                                            config->total_time);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

es_status es_spin_evolve(const es_spin_config* config, es_trajectory** out) {
  if (es_status s = require(config && out && config->amplitudes,
                            "null argument");
      s != ES_OK)
    return s;
  return guarded([&] {
    eulerspin::ParticleModel model;
    model.inertia = config->inertia;
    model.gtilde = config->gtilde;
    const eulerspin::Vec3 field(config->field[0], config->field[1],
                                config->field[2]);
    const eulerspin::SpinHamiltonian h = eulerspin::assemble_hamiltonian(
        config->two_s, model, field, config->extra_scalar, config->hbar);

    Eigen::VectorXcd amps(config->two_s + 1);
    for (int i = 0; i <= config->two_s; ++i)
      amps[i] = eulerspin::Complex(config->amplitudes[2 * i],
                                   config->amplitudes[2 * i + 1]);
    const eulerspin::SpinorState state(config->two_s, amps);

    auto* handle = new es_trajectory;
    try {
      handle->series =
          eulerspin::evolve(state, h, config->dt, config->total_time);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

size_t es_trajectory_rows(const es_trajectory* trajectory) {
  return trajectory ? trajectory->series.rows.size() : 0;
}

size_t es_trajectory_columns(const es_trajectory* trajectory) {
  return trajectory ? trajectory->series.columns.size() : 0;
}

const char* es_trajectory_header(es_trajectory* trajectory) {
  if (!trajectory) return "";
  trajectory->header_cache = trajectory->series.header();
  return trajectory->header_cache.c_str();
}

double es_trajectory_cell(const es_trajectory* trajectory, size_t row,
                          size_t column) {
  if (!trajectory || row >= trajectory->series.rows.size() ||
      column >= trajectory->series.rows[row].size())
    return 0.0;
  return trajectory->series.rows[row][column];
}

const char* es_trajectory_csv(es_trajectory* trajectory) {
  if (!trajectory) return "";
  if (trajectory->csv_cache.empty())
    trajectory->csv_cache = trajectory->series.csv();
  return trajectory->csv_cache.c_str();
}

void es_trajectory_free(es_trajectory* trajectory) { delete trajectory; }

es_status es_verify_run(uint64_t seed, double tolerance_override,
                        es_report** out) {
  if (es_status s = require(out != nullptr, "out pointer is null");
      s != ES_OK)
    return s;
  return guarded([&] {
    auto* handle = new es_report;
    try {
      handle->report = eulerspin::run_verification(seed, tolerance_override);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

int es_report_passed(const es_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

size_t es_report_count(const es_report* report) {
  return report ? report->report.checks.size() : 0;
}

const char* es_report_json(es_report* report) {
  if (!report) return "";
  if (report->json_cache.empty())
    report->json_cache = report->report.to_json();
  return report->json_cache.c_str();
}

const char* es_report_check_name(const es_report* report, size_t index) {
  if (!report || index >= report->report.checks.size()) return "";
  return report->report.checks[index].name.c_str();
}

double es_report_check_residual(const es_report* report, size_t index) {
  if (!report || index >= report->report.checks.size()) return 0.0;
  return report->report.checks[index].residual;
}

void es_report_free(es_report* report) { delete report; }

}  // extern "C"
