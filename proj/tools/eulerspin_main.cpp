// Command-line front end. All physics goes through the shared library's C
// interface; this file parses flags plus an optional JSON config file (flags
// win), dispatches, and writes CSV or JSON artifacts.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "eulerspin/eulerspin.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

const char* const kCommands[] = {"verify",   "classical", "spin-evolve",
                                 "spectrum", "ring",      "g-factor"};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_status(es_status status) {
  if (status == ES_OK) return;
  const char* message = es_last_error();
  throw RuntimeFailure(message && *message ? message : "library call failed");
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.16e", value);
  return buffer;
}

double positive(double value, const char* name) {
  if (!(value > 0.0))
    throw ConfigError(std::string(name) + " must be positive");
  return value;
}

bool flag_given(const CLI::Option* option) {
  return option != nullptr && option->count() > 0;
}

Json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Json parsed;
  try {
    in >> parsed;
  } catch (const Json::parse_error& error) {
    throw ConfigError("config file '" + path + "': " + error.what());
  }
  if (!parsed.is_object())
    throw ConfigError("config file '" + path +
                      "': top level must be an object");
  return parsed;
}

// Merged view of one command's parameters: a flag beats the config file,
// the file beats the built-in default. Every key the command understands is
// looked up exactly once, so reject_unknown() can flag strays afterwards.
class Settings {
 public:
  Settings(const Json& file, std::string command)
      : file_(file), command_(std::move(command)) {
    recognized_.insert("command");
  }

  bool has(const char* key) { return find(key) != nullptr; }

  double number(const char* key, const CLI::Option* flag, double flag_value,
                std::optional<double> fallback) {
    const Json* value = find(key);
    if (flag_given(flag)) return flag_value;
    if (value) {
      if (!value->is_number())
        throw ConfigError(key_path(key) + ": expected a number");
      return value->get<double>();
    }
    return required_value(key, fallback);
  }

  int integer(const char* key, const CLI::Option* flag, int flag_value,
              std::optional<int> fallback) {
    const Json* value = find(key);
    if (flag_given(flag)) return flag_value;
    if (value) {
      if (!value->is_number_integer() && !value->is_number_unsigned())
        throw ConfigError(key_path(key) + ": expected an integer");
      return value->get<int>();
    }
    return required_value(key, fallback);
  }

  std::uint64_t seed(const char* key, const CLI::Option* flag,
                     std::uint64_t flag_value, std::uint64_t fallback) {
    const Json* value = find(key);
    if (flag_given(flag)) return flag_value;
    if (value) {
      if (value->is_number_unsigned()) return value->get<std::uint64_t>();
      if (value->is_number_integer() && value->get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(value->get<std::int64_t>());
      throw ConfigError(key_path(key) + ": expected a nonnegative integer");
    }
    return fallback;
  }

  std::string text(const char* key, const CLI::Option* flag,
                   const std::string& flag_value,
                   std::optional<std::string> fallback) {
    const Json* value = find(key);
    if (flag_given(flag)) return flag_value;
    if (value) {
      if (!value->is_string())
        throw ConfigError(key_path(key) + ": expected a string");
      return value->get<std::string>();
    }
    return required_value(key, std::move(fallback));
  }

  std::array<double, 3> vec3(const char* key, const CLI::Option* flag,
                             const std::vector<double>& flag_value,
                             std::array<double, 3> fallback) {
    const Json* value = find(key);
    if (flag_given(flag)) return {flag_value[0], flag_value[1], flag_value[2]};
    if (value) {
      if (!value->is_array() || value->size() != 3)
        throw ConfigError(key_path(key) +
                          ": expected an array of three numbers");
      std::array<double, 3> out{};
      for (std::size_t i = 0; i < 3; ++i) {
        const Json& item = (*value)[i];
        if (!item.is_number())
          throw ConfigError(key_path(key) +
                            ": expected an array of three numbers");
        out[i] = item.get<double>();
      }
      return out;
    }
    return fallback;
  }

  // Empty result means the key was absent everywhere.
  std::vector<double> number_list(const char* key, const CLI::Option* flag,
                                  const std::vector<double>& flag_value) {
    const Json* value = find(key);
    if (flag_given(flag)) return flag_value;
    if (value) {
      if (!value->is_array())
        throw ConfigError(key_path(key) + ": expected an array of numbers");
      std::vector<double> out;
      out.reserve(value->size());
      for (const Json& item : *value) {
        if (!item.is_number())
          throw ConfigError(key_path(key) + ": expected an array of numbers");
        out.push_back(item.get<double>());
      }
      return out;
    }
    return {};
  }

  void reject_unknown() const {
    for (const auto& item : file_.items())
      if (recognized_.find(item.key()) == recognized_.end())
        throw ConfigError("unknown key '" + item.key() + "' for command '" +
                          command_ + "'");
  }

 private:
  const Json* find(const char* key) {
    recognized_.insert(key);
    auto it = file_.find(key);
    return it == file_.end() ? nullptr : &*it;
  }

  std::string key_path(const char* key) const {
    return command_ + "." + key;
  }

  template <class T>
  T required_value(const char* key, std::optional<T> fallback) const {
    if (fallback) return std::move(*fallback);
    throw ConfigError(command_ + ": missing required key '" +
                      std::string(key) + "'");
  }

  const Json& file_;
  std::string command_;
  std::set<std::string> recognized_;
};

void write_text(const std::string& target, const std::string& text) {
  if (target.empty() || target == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + target + "'");
  out << text;
}

int field_kind_from(const std::string& name) {
  if (name == "zero") return 0;
  if (name == "uniform") return 1;
  if (name == "linear") return 2;
  throw ConfigError("field must be one of zero, uniform, linear");
}

int profile_kind_from(const std::string& name, const char* key) {
  if (name == "ball") return 0;
  if (name == "shell") return 1;
  throw ConfigError(std::string(key) + " must be ball or shell");
}

struct TrajectoryHandle {
  es_trajectory* ptr = nullptr;
  ~TrajectoryHandle() { es_trajectory_free(ptr); }
};

struct ReportHandle {
  es_report* ptr = nullptr;
  ~ReportHandle() { es_report_free(ptr); }
};

struct VerifyFlags {
  std::uint64_t seed = 1234;
  double tol = 0.0;
  std::string output = "-";
  CLI::Option* seed_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* output_opt = nullptr;
};

struct ClassicalFlags {
  double m = 1.0, q = 1.0, inertia = 1.0, g = 1.0, gtilde = 1.0;
  std::string field = "zero";
  std::vector<double> b0, e0, x0, v0, w0;
  double strength = 1.0;
  double dt = 0.01, total_time = 1.0;
  std::string output = "-";
  CLI::Option* m_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* inertia_opt = nullptr;
  CLI::Option* g_opt = nullptr;
  CLI::Option* gtilde_opt = nullptr;
  CLI::Option* field_opt = nullptr;
  CLI::Option* b0_opt = nullptr;
  CLI::Option* e0_opt = nullptr;
  CLI::Option* x0_opt = nullptr;
  CLI::Option* v0_opt = nullptr;
  CLI::Option* w0_opt = nullptr;
  CLI::Option* strength_opt = nullptr;
  CLI::Option* dt_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* output_opt = nullptr;
};

struct SpinFlags {
  int two_s = 1;
  std::vector<double> amplitudes;
  double gtilde = 1.0, inertia = 1.0, hbar = 1.0;
  std::vector<double> field;
  double extra_scalar = 0.0;
  double dt = 0.01, total_time = 1.0;
  std::string output = "-";
  CLI::Option* two_s_opt = nullptr;
  CLI::Option* amplitudes_opt = nullptr;
  CLI::Option* gtilde_opt = nullptr;
  CLI::Option* inertia_opt = nullptr;
  CLI::Option* hbar_opt = nullptr;
  CLI::Option* field_opt = nullptr;
  CLI::Option* extra_scalar_opt = nullptr;
  CLI::Option* dt_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* output_opt = nullptr;
};

struct SpectrumFlags {
  int two_s = 0;
  double i1 = 1.0, i3 = 1.0, hbar = 1.0;
  std::string output = "-";
  CLI::Option* two_s_opt = nullptr;
  CLI::Option* i1_opt = nullptr;
  CLI::Option* i3_opt = nullptr;
  CLI::Option* hbar_opt = nullptr;
  CLI::Option* output_opt = nullptr;
};

struct RingFlags {
  double m_grams = 0.0, a_fm = 0.0;
  CLI::Option* m_opt = nullptr;
  CLI::Option* a_opt = nullptr;
};

struct GFactorFlags {
  std::string charge_profile = "ball", mass_profile = "ball";
  double radius = 1.0, m = 1.0, q = 1.0;
  CLI::Option* charge_opt = nullptr;
  CLI::Option* mass_opt = nullptr;
  CLI::Option* radius_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* q_opt = nullptr;
};

int run_verify(Settings& settings, const VerifyFlags& flags) {
  const std::uint64_t seed =
      settings.seed("seed", flags.seed_opt, flags.seed, 1234);
  const bool tol_set = flag_given(flags.tol_opt) || settings.has("tol");
  const double tol = settings.number("tol", flags.tol_opt, flags.tol, 0.0);
  if (tol_set && !(tol > 0.0)) throw ConfigError("tol must be positive");
  const std::string output =
      settings.text("output", flags.output_opt, flags.output, "-");
  settings.reject_unknown();

  ReportHandle report;
  check_status(es_verify_run(seed, tol_set ? tol : 0.0, &report.ptr));
  const std::string json = es_report_json(report.ptr);
  write_text(output, json + "\n");

  const std::size_t count = es_report_count(report.ptr);
  if (es_report_passed(report.ptr)) {
    std::fprintf(stderr, "verify: %zu checks passed\n", count);
    return kExitOk;
  }
  std::size_t failed = 0;
  const Json parsed = Json::parse(json);
  for (const Json& check : parsed.at("checks")) {
    if (check.at("passed").get<bool>()) continue;
    ++failed;
    std::fprintf(stderr, "verify: FAILED %s (residual %s, tolerance %s)\n",
                 check.at("name").get<std::string>().c_str(),
                 format_double(check.at("residual").get<double>()).c_str(),
                 format_double(check.at("tolerance").get<double>()).c_str());
  }
  std::fprintf(stderr, "verify: %zu of %zu checks failed\n", failed, count);
  return kExitCheckFailure;
}

int run_classical(Settings& settings, const ClassicalFlags& flags) {
  es_classical_config config{};
  config.m = positive(settings.number("m", flags.m_opt, flags.m, 1.0), "m");
  config.q = settings.number("q", flags.q_opt, flags.q, 1.0);
  config.inertia = positive(
      settings.number("inertia", flags.inertia_opt, flags.inertia, 1.0),
      "inertia");
  config.g = settings.number("g", flags.g_opt, flags.g, 1.0);
  config.gtilde =
      settings.number("gtilde", flags.gtilde_opt, flags.gtilde, 1.0);
  config.field_kind = field_kind_from(
      settings.text("field", flags.field_opt, flags.field, "zero"));
  const auto b0 = settings.vec3("b0", flags.b0_opt, flags.b0, {0.0, 0.0, 0.0});
  const auto e0 = settings.vec3("e0", flags.e0_opt, flags.e0, {0.0, 0.0, 0.0});
  const auto x0 = settings.vec3("x0", flags.x0_opt, flags.x0, {0.0, 0.0, 0.0});
  const auto v0 = settings.vec3("v0", flags.v0_opt, flags.v0, {0.0, 0.0, 0.0});
  const auto w0 = settings.vec3("w0", flags.w0_opt, flags.w0, {0.0, 0.0, 0.0});
  for (std::size_t i = 0; i < 3; ++i) {
    config.b0[i] = b0[i];
    config.e0[i] = e0[i];
    config.x0[i] = x0[i];
    config.v0[i] = v0[i];
    config.w0[i] = w0[i];
  }
  config.strength =
      settings.number("strength", flags.strength_opt, flags.strength, 1.0);
  config.dt =
      positive(settings.number("dt", flags.dt_opt, flags.dt, 0.01), "dt");
  config.total_time = positive(
      settings.number("T", flags.t_opt, flags.total_time, 1.0), "T");
  const std::string output =
      settings.text("output", flags.output_opt, flags.output, "-");
  settings.reject_unknown();

  TrajectoryHandle run;
  check_status(es_classical_run(&config, &run.ptr));
  write_text(output, es_trajectory_csv(run.ptr));
  return kExitOk;
}

int run_spin_evolve(Settings& settings, const SpinFlags& flags) {
  const int two_s =
      settings.integer("two_s", flags.two_s_opt, flags.two_s, 1);
  if (two_s < 0) throw ConfigError("two_s must be a nonnegative integer");
  const std::size_t levels = static_cast<std::size_t>(two_s) + 1;

  std::vector<double> amplitudes = settings.number_list(
      "amplitudes", flags.amplitudes_opt, flags.amplitudes);
  if (amplitudes.empty()) {
    amplitudes.assign(2 * levels, 0.0);
    amplitudes[0] = 1.0;
  }
  if (amplitudes.size() != 2 * levels)
    throw ConfigError("amplitudes must hold " + std::to_string(levels) +
                      " re,im pairs for two_s = " + std::to_string(two_s));
  double norm_squared = 0.0;
  for (double a : amplitudes) norm_squared += a * a;
  if (!(norm_squared > 0.0))
    throw ConfigError("amplitudes must not all vanish");
  const double scale = 1.0 / std::sqrt(norm_squared);
  for (double& a : amplitudes) a *= scale;

  es_spin_config config{};
  config.two_s = two_s;
  config.amplitudes = amplitudes.data();
  config.gtilde =
      settings.number("gtilde", flags.gtilde_opt, flags.gtilde, 1.0);
  config.inertia = positive(
      settings.number("inertia", flags.inertia_opt, flags.inertia, 1.0),
      "inertia");
  config.hbar = positive(
      settings.number("hbar", flags.hbar_opt, flags.hbar, 1.0), "hbar");
  const auto field =
      settings.vec3("B", flags.field_opt, flags.field, {0.0, 0.0, 0.0});
  for (std::size_t i = 0; i < 3; ++i) config.field[i] = field[i];
  config.extra_scalar = settings.number(
      "extra_scalar", flags.extra_scalar_opt, flags.extra_scalar, 0.0);
  config.dt =
      positive(settings.number("dt", flags.dt_opt, flags.dt, 0.01), "dt");
  config.total_time = positive(
      settings.number("T", flags.t_opt, flags.total_time, 1.0), "T");
  const std::string output =
      settings.text("output", flags.output_opt, flags.output, "-");
  settings.reject_unknown();

  TrajectoryHandle run;
  check_status(es_spin_evolve(&config, &run.ptr));
  write_text(output, es_trajectory_csv(run.ptr));
  return kExitOk;
}

int run_spectrum(Settings& settings, const SpectrumFlags& flags) {
  const int two_s =
      settings.integer("two_s", flags.two_s_opt, flags.two_s, std::nullopt);
  if (two_s < 0) throw ConfigError("two_s must be a nonnegative integer");
  const double i1 =
      positive(settings.number("I1", flags.i1_opt, flags.i1, 1.0), "I1");
  const double i3 =
      positive(settings.number("I3", flags.i3_opt, flags.i3, 1.0), "I3");
  const double hbar = positive(
      settings.number("hbar", flags.hbar_opt, flags.hbar, 1.0), "hbar");
  const std::string output =
      settings.text("output", flags.output_opt, flags.output, "-");
  settings.reject_unknown();

  std::vector<int> two_mbar(static_cast<std::size_t>(two_s) + 1);
  std::vector<double> energy(two_mbar.size());
  check_status(es_symmetric_top_spectrum(two_s, i1, i3, hbar, two_mbar.data(),
                                         energy.data()));
  std::string csv = "s,mbar,E\n";
  for (std::size_t i = 0; i < two_mbar.size(); ++i) {
    csv += format_double(0.5 * two_s) + ",";
    csv += format_double(0.5 * two_mbar[i]) + ",";
    csv += format_double(energy[i]) + "\n";
  }
  write_text(output, csv);
  return kExitOk;
}

int run_ring(Settings& settings, const RingFlags& flags) {
  const double m_grams = positive(
      settings.number("m_grams", flags.m_opt, flags.m_grams, std::nullopt),
      "m_grams");
  const double a_fm = positive(
      settings.number("a_fm", flags.a_opt, flags.a_fm, std::nullopt), "a_fm");
  settings.reject_unknown();

  double solution[3] = {0.0, 0.0, 0.0};
  check_status(es_ring_solution(m_grams, a_fm, solution));
  std::string json = "{\n";
  json += "  \"m_grams\": " + format_double(m_grams) + ",\n";
  json += "  \"a_fm\": " + format_double(a_fm) + ",\n";
  json += "  \"lambda\": " + format_double(solution[0]) + ",\n";
  json += "  \"beta\": " + format_double(solution[1]) + ",\n";
  json += "  \"gamma\": " + format_double(solution[2]) + "\n";
  json += "}\n";
  write_text("-", json);
  return kExitOk;
}

int run_g_factor(Settings& settings, const GFactorFlags& flags) {
  const std::string charge = settings.text(
      "charge_profile", flags.charge_opt, flags.charge_profile, "ball");
  const std::string mass = settings.text("mass_profile", flags.mass_opt,
                                         flags.mass_profile, "ball");
  const double radius = positive(
      settings.number("radius", flags.radius_opt, flags.radius, 1.0),
      "radius");
  const double m =
      positive(settings.number("m", flags.m_opt, flags.m, 1.0), "m");
  const double q = settings.number("q", flags.q_opt, flags.q, 1.0);
  settings.reject_unknown();

  double inertia = 0.0, g = 0.0, gtilde = 0.0;
  check_status(es_moments(profile_kind_from(charge, "charge_profile"),
                          profile_kind_from(mass, "mass_profile"), radius, m,
                          q, &inertia, &g, &gtilde));
  std::string json = "{\n";
  json += "  \"charge_profile\": \"" + charge + "\",\n";
  json += "  \"mass_profile\": \"" + mass + "\",\n";
  json += "  \"radius\": " + format_double(radius) + ",\n";
  json += "  \"m\": " + format_double(m) + ",\n";
  json += "  \"q\": " + format_double(q) + ",\n";
  json += "  \"inertia\": " + format_double(inertia) + ",\n";
  json += "  \"g\": " + format_double(g) + ",\n";
  json += "  \"gtilde\": " + format_double(gtilde) + "\n";
  json += "}\n";
  write_text("-", json);
  return kExitOk;
}

bool names_command(const std::string& token) {
  for (const char* name : kCommands)
    if (token == name) return true;
  return false;
}

// The config path must be known before CLI11 runs so the file's "command"
// key can stand in for a missing subcommand token.
std::string prescan_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  const char* env = std::getenv("EULER_SPIN_CONFIG");
  return env ? env : "";
}

void inject_command_from_config(std::vector<std::string>& args,
                                const Json& file) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      ++i;
      continue;
    }
    if (args[i].rfind("--config=", 0) == 0) continue;
    if (names_command(args[i])) return;
  }
  const auto it = file.find("command");
  if (it == file.end()) return;
  if (!it->is_string()) throw ConfigError("command: expected a string");
  const std::string name = it->get<std::string>();
  if (!names_command(name))
    throw ConfigError("unknown command '" + name + "'");
  args.insert(args.begin(), name);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    const std::string config_path = prescan_config_path(args);
    const Json file =
        config_path.empty() ? Json::object() : load_config_file(config_path);
    inject_command_from_config(args, file);

    CLI::App app{
        "Rigid-rotator spin toolkit: invariant verification, classical "
        "charged-top and spinor evolution, symmetric-top spectra, and "
        "relativistic ring scales.\n"
        "A JSON config file (--config, or the EULER_SPIN_CONFIG environment "
        "variable) supplies defaults, including the command itself via a "
        "\"command\" key; explicit flags always win."};
    app.fallthrough();
    std::string config_flag;
    app.add_option("--config", config_flag,
                   "JSON config file merged under the flags");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run every invariant suite and write the JSON report");
    VerifyFlags vf;
    vf.seed_opt = verify->add_option(
        "--seed", vf.seed, "Seed for the random-point checks (default 1234)");
    vf.tol_opt = verify->add_option(
        "--tol", vf.tol,
        "Replace every residual tolerance (default: per-check values)");
    vf.output_opt = verify->add_option(
        "--output,-o", vf.output, "Report path, '-' for stdout (default)");

    CLI::App* classical = app.add_subcommand(
        "classical", "Integrate the charged top and write the trajectory CSV");
    ClassicalFlags cf;
    cf.m_opt = classical->add_option("--m", cf.m, "Mass (default 1)");
    cf.q_opt = classical->add_option("--q", cf.q, "Charge (default 1)");
    cf.inertia_opt = classical->add_option("--inertia", cf.inertia,
                                           "Moment of inertia (default 1)");
    cf.g_opt =
        classical->add_option("--g", cf.g, "Gyromagnetic ratio (default 1)");
    cf.gtilde_opt = classical->add_option(
        "--gtilde", cf.gtilde, "Spin-precession coupling (default 1)");
    cf.field_opt = classical->add_option(
        "--field", cf.field, "Field class: zero, uniform, linear (default zero)");
    cf.b0_opt = classical->add_option("--b0", cf.b0, "Uniform B (default 0 0 0)")
                    ->expected(3);
    cf.e0_opt = classical->add_option("--e0", cf.e0, "Uniform E (default 0 0 0)")
                    ->expected(3);
    cf.strength_opt = classical->add_option(
        "--strength", cf.strength,
        "Gradient b of the linear field b(x, -y, 0) (default 1)");
    cf.x0_opt = classical->add_option("--x0", cf.x0,
                                      "Initial position (default 0 0 0)")
                    ->expected(3);
    cf.v0_opt = classical->add_option("--v0", cf.v0,
                                      "Initial velocity (default 0 0 0)")
                    ->expected(3);
    cf.w0_opt = classical->add_option(
                            "--w0", cf.w0,
                            "Initial angular velocity (default 0 0 0)")
                    ->expected(3);
    cf.dt_opt =
        classical->add_option("--dt", cf.dt, "Time step (default 0.01)");
    cf.t_opt = classical->add_option("--T", cf.total_time,
                                     "Total integration time (default 1)");
    cf.output_opt = classical->add_option(
        "--output,-o", cf.output, "CSV path, '-' for stdout (default)");

    CLI::App* spin = app.add_subcommand(
        "spin-evolve",
        "Evolve a spinor in a uniform field and write the trajectory CSV");
    SpinFlags sf;
    sf.two_s_opt = spin->add_option("--two_s", sf.two_s,
                                    "Doubled spin quantum number (default 1)");
    sf.amplitudes_opt =
        spin->add_option("--amplitudes", sf.amplitudes,
                         "Initial amplitudes as re,im pairs, normalized "
                         "before use (default: highest-weight basis state)")
            ->expected(-1);
    sf.gtilde_opt = spin->add_option("--gtilde", sf.gtilde,
                                     "Spin-precession coupling (default 1)");
    sf.inertia_opt = spin->add_option("--inertia", sf.inertia,
                                      "Moment of inertia (default 1)");
    sf.hbar_opt =
        spin->add_option("--hbar", sf.hbar, "Planck constant (default 1)");
    sf.field_opt =
        spin->add_option("--B", sf.field, "Uniform B (default 0 0 0)")
            ->expected(3);
    sf.extra_scalar_opt = spin->add_option(
        "--extra_scalar", sf.extra_scalar,
        "Additional scalar term added to the Hamiltonian (default 0)");
    sf.dt_opt = spin->add_option("--dt", sf.dt, "Time step (default 0.01)");
    sf.t_opt = spin->add_option("--T", sf.total_time,
                                "Total integration time (default 1)");
    sf.output_opt = spin->add_option("--output,-o", sf.output,
                                     "CSV path, '-' for stdout (default)");

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Write the symmetric-top level CSV for one spin sector");
    SpectrumFlags pf;
    pf.two_s_opt = spectrum->add_option(
        "--two_s", pf.two_s, "Doubled spin quantum number (required)");
    pf.i1_opt = spectrum->add_option(
        "--I1", pf.i1, "Transverse moment of inertia (default 1)");
    pf.i3_opt = spectrum->add_option("--I3", pf.i3,
                                     "Axial moment of inertia (default 1)");
    pf.hbar_opt =
        spectrum->add_option("--hbar", pf.hbar, "Planck constant (default 1)");
    pf.output_opt = spectrum->add_option(
        "--output,-o", pf.output, "CSV path, '-' for stdout (default)");

    CLI::App* ring = app.add_subcommand(
        "ring",
        "Solve the relativistic ring for a mass and radius, print JSON");
    RingFlags rf;
    rf.m_opt = ring->add_option("--m_grams", rf.m_grams,
                                "Rest mass in grams (required)");
    rf.a_opt =
        ring->add_option("--a_fm", rf.a_fm, "Ring radius in fm (required)");

    CLI::App* gfactor = app.add_subcommand(
        "g-factor",
        "Compute moments of built-in density profiles, print JSON");
    GFactorFlags gf;
    gf.charge_opt = gfactor->add_option(
        "--charge_profile", gf.charge_profile,
        "Charge profile: ball or shell (default ball)");
    gf.mass_opt =
        gfactor->add_option("--mass_profile", gf.mass_profile,
                            "Mass profile: ball or shell (default ball)");
    gf.radius_opt = gfactor->add_option("--radius", gf.radius,
                                        "Profile radius (default 1)");
    gf.m_opt = gfactor->add_option("--m", gf.m, "Total mass (default 1)");
    gf.q_opt = gfactor->add_option("--q", gf.q, "Total charge (default 1)");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("eulerspin");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> pointers;
    pointers.reserve(full.size());
    for (const std::string& token : full) pointers.push_back(token.c_str());
    try {
      app.parse(static_cast<int>(pointers.size()), pointers.data());
    } catch (const CLI::ParseError& error) {
      if (error.get_exit_code() == 0) return app.exit(error);
      std::fprintf(stderr, "config error: %s\n", error.what());
      return kExitConfigError;
    }

    if (app.got_subcommand(verify)) {
      Settings settings(file, "verify");
      return run_verify(settings, vf);
    }
    if (app.got_subcommand(classical)) {
      Settings settings(file, "classical");
      return run_classical(settings, cf);
    }
    if (app.got_subcommand(spin)) {
      Settings settings(file, "spin-evolve");
      return run_spin_evolve(settings, sf);
    }
    if (app.got_subcommand(spectrum)) {
      Settings settings(file, "spectrum");
      return run_spectrum(settings, pf);
    }
    if (app.got_subcommand(ring)) {
      Settings settings(file, "ring");
      return run_ring(settings, rf);
    }
    if (app.got_subcommand(gfactor)) {
      Settings settings(file, "g-factor");
      return run_g_factor(settings, gf);
    }
    throw ConfigError(
        "no command selected; pass a subcommand or a config file with a "
        "\"command\" key");
  } catch (const ConfigError& error) {
    std::fprintf(stderr, "config error: %s\n", error.what());
    return kExitConfigError;
  } catch (const RuntimeFailure& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return kExitCheckFailure;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return kExitCheckFailure;
  }
}
