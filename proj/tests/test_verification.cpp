#include "core/verification.hpp"

#include "doctest.h"
#include "json.hpp"

#include <set>
#include <string>

using namespace eulerspin;

TEST_CASE("default verification run passes every check") {
  const VerificationReport report = run_verification();
  CHECK(report.checks.size() >= 14);
  CHECK(report.passed());

  std::set<std::string> names;
  for (const CheckResult& check : report.checks) {
    CAPTURE(check.name);
    CHECK(check.passed);
    CHECK(check.residual < check.tolerance);
    CHECK(!check.statement.empty());
    CHECK(names.insert(check.name).second);
  }

  SUBCASE("report serializes to well-formed deterministic JSON") {
    const std::string text = report.to_json();
    const nlohmann::json parsed = nlohmann::json::parse(text);
    CHECK(parsed.at("seed").get<std::uint64_t>() == 1234);
    CHECK(parsed.at("tolerance_override").is_null());
    CHECK(parsed.at("passed").get<bool>());
    CHECK(parsed.at("checks").size() == report.checks.size());
    for (const auto& entry : parsed.at("checks")) {
      CHECK(entry.contains("name"));
      CHECK(entry.contains("statement"));
      CHECK(entry.contains("residual"));
      CHECK(entry.contains("tolerance"));
      CHECK(entry.contains("passed"));
      CHECK(entry.size() == 5);
    }
    // Nothing time- or host-dependent may enter the report.
    CHECK(text.find("time") == std::string::npos);
    CHECK(text.find("date") == std::string::npos);
  }
}

TEST_CASE("tolerance override loosens residual checks only") {
  const VerificationReport report = run_verification(1234, 1.0);
  CHECK(report.passed());
  CHECK(report.tolerance_override == 1.0);

  bool saw_overridden = false;
  bool saw_fixed = false;
  for (const CheckResult& check : report.checks) {
    if (check.tolerance == 1.0 && check.name != "energy-drift-halving")
      saw_overridden = true;
    if (check.name == "integrator-order") {
      CHECK(check.tolerance == 0.2);
      saw_fixed = true;
    }
    if (check.name == "parity-superselection") CHECK(check.tolerance == 0.5);
    if (check.name == "nucleon-transition") CHECK(check.tolerance == 1e-10);
  }
  CHECK(saw_overridden);
  CHECK(saw_fixed);

  const nlohmann::json parsed = nlohmann::json::parse(report.to_json());
  CHECK(parsed.at("tolerance_override").get<double>() == 1.0);
}
