#pragma once

// The ten acceptance criteria as runnable units.

#include "config.hpp"
#include "report.hpp"
#include "suites.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace giry::acceptance {

struct Criterion {
  int number = 0;
  std::string name;
  double budget_seconds = 0;
  std::function<Report(const SuiteConfig&)> run;
};

struct Outcome {
  int number = 0;
  std::string name;
  Report report;
  double seconds = 0;
  double budget_seconds = 0;

  [[nodiscard]] bool within_budget() const { return seconds < budget_seconds; }
  [[nodiscard]] bool ok() const { return report.ok() && within_budget(); }
};

namespace detail {

inline SuiteConfig sized(const SuiteConfig& base, std::size_t size, std::size_t cases,
                         std::optional<std::size_t> override_cases) {
  auto c = base;
  c.max_ground_size = std::min(base.max_ground_size, size);
  c.cases = override_cases.value_or(cases);
  return c;
}

}  // namespace detail

/// Criteria 1-9. Case counts follow the published targets unless
/// `override_cases` is set; ground sizes are capped by `base.max_ground_size`.
inline std::vector<Criterion> criteria(std::optional<std::size_t> override_cases = std::nullopt) {
  using detail::sized;
  auto oc = override_cases;
  return {
      {1, "monad_laws", 10, [oc](const SuiteConfig& b) { return suites::laws(sized(b, 5, 500, oc)); }},
      {2, "codensity_bijection", 10, [oc](const SuiteConfig& b) { return suites::codensity(sized(b, 4, 200, oc)); }},
      {3, "small_index", 5, [oc](const SuiteConfig& b) { return suites::small_index(sized(b, 4, 50, oc)); }},
      {4, "bl_identity", 30, [oc](const SuiteConfig& b) { return suites::bl_identity(sized(b, 5, 300, oc), 8); }},
      {5, "lipschitz_criteria", 60, [](const SuiteConfig&) { return suites::simplex_lipschitz(3, 3, 3); }},
      {6, "bl_nonexpansive", 30, [oc](const SuiteConfig& b) { return suites::bl_nonexpansive(sized(b, 5, 100, oc), 6); }},
      {7, "reconstruction", 10,
       [oc](const SuiteConfig& b) { return suites::reconstruction(sized(b, 5, 300, oc), oc ? std::min<std::size_t>(*oc, 50) : 50); }},
      {8, "extension", 30,
       [oc](const SuiteConfig& b) {
         return suites::extension(sized(b, 5, 100, oc), oc.value_or(500), oc ? std::min<std::size_t>(*oc, 100) : 100);
       }},
      {9, "integral_properties", 5, [oc](const SuiteConfig& b) { return suites::integral(sized(b, 5, 500, oc)); }},
  };
}

inline Outcome run(const Criterion& c, const SuiteConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  o.number = c.number;
  o.name = c.name;
  o.report = c.run(cfg);
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.budget_seconds = c.budget_seconds;
  return o;
}

/// Report document for `all`. Wall times are left out so that the bytes
/// depend only on the configuration.
inline nlohmann::json document(const std::vector<Outcome>& outcomes, const SuiteConfig& cfg) {
  nlohmann::json cs = nlohmann::json::array();
  bool ok = true;
  for (const auto& o : outcomes) {
    ok = ok && o.report.ok();
    auto j = o.report.to_json();
    j.erase("format");
    cs.push_back({{"criterion", o.number}, {"name", o.name}, {"report", std::move(j)}});
  }
  return {{"format", 1},
          {"suite", "all"},
          {"ok", ok},
          {"parameters", {{"seed", cfg.seed}, {"max_ground_size", cfg.max_ground_size}, {"max_denominator", cfg.max_denominator}}},
          {"criteria", std::move(cs)}};
}

inline std::string line(const Outcome& o) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s, budget %.0f s", o.seconds, o.budget_seconds);
  std::string s = "criterion " + std::to_string(o.number) + " " + o.name + ": " + (o.ok() ? "PASS" : "FAIL") + " (" + buf + ")";
  if (!o.report.ok()) s += " property violated";
  else if (!o.within_budget()) s += " over budget";
  return s;
}

}  // namespace giry::acceptance
