#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace giry {

/// Pass/fail tally for one property, with a bounded list of failure witnesses.
struct Check {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<nlohmann::json> witnesses;
  std::string note;

  static constexpr std::size_t kMaxWitnesses = 3;

  template <class WitnessFn>
  bool record(bool ok, WitnessFn&& witness) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness());
    }
    return ok;
  }
  bool record(bool ok) {
    return record(ok, [] { return nlohmann::json(nullptr); });
  }

  [[nodiscard]] bool ok() const { return failed == 0; }
};

/// Named collection of checks. Serialization is deterministic: checks appear
/// in creation order and carry only counts, notes and witnesses.
struct Report {
  std::string suite;
  std::vector<Check> checks;
  nlohmann::json parameters = nlohmann::json::object();

  Check& check(const std::string& name) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    if (it != checks.end()) return *it;
    Check c;
    c.name = name;
    checks.push_back(std::move(c));
    return checks.back();
  }

  [[nodiscard]] const Check* find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }

  [[nodiscard]] bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
  }

  /// Appends another report's checks, prefixing their names.
  void absorb(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
      auto& mine = check(prefix + c.name);
      mine.passed += c.passed;
      mine.failed += c.failed;
      for (const auto& w : c.witnesses)
        if (mine.witnesses.size() < Check::kMaxWitnesses) mine.witnesses.push_back(w);
      if (mine.note.empty()) mine.note = c.note;
    }
  }

  [[nodiscard]] nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"ok", c.ok()}};
      if (!c.note.empty()) j["note"] = c.note;
      if (!c.witnesses.empty()) j["witnesses"] = c.witnesses;
      cs.push_back(std::move(j));
    }
    return {{"format", 1}, {"suite", suite}, {"ok", ok()}, {"parameters", parameters}, {"checks", std::move(cs)}};
  }

  [[nodiscard]] std::string to_text() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << (ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks) {
      os << "  " << (c.ok() ? "pass" : "FAIL") << "  " << c.name << "  (" << c.passed << " passed, " << c.failed
         << " failed)";
      if (!c.note.empty()) os << "  -- " << c.note;
      os << "\n";
      for (const auto& w : c.witnesses) os << "        witness: " << w.dump() << "\n";
    }
    return os.str();
  }
};

}  // namespace giry
