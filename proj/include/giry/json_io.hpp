#pragma once

// JSON encodings. Rationals are "p/q" strings; subsets are sorted index
// arrays; every top-level document carries "format": 1. Schema violations
// raise invalid_input naming the JSON location.

#include "codensity.hpp"
#include "errors.hpp"
#include "integrate.hpp"
#include "lipmetric.hpp"
#include "measure.hpp"
#include "rational.hpp"
#include "represent.hpp"
#include "setalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace giry::io {

using nlohmann::json;

inline constexpr int kFormat = 1;

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
  throw invalid_input("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing field \"" + key + "\"");
  return *it;
}

inline const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

inline void check_format(const json& j) {
  if (!j.is_object()) bad("", "expected an object");
  auto it = j.find("format");
  if (it != j.end() && (!it->is_number_integer() || it->get<int>() != kFormat)) bad("/format", "unsupported format version");
}

// ---------------------------------------------------------------------------
// Scalars

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad(where, "expected a rational \"p/q\"");
}

inline json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

inline std::vector<Rational> rationals_from(const json& j, const std::string& where) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i)
    out.push_back(rational_from(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline Subset subset_from(const json& j, std::size_t n, const std::string& where) {
  Subset s(n);
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    if (!j[i].is_number_unsigned()) bad(where + "/" + std::to_string(i), "expected a point index");
    auto x = j[i].get<std::size_t>();
    if (x >= n) bad(where + "/" + std::to_string(i), "point index out of range");
    s.set(x);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Set systems

inline json to_json(const GroundSet& g) { return g.labels(); }

inline GroundSet ground_from(const json& j, const std::string& where, std::size_t max_size = kDefaultMaxGroundSize) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    if (j[i].is_string()) labels.push_back(j[i].get<std::string>());
    else if (j[i].is_number_integer()) labels.push_back(std::to_string(j[i].get<long>()));
    else bad(where + "/" + std::to_string(i), "expected a point label");
  }
  try {
    return GroundSet::make(std::move(labels), max_size);
  } catch (const giry::error& e) {
    bad(where, e.what());
  }
}

/// {"points": [...], "family": [[indices]...]}; members in canonical order.
inline json to_json(const GroundSet& g, const SubsetFamily& family) {
  json fam = json::array();
  for (const auto& s : family) fam.push_back(s.indices());
  return {{"points", to_json(g)}, {"family", fam}};
}

inline json to_json(const Algebra& a) { return to_json(a.ground(), a.members()); }

inline std::pair<GroundSet, SubsetFamily> family_from(const json& j, const std::string& where) {
  auto g = ground_from(field(j, "points", where), where + "/points");
  const auto& fam = array_at(field(j, "family", where), where + "/family");
  std::vector<Subset> members;
  for (std::size_t i = 0; i < fam.size(); ++i)
    members.push_back(subset_from(fam[i], g.size(), where + "/family/" + std::to_string(i)));
  return {g, SubsetFamily(g.size(), std::move(members))};
}

/// An algebra given by all of its members. With "generate": true the family
/// is read as generators instead.
inline Algebra algebra_from(const json& j, const std::string& where) {
  auto [g, fam] = family_from(j, where);
  if (j.contains("generate") && j["generate"].is_boolean() && j["generate"].get<bool>()) return generate_algebra(g, fam);
  try {
    return Algebra::from_family(g, fam);
  } catch (const giry::error& e) {
    throw invalid_input("at " + where + ": " + e.what(), e.witness());
  }
}

// ---------------------------------------------------------------------------
// Measures

inline json to_json(const Measure& p) {
  json w = json::object();
  for (std::size_t k = 0; k < p.weights().size(); ++k) w[std::to_string(k)] = p.weight(k).str();
  return {{"algebra", to_json(p.algebra())}, {"weights", w}, {"mode", to_string(p.mode())}};
}

inline Additivity mode_from(const json& j, const std::string& where) {
  if (j == "sigma") return Additivity::sigma;
  if (j == "finitely_additive") return Additivity::finite;
  bad(where, "mode must be \"sigma\" or \"finitely_additive\"");
}

/// Weights by atom index, as an object {"k": "p/q"} (absent atoms weigh 0) or
/// as an array.
inline Measure measure_from(const json& j, const std::string& where) {
  auto alg = algebra_from(field(j, "algebra", where), where + "/algebra");
  const auto& wj = field(j, "weights", where);
  std::vector<Rational> w(alg.atom_count());
  if (wj.is_object()) {
    for (const auto& [key, value] : wj.items()) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bad(where + "/weights/" + key, "expected an atom index");
      }
      if (k >= w.size()) bad(where + "/weights/" + key, "atom index out of range");
      w[k] = rational_from(value, where + "/weights/" + key);
    }
  } else {
    w = rationals_from(wj, where + "/weights");
  }
  auto mode = j.contains("mode") ? mode_from(j["mode"], where + "/mode") : Additivity::sigma;
  try {
    return Measure::make(alg, std::move(w), mode);
  } catch (const giry::error& e) {
    throw invalid_input("at " + where + "/weights: " + e.what(), e.witness());
  }
}

// ---------------------------------------------------------------------------
// Simple functions and functionals

inline json to_json(const SimpleFunction& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back(json::array({t.coefficient.str(), t.set.indices()}));
  return {{"terms", terms}};
}

inline SimpleFunction simple_function_from(const json& j, const Algebra& alg, const std::string& where) {
  const auto& tj = array_at(field(j, "terms", where), where + "/terms");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < tj.size(); ++i) {
    auto here = where + "/terms/" + std::to_string(i);
    if (!tj[i].is_array() || tj[i].size() != 2) bad(here, "expected [coefficient, [indices]]");
    terms.push_back({rational_from(tj[i][0], here + "/0"), subset_from(tj[i][1], alg.universe(), here + "/1")});
  }
  try {
    return SimpleFunction::from_terms(alg, std::move(terms));
  } catch (const giry::error& e) {
    throw invalid_input("at " + where + ": " + e.what(), e.witness());
  }
}

/// {"algebra": ..., "family": [<simple function>...], "values": ["p/q"...]}.
inline Functional functional_from(const json& j, const std::string& where = "") {
  auto alg = algebra_from(field(j, "algebra", where), where + "/algebra");
  const auto& fj = array_at(field(j, "family", where), where + "/family");
  std::vector<SimpleFunction> family;
  for (std::size_t i = 0; i < fj.size(); ++i)
    family.push_back(simple_function_from(fj[i], alg, where + "/family/" + std::to_string(i)));
  auto values = rationals_from(field(j, "values", where), where + "/values");
  if (values.size() != family.size()) bad(where + "/values", "one value per family member expected");
  return Functional::from_table(alg, std::move(family), std::move(values));
}

inline json to_json(const Slab& s) { return {{"lower", to_json(s.lower)}, {"upper", to_json(s.upper)}}; }

inline Slab slab_from(const json& j, std::size_t n, const std::string& where) {
  auto lo = rationals_from(field(j, "lower", where), where + "/lower");
  auto hi = rationals_from(field(j, "upper", where), where + "/upper");
  if (lo.size() != n || hi.size() != n) bad(where, "slab bounds need one value per point");
  return Slab::make(std::move(lo), std::move(hi));
}

// ---------------------------------------------------------------------------
// Extension input: a semi-ring with a set function on its members.

struct ExtensionInput {
  SemiRing semiring;
  std::map<Subset, Rational> mu;
};

/// {"points": [...], "family": [[...]...], "values": ["p/q"...]}.
inline ExtensionInput extension_from(const json& j, const std::string& where = "") {
  auto [g, fam] = family_from(j, where);
  const auto& fj = field(j, "family", where);
  auto values = rationals_from(field(j, "values", where), where + "/values");
  if (values.size() != fj.size()) bad(where + "/values", "one value per family member expected");
  std::map<Subset, Rational> mu;
  for (std::size_t i = 0; i < fj.size(); ++i) {
    auto s = subset_from(fj[i], g.size(), where + "/family/" + std::to_string(i));
    auto [it, fresh] = mu.emplace(s, values[i]);
    if (!fresh && it->second != values[i]) bad(where + "/values/" + std::to_string(i), "two values for the same set");
  }
  return {SemiRing::make(g, fam), std::move(mu)};
}

inline json to_json(const Extension& e) {
  json atoms = json::array();
  for (const auto& a : e.algebra.atoms()) atoms.push_back(a.indices());
  return {{"points", to_json(e.algebra.ground())}, {"atoms", atoms}, {"weights", to_json(e.weights)}, {"mass", e.mass.str()}};
}

// ---------------------------------------------------------------------------
// Metrics and arrows

inline json to_json(const FiniteMetricSpace& m) {
  json d = json::array();
  for (const auto& row : m.matrix()) d.push_back(to_json(row));
  return {{"points", m.labels()}, {"dist", d}};
}

inline FiniteMetricSpace metric_from(const json& j, const std::string& where) {
  auto g = ground_from(field(j, "points", where), where + "/points", 1U << 20);
  const auto& dj = array_at(field(j, "dist", where), where + "/dist");
  std::vector<std::vector<Rational>> d;
  for (std::size_t i = 0; i < dj.size(); ++i) d.push_back(rationals_from(dj[i], where + "/dist/" + std::to_string(i)));
  try {
    return FiniteMetricSpace::make(g.labels(), std::move(d));
  } catch (const giry::error& e) {
    throw invalid_input("at " + where + ": " + e.what(), e.witness());
  }
}

inline json to_json(const Arrow& f) {
  json rows = json::object();
  for (std::size_t x = 0; x < f.rows().size(); ++x) rows[f.source().ground().label(x)] = to_json(f.row(x).weights());
  return {{"targets", f.targets()}, {"rows", rows}};
}

inline Arrow arrow_from(const json& j, const Algebra& x, const std::string& where) {
  std::vector<std::string> targets;
  for (const auto& t : array_at(field(j, "targets", where), where + "/targets")) {
    if (!t.is_string()) bad(where + "/targets", "labels must be strings");
    targets.push_back(t.get<std::string>());
  }
  const auto& rj = field(j, "rows", where);
  if (!rj.is_object()) bad(where + "/rows", "expected an object keyed by point label");
  std::vector<SimplexPoint> rows;
  for (std::size_t p = 0; p < x.universe(); ++p) {
    const auto& label = x.ground().label(p);
    auto here = where + "/rows/" + label;
    auto w = rationals_from(field(rj, label, where + "/rows"), here);
    try {
      rows.push_back(SimplexPoint::make(targets, std::move(w)));
    } catch (const giry::error& e) {
      bad(here, e.what());
    }
  }
  try {
    return Arrow::make(x, std::move(targets), std::move(rows));
  } catch (const giry::error& e) {
    throw invalid_input("at " + where + ": " + e.what(), e.witness());
  }
}

/// Cone: [[arrow, ["p/q"...]], ...].
inline json to_json(const Cone& c) {
  json out = json::array();
  for (std::size_t i = 0; i < c.arrows.size(); ++i) out.push_back(json::array({to_json(c.arrows[i]), to_json(c.legs[i].weights())}));
  return out;
}

inline Cone cone_from(const json& j, const Algebra& x, const std::string& where) {
  Cone c;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    auto here = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) bad(here, "expected [arrow, leg]");
    auto f = arrow_from(j[i][0], x, here + "/0");
    auto w = rationals_from(j[i][1], here + "/1");
    try {
      c.legs.push_back(SimplexPoint::make(f.targets(), std::move(w)));
    } catch (const giry::error& e) {
      bad(here + "/1", e.what());
    }
    c.arrows.push_back(std::move(f));
  }
  return c;
}

}  // namespace giry::io
