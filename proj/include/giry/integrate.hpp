#pragma once

// Simple functions, the elementary integral J_P, the integral I_P as a
// supremum over simple minorants, and an exact check of the additivity and
// continuity properties of I_P.
//
// On a finite algebra every measurable [0,1]-valued function is constant on
// atoms and therefore simple, so SimpleFunction is the only function type.

#include "errors.hpp"
#include "measure.hpp"
#include "rational.hpp"
#include "setalg.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace giry {

struct Term {
  Rational coefficient;
  Subset set;
};

/// s = sum_k a_k 1_{A_k} with every A_k a member and s valued in [0,1]. The
/// atom-indexed value vector is derived once at construction.
class SimpleFunction {
 public:
  SimpleFunction() = default;

  static SimpleFunction from_terms(Algebra algebra, std::vector<Term> terms) {
    std::vector<Rational> values(algebra.atom_count());
    for (const auto& t : terms) {
      if (!in_unit_interval(t.coefficient))
        throw range_error("coefficient " + t.coefficient.str() + " is outside [0,1]");
      for (auto k : algebra.atoms_within(t.set)) values[k] += t.coefficient;
    }
    for (std::size_t k = 0; k < values.size(); ++k)
      if (!in_unit_interval(values[k]))
        throw range_error("value " + values[k].str() + " on atom " + std::to_string(k) + " is outside [0,1]",
                          nlohmann::json{{"atom", k}, {"value", values[k].str()}});
    SimpleFunction s;
    s.algebra_ = std::move(algebra);
    s.terms_ = std::move(terms);
    s.values_ = std::move(values);
    return s;
  }

  /// Canonical form: one term per atom with non-zero value.
  static SimpleFunction from_atom_values(Algebra algebra, std::vector<Rational> values) {
    if (values.size() != algebra.atom_count()) throw invalid_input("one value per atom expected");
    std::vector<Term> terms;
    for (std::size_t k = 0; k < values.size(); ++k)
      if (!values[k].is_zero()) terms.push_back({values[k], algebra.atom(k)});
    return from_terms(std::move(algebra), std::move(terms));
  }

  /// From a value per ground point; domain_error if not constant on atoms.
  static SimpleFunction from_point_values(const Algebra& algebra, const std::vector<Rational>& point_values) {
    if (point_values.size() != algebra.universe()) throw invalid_input("one value per point expected");
    std::vector<Rational> values(algebra.atom_count());
    for (std::size_t k = 0; k < algebra.atom_count(); ++k) {
      const auto& a = algebra.atom(k);
      values[k] = point_values[a.first()];
      for (auto x : a.indices())
        if (point_values[x] != values[k])
          throw domain_error("function is not measurable: it is not constant on atom " + std::to_string(k));
    }
    return from_atom_values(algebra, std::move(values));
  }

  static SimpleFunction indicator(const Algebra& algebra, const Subset& a) {
    return from_terms(algebra, {{Rational(1), a}});
  }
  static SimpleFunction constant(const Algebra& algebra, const Rational& r) {
    return from_terms(algebra, {{r, algebra.ground().whole()}});
  }

  [[nodiscard]] const Algebra& algebra() const { return algebra_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] const std::vector<Rational>& atom_values() const { return values_; }
  [[nodiscard]] const Rational& on_atom(std::size_t k) const { return values_.at(k); }
  [[nodiscard]] const Rational& at(std::size_t point) const { return values_.at(algebra_.atom_of(point)); }
  [[nodiscard]] std::vector<Rational> point_values() const {
    std::vector<Rational> out(algebra_.universe());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = at(x);
    return out;
  }

  [[nodiscard]] SimpleFunction canonical() const { return from_atom_values(algebra_, values_); }

  /// Pointwise equality; the representation is irrelevant.
  friend bool operator==(const SimpleFunction& a, const SimpleFunction& b) {
    return a.algebra_ == b.algebra_ && a.values_ == b.values_;
  }
  friend bool operator<=(const SimpleFunction& a, const SimpleFunction& b) {
    if (!(a.algebra_ == b.algebra_)) throw domain_error("functions live on different algebras");
    for (std::size_t k = 0; k < a.values_.size(); ++k)
      if (a.values_[k] > b.values_[k]) return false;
    return true;
  }

 private:
  Algebra algebra_;
  std::vector<Term> terms_;
  std::vector<Rational> values_;
};

inline SimpleFunction canonicalize(const SimpleFunction& s) { return s.canonical(); }

/// Pointwise r*s.
inline SimpleFunction scale(const SimpleFunction& s, const Rational& r) {
  auto v = s.atom_values();
  for (auto& x : v) x *= r;
  return SimpleFunction::from_atom_values(s.algebra(), std::move(v));
}

/// Pointwise f+g; range_error when the sum leaves [0,1].
inline SimpleFunction add(const SimpleFunction& f, const SimpleFunction& g) {
  if (!(f.algebra() == g.algebra())) throw domain_error("functions live on different algebras");
  auto v = f.atom_values();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += g.on_atom(k);
  return SimpleFunction::from_atom_values(f.algebra(), std::move(v));
}

/// Pointwise g-f for f <= g.
inline SimpleFunction subtract(const SimpleFunction& g, const SimpleFunction& f) {
  if (!(f.algebra() == g.algebra())) throw domain_error("functions live on different algebras");
  auto v = g.atom_values();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f.on_atom(k);
  return SimpleFunction::from_atom_values(g.algebra(), std::move(v));
}

inline void require_same_algebra(const Measure& p, const SimpleFunction& s) {
  if (!(p.algebra() == s.algebra())) throw domain_error("simple function and measure live on different algebras");
}

/// J_P(s) = sum_k a_k P(A_k), evaluated on the given representation. Equals
/// the atom sum of the canonical form for every representation.
inline Rational j_integral(const Measure& p, const SimpleFunction& s) {
  require_same_algebra(p, s);
  Rational total;
  for (const auto& t : s.terms()) total += t.coefficient * evaluate(p, t.set);
  return total;
}

namespace detail {
inline Rational atom_sum(const Measure& p, const std::vector<Rational>& values) {
  Rational total;
  for (std::size_t k = 0; k < values.size(); ++k) total += values[k] * p.weight(k);
  return total;
}
}  // namespace detail

/// I_P(f) = sup { J_P(s) : s simple, s <= f }. J_P is monotone and f is itself
/// simple, so the supremum is attained at the canonical form of f; the value is
/// computed that way and cross-checked against J_P on f's own representation.
inline Rational i_integral(const Measure& p, const SimpleFunction& f) {
  require_same_algebra(p, f);
  auto sup = detail::atom_sum(p, f.atom_values());
  if (sup != j_integral(p, f)) throw std::logic_error("I_P and J_P disagree on a simple function");
  return sup;
}

/// Result of one clause of the integral property check.
struct ClauseResult {
  std::string clause;
  std::string description;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<nlohmann::json> witnesses;
  [[nodiscard]] bool ok() const { return failed == 0; }
};

struct IntegralPropertyReport {
  std::vector<ClauseResult> clauses;
  [[nodiscard]] bool ok() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.ok(); });
  }
  [[nodiscard]] const ClauseResult& clause(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.clause == name) return c;
    throw std::out_of_range("no clause " + name);
  }
};

struct IntegralCheckOptions {
  /// Grid denominator for the minorant/majorant search of clause (iii).
  long grid_denominator = 4;
  /// Above this many grid points per function the search runs atom by atom;
  /// J_P is separable with nonnegative weights, so both searches are exact.
  std::size_t exhaustive_limit = 4096;
  std::size_t max_witnesses = 3;
};

namespace detail {

inline nlohmann::json values_json(const SimpleFunction& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : f.atom_values()) out.push_back(v.str());
  return out;
}

// Per-atom candidate values for clause (iii): the grid {0, 1/D, ..., 1} plus
// f's own value, filtered to minorants or majorants.
inline std::vector<std::vector<Rational>> bound_candidates(const SimpleFunction& f, long d, bool below) {
  std::vector<std::vector<Rational>> out(f.atom_values().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto& v = f.on_atom(k);
    for (long i = 0; i <= d; ++i) {
      Rational g(i, d);
      if (below ? g <= v : g >= v) out[k].push_back(g);
    }
    if (std::find(out[k].begin(), out[k].end(), v) == out[k].end()) out[k].push_back(v);
  }
  return out;
}

// max (or min) of J_P over the product of candidate sets.
inline Rational extremum(const Measure& p, const std::vector<std::vector<Rational>>& cands, bool maximize,
                         std::size_t exhaustive_limit) {
  std::size_t total = 1;
  for (const auto& c : cands) {
    total *= c.size();
    if (total > exhaustive_limit) break;
  }
  if (total <= exhaustive_limit) {
    std::optional<Rational> best;
    std::vector<std::size_t> idx(cands.size(), 0);
    for (std::size_t step = 0; step < total; ++step) {
      Rational j;
      for (std::size_t k = 0; k < cands.size(); ++k) j += cands[k][idx[k]] * p.weight(k);
      if (!best || (maximize ? j > *best : j < *best)) best = j;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (++idx[k] < cands[k].size()) break;
        idx[k] = 0;
      }
    }
    return *best;
  }
  Rational j;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    auto [lo, hi] = std::minmax_element(cands[k].begin(), cands[k].end());
    j += (maximize ? *hi : *lo) * p.weight(k);
  }
  return j;
}

}  // namespace detail

/// Exact check of the six properties of I_P over the given functions:
///  (i)   I_P = J_P on simple functions, I_P(1) = 1
///  (ii)  f <= g implies I_P(f) <= I_P(g)
///  (iii) sup over simple minorants = inf over simple majorants = I_P(f)
///  (iv)  I_P(f+g) = I_P(f) + I_P(g) whenever f+g <= 1
///  (v)   monotone limits, on the eventually constant sequences (k/m) f
///  (vi)  series with finitely many non-zero terms: f as the sum of its atom
///        pieces, and f+g as the two-term series (f, g, 0, 0, ...)
inline IntegralPropertyReport check_integral_properties(const Measure& p, const std::vector<SimpleFunction>& fns,
                                                        const IntegralCheckOptions& opt = {}) {
  for (const auto& f : fns) require_same_algebra(p, f);
  const auto& alg = p.algebra();
  IntegralPropertyReport report;
  auto make = [](std::string name, std::string desc) {
    ClauseResult c;
    c.clause = std::move(name);
    c.description = std::move(desc);
    return c;
  };
  auto record = [&](ClauseResult& c, bool ok, auto&& witness) {
    ++c.checked;
    if (!ok) {
      ++c.failed;
      if (c.witnesses.size() < opt.max_witnesses) c.witnesses.push_back(witness());
    }
  };

  auto c1 = make("i", "I_P(s) = J_P(s) for simple s; I_P(1) = 1");
  auto one = SimpleFunction::constant(alg, Rational(1));
  record(c1, i_integral(p, one) == Rational(1), [&] { return nlohmann::json{{"I(1)", i_integral(p, one).str()}}; });
  for (const auto& f : fns) {
    auto i = detail::atom_sum(p, f.atom_values());
    auto j = j_integral(p, f);
    record(c1, i == j, [&] { return nlohmann::json{{"f", detail::values_json(f)}, {"I", i.str()}, {"J", j.str()}}; });
  }

  auto c2 = make("ii", "f <= g implies I_P(f) <= I_P(g)");
  for (const auto& f : fns)
    for (const auto& g : fns) {
      if (!(f <= g)) continue;
      auto a = i_integral(p, f), b = i_integral(p, g);
      record(c2, a <= b, [&] {
        return nlohmann::json{{"f", detail::values_json(f)}, {"g", detail::values_json(g)}, {"I(f)", a.str()}, {"I(g)", b.str()}};
      });
    }

  auto c3 = make("iii", "sup over simple minorants = inf over simple majorants");
  for (const auto& f : fns) {
    auto sup = detail::extremum(p, detail::bound_candidates(f, opt.grid_denominator, true), true, opt.exhaustive_limit);
    auto inf = detail::extremum(p, detail::bound_candidates(f, opt.grid_denominator, false), false, opt.exhaustive_limit);
    auto i = i_integral(p, f);
    record(c3, sup == inf && sup == i, [&] {
      return nlohmann::json{{"f", detail::values_json(f)}, {"sup", sup.str()}, {"inf", inf.str()}, {"I", i.str()}};
    });
  }

  auto c4 = make("iv", "I_P(f+g) = I_P(f) + I_P(g) when f+g <= 1");
  auto c6 = make("vi", "series with finitely many non-zero terms");
  for (std::size_t a = 0; a < fns.size(); ++a)
    for (std::size_t b = a; b < fns.size(); ++b) {
      const auto& f = fns[a];
      const auto& g = fns[b];
      bool fits = true;
      for (std::size_t k = 0; k < alg.atom_count(); ++k) fits = fits && f.on_atom(k) + g.on_atom(k) <= Rational(1);
      if (!fits) continue;
      auto sum = add(f, g);
      auto lhs = i_integral(p, sum);
      auto rhs = i_integral(p, f) + i_integral(p, g);
      auto w = [&] {
        return nlohmann::json{{"f", detail::values_json(f)}, {"g", detail::values_json(g)}, {"I(f+g)", lhs.str()},
                              {"I(f)+I(g)", rhs.str()}};
      };
      record(c4, lhs == rhs, w);
      // Two-term series padded with zero terms.
      auto zero = SimpleFunction::constant(alg, Rational(0));
      Rational series = i_integral(p, f) + i_integral(p, g) + i_integral(p, zero) + i_integral(p, zero);
      record(c6, series == lhs, w);
    }

  auto c5 = make("v", "monotone limits of eventually constant sequences");
  for (const auto& f : fns) {
    const long m = 4;
    Rational previous(-1);
    bool monotone = true;
    for (long step = 0; step <= m; ++step) {
      auto value = i_integral(p, scale(f, Rational(step, m)));
      monotone = monotone && previous <= value;
      previous = value;
    }
    auto limit = previous;
    record(c5, monotone && limit == i_integral(p, f), [&] {
      return nlohmann::json{{"f", detail::values_json(f)}, {"limit", limit.str()}, {"I(f)", i_integral(p, f).str()}};
    });
  }

  for (const auto& f : fns) {
    Rational total;
    for (std::size_t k = 0; k < alg.atom_count(); ++k)
      total += i_integral(p, SimpleFunction::from_terms(alg, {{f.on_atom(k), alg.atom(k)}}));
    record(c6, total == i_integral(p, f), [&] {
      return nlohmann::json{{"f", detail::values_json(f)}, {"series", total.str()}, {"I(f)", i_integral(p, f).str()}};
    });
  }

  report.clauses = {std::move(c1), std::move(c2), std::move(c3), std::move(c4), std::move(c5), std::move(c6)};
  return report;
}

}  // namespace giry
