#pragma once

// Measures from integration functionals, weak integration lattices, the slab
// semi-ring on X x [0, inf), and Caratheodory / Daniell-Stone extension.

#include "errors.hpp"
#include "integrate.hpp"
#include "measure.hpp"
#include "rational.hpp"
#include "setalg.hpp"
#include "subset.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace giry {

/// Values of a function on the ground points.
using PointFunction = std::vector<Rational>;

namespace detail {

inline nlohmann::json rationals_json(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline PointFunction pointwise(const PointFunction& f, const PointFunction& g, bool take_max) {
  PointFunction out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = take_max ? max(f[i], g[i]) : min(f[i], g[i]);
  return out;
}

inline bool leq(const PointFunction& f, const PointFunction& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > g[i]) return false;
  return true;
}

inline PointFunction scaled(const PointFunction& f, const Rational& r) {
  PointFunction out(f);
  for (auto& x : out) x *= r;
  return out;
}

inline PointFunction minus(const PointFunction& g, const PointFunction& f) {
  PointFunction out(g);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f[i];
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Functionals

/// I : PreMble(X, [0,1]) -> [0,1], given either as a total callback or as a
/// table over a finite family. The declared family is where the hypotheses
/// (additivity, finite-sum additivity) are checked.
class Functional {
 public:
  using Callback = std::function<Rational(const SimpleFunction&)>;

  static Functional from_callback(Algebra algebra, Callback oracle, std::vector<SimpleFunction> family) {
    Functional f;
    f.algebra_ = std::move(algebra);
    f.callback_ = std::move(oracle);
    f.family_ = std::move(family);
    f.require_family_on_algebra();
    return f;
  }

  static Functional from_table(Algebra algebra, std::vector<SimpleFunction> family, std::vector<Rational> values) {
    if (family.size() != values.size()) throw invalid_input("functional table needs one value per function");
    Functional f;
    f.algebra_ = std::move(algebra);
    f.family_ = std::move(family);
    f.require_family_on_algebra();
    for (std::size_t i = 0; i < f.family_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (f.family_[j] == f.family_[i] && f.values_[j] != values[i])
          throw invalid_input("functional table assigns two values to the same function",
                              nlohmann::json{{"function", detail::rationals_json(f.family_[i].atom_values())}});
      f.values_.push_back(values[i]);
    }
    return f;
  }

  /// s -> J_P(s).
  static Functional integration(const Measure& p, std::vector<SimpleFunction> family) {
    return from_callback(p.algebra(), [p](const SimpleFunction& s) { return j_integral(p, s); }, std::move(family));
  }

  [[nodiscard]] const Algebra& algebra() const { return algebra_; }
  [[nodiscard]] const std::vector<SimpleFunction>& family() const { return family_; }
  [[nodiscard]] bool total() const { return static_cast<bool>(callback_); }

  [[nodiscard]] std::optional<Rational> try_eval(const SimpleFunction& s) const {
    if (callback_) return callback_(s);
    for (std::size_t i = 0; i < family_.size(); ++i)
      if (family_[i] == s) return values_[i];
    return std::nullopt;
  }

  Rational operator()(const SimpleFunction& s) const {
    auto v = try_eval(s);
    if (!v)
      throw reconstruction_error("functional is not defined on a required function",
                                 nlohmann::json{{"function", detail::rationals_json(s.atom_values())}});
    return *v;
  }

 private:
  void require_family_on_algebra() const {
    for (const auto& s : family_)
      if (!(s.algebra() == algebra_)) throw invalid_input("test function lives on a different algebra");
  }

  Algebra algebra_;
  Callback callback_;
  std::vector<SimpleFunction> family_;
  std::vector<Rational> values_;
};

namespace detail {

inline nlohmann::json fn_json(const SimpleFunction& s) { return rationals_json(s.atom_values()); }

inline bool sum_fits(const SimpleFunction& f, const SimpleFunction& g) {
  for (std::size_t k = 0; k < f.atom_values().size(); ++k)
    if (f.on_atom(k) + g.on_atom(k) > Rational(1)) return false;
  return true;
}

inline void check_pair_additivity(const Functional& F) {
  const auto& fam = F.family();
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i; j < fam.size(); ++j) {
      if (!sum_fits(fam[i], fam[j])) continue;
      auto s = add(fam[i], fam[j]);
      auto fs = F.try_eval(s);
      if (!fs) continue;
      auto a = F(fam[i]), b = F(fam[j]);
      if (a + b != *fs)
        throw reconstruction_error("functional is not additive on the test family",
                                   nlohmann::json{{"clause", "additivity"}, {"f", fn_json(fam[i])}, {"g", fn_json(fam[j])},
                                                  {"f+g", fn_json(s)}, {"I(f)", a.str()}, {"I(g)", b.str()}, {"I(f+g)", fs->str()}});
    }
}

inline void check_triple_additivity(const Functional& F) {
  const auto& fam = F.family();
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (!sum_fits(fam[i], fam[j])) continue;
      auto ij = add(fam[i], fam[j]);
      for (std::size_t k = j + 1; k < fam.size(); ++k) {
        if (!sum_fits(ij, fam[k])) continue;
        auto s = add(ij, fam[k]);
        auto fs = F.try_eval(s);
        if (!fs) continue;
        Rational sum = F(fam[i]) + F(fam[j]) + F(fam[k]);
        if (sum != *fs)
          throw reconstruction_error(
              "functional is not additive over a finite sum in the test family",
              nlohmann::json{{"clause", "finite_sum_additivity"},
                             {"terms", nlohmann::json::array({fn_json(fam[i]), fn_json(fam[j]), fn_json(fam[k])})},
                             {"sum_of_values", sum.str()},
                             {"value_of_sum", fs->str()}});
      }
    }
}

/// Disjoint member pairs, exhaustively, when the oracle is total and small.
inline void check_indicator_additivity(const Functional& F, std::size_t max_atoms = 6) {
  const auto& alg = F.algebra();
  const std::size_t k = alg.atom_count();
  if (!F.total() || k > max_atoms) return;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < k; ++i) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    Subset a(alg.universe()), b(alg.universe());
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= 3) {
      if (c % 3 == 1) a |= alg.atom(i);
      if (c % 3 == 2) b |= alg.atom(i);
    }
    if (a.empty() || b.empty() || b < a) continue;
    auto fa = F(SimpleFunction::indicator(alg, a)), fb = F(SimpleFunction::indicator(alg, b));
    auto fu = F(SimpleFunction::indicator(alg, a | b));
    if (fa + fb != fu)
      throw reconstruction_error("functional is not additive on disjoint indicators",
                                 nlohmann::json{{"clause", "additivity"}, {"a", a.indices()}, {"b", b.indices()},
                                                {"I(1_A)", fa.str()}, {"I(1_B)", fb.str()}, {"I(1_AuB)", fu.str()}});
  }
}

inline Measure reconstruct(const Functional& F, Additivity mode) {
  const auto& alg = F.algebra();
  auto one = F(SimpleFunction::constant(alg, Rational(1)));
  if (one != Rational(1))
    throw reconstruction_error("functional is not normalized: I(1) = " + one.str(),
                               nlohmann::json{{"clause", "normalization"}, {"I(1)", one.str()}});
  check_pair_additivity(F);
  if (mode == Additivity::sigma) check_triple_additivity(F);
  check_indicator_additivity(F);
  std::vector<Rational> w(alg.atom_count());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = F(SimpleFunction::indicator(alg, alg.atom(k)));
  auto v = validate(alg, w);
  if (!v) {
    nlohmann::json diags = nlohmann::json::array();
    for (const auto& d : v.diagnostics) diags.push_back({{"kind", d.kind}, {"message", d.message}, {"atoms", d.atoms}});
    throw reconstruction_error("indicator values do not form a probability measure",
                               nlohmann::json{{"clause", "indicator_additivity"}, {"weights", rationals_json(w)},
                                              {"diagnostics", diags}});
  }
  auto p = Measure::make(alg, std::move(w), mode);
  for (const auto& s : F.family()) {
    auto expect = F(s);
    auto got = j_integral(p, s);
    if (expect != got)
      throw reconstruction_error("reconstructed measure disagrees with the functional on the test family",
                                 nlohmann::json{{"clause", "agreement"}, {"f", fn_json(s)}, {"I(f)", expect.str()},
                                                {"J_P(f)", got.str()}});
  }
  return p;
}

}  // namespace detail

/// P(A) := I(1_A); finitely additive mode. Additivity is checked on the test
/// family (and exhaustively on disjoint indicators for small total oracles),
/// and J_P must reproduce I on the whole family.
inline Measure reconstruct_charge(const Functional& F) { return detail::reconstruct(F, Additivity::finite); }

/// As reconstruct_charge, additionally checking additivity over three-term
/// sums from the test family; sigma-additive mode.
inline Measure reconstruct_measure(const Functional& F) { return detail::reconstruct(F, Additivity::sigma); }

// ---------------------------------------------------------------------------
// Weak integration lattices

/// A finite presentation of L. Membership is either the declared list closed
/// under the declared scalars, or a predicate describing an infinite L (for
/// instance all 1-Lipschitz [0,1]-valued functions), in which case `functions`
/// is the finite sample on which the closure clauses are checked.
struct WeakIntegrationLattice {
  GroundSet ground;
  std::vector<PointFunction> functions;
  std::function<bool(const PointFunction&)> member;
  std::vector<Rational> scalars{Rational(0), Rational(1, 2), Rational(1)};
  std::size_t power_bound = 4;
  std::size_t multiplier_bound = 64;

  [[nodiscard]] bool contains(const PointFunction& f) const {
    if (f.size() != ground.size()) return false;
    if (std::any_of(f.begin(), f.end(), [](const Rational& v) { return v.sign() < 0; })) return false;
    if (member) return member(f);
    for (const auto& g : functions) {
      if (g == f) return true;
      for (const auto& r : scalars)
        if (detail::scaled(g, r) == f) return true;
    }
    return false;
  }

  /// (n, h) with f = n h and h in L, smallest n; nullopt beyond the bound.
  [[nodiscard]] std::optional<std::pair<std::size_t, PointFunction>> in_NL(const PointFunction& f) const {
    for (std::size_t n = 1; n <= multiplier_bound; ++n) {
      auto h = detail::scaled(f, Rational(1, static_cast<long>(n)));
      if (contains(h)) return std::make_pair(n, std::move(h));
    }
    return std::nullopt;
  }
};

struct LatticeCheck {
  bool ok = true;
  std::string clause;  // first failing clause
  nlohmann::json witness;
  /// Membership witnesses found for the clauses: function, multiplier, member.
  std::vector<nlohmann::json> scale_witnesses;
  explicit operator bool() const { return ok; }
};

/// Checks the four clauses of a weak integration lattice on the declared
/// functions: 1 in L; f v g, f ^ g and f v g - f ^ g in NL; n f ^ 1 in NL for
/// n up to power_bound; r f in L for the declared scalars.
inline LatticeCheck check_weak_lattice(const WeakIntegrationLattice& L) {
  LatticeCheck out;
  const std::size_t n = L.ground.size();
  auto fail = [&](std::string clause, nlohmann::json w) {
    out.ok = false;
    out.clause = std::move(clause);
    out.witness = std::move(w);
    return out;
  };
  for (const auto& f : L.functions)
    if (f.size() != n || std::any_of(f.begin(), f.end(), [](const Rational& v) { return v.sign() < 0; }))
      return fail("nonnegative_functions", detail::rationals_json(f));
  if (!L.contains(PointFunction(n, Rational(1)))) return fail("contains_one", nullptr);
  auto need = [&](const std::string& what, const PointFunction& target, nlohmann::json ctx) -> bool {
    auto w = L.in_NL(target);
    if (!w) {
      ctx["value"] = detail::rationals_json(target);
      fail(what, std::move(ctx));
      return false;
    }
    out.scale_witnesses.push_back({{"clause", what}, {"function", detail::rationals_json(target)}, {"n", w->first},
                                   {"member", detail::rationals_json(w->second)}});
    return true;
  };
  for (std::size_t i = 0; i < L.functions.size(); ++i)
    for (std::size_t j = i; j < L.functions.size(); ++j) {
      const auto& f = L.functions[i];
      const auto& g = L.functions[j];
      nlohmann::json ctx{{"f", detail::rationals_json(f)}, {"g", detail::rationals_json(g)}};
      auto hi = detail::pointwise(f, g, true), lo = detail::pointwise(f, g, false);
      if (!need("join", hi, ctx) || !need("meet", lo, ctx) || !need("join_minus_meet", detail::minus(hi, lo), ctx))
        return out;
    }
  for (const auto& f : L.functions)
    for (std::size_t k = 1; k <= L.power_bound; ++k) {
      auto t = detail::scaled(f, Rational(static_cast<long>(k)));
      for (auto& v : t) v = min(v, Rational(1));
      if (!need("multiple_meet_one", t, {{"f", detail::rationals_json(f)}, {"n", k}})) return out;
    }
  for (const auto& f : L.functions)
    for (const auto& r : L.scalars)
      if (!L.contains(detail::scaled(f, r)))
        return fail("scalar_multiple", {{"f", detail::rationals_json(f)}, {"r", r.str()}});
  return out;
}

// ---------------------------------------------------------------------------
// Slabs [f, g) = {(x, t) : f(x) <= t < g(x)}

struct Slab {
  PointFunction lower;
  PointFunction upper;

  /// lower := lower ^ upper, so that lower <= upper.
  static Slab make(PointFunction lower, PointFunction upper) {
    if (lower.size() != upper.size()) throw invalid_input("slab bounds live on different ground sets");
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (lower[i].sign() < 0 || upper[i].sign() < 0) throw range_error("slab bounds must be nonnegative");
      lower[i] = min(lower[i], upper[i]);
    }
    return {std::move(lower), std::move(upper)};
  }
  static Slab make(const SimpleFunction& lower, const SimpleFunction& upper) {
    return make(lower.point_values(), upper.point_values());
  }

  [[nodiscard]] bool empty() const { return lower == upper; }
  [[nodiscard]] bool contains(std::size_t x, const Rational& t) const { return lower.at(x) <= t && t < upper.at(x); }

  /// Equal as sets: same non-empty fibres.
  friend bool operator==(const Slab& a, const Slab& b) {
    if (a.lower.size() != b.lower.size()) return false;
    for (std::size_t x = 0; x < a.lower.size(); ++x) {
      bool ea = a.lower[x] == a.upper[x], eb = b.lower[x] == b.upper[x];
      if (ea != eb) return false;
      if (!ea && (a.lower[x] != b.lower[x] || a.upper[x] != b.upper[x])) return false;
    }
    return true;
  }
};

/// [f1, g1) n [f2, g2) = [f1 v f2, g1 ^ g2).
inline Slab slab_intersect(const Slab& a, const Slab& b) {
  if (a.lower.size() != b.lower.size()) throw domain_error("slabs live on different ground sets");
  return Slab::make(detail::pointwise(a.lower, b.lower, true), detail::pointwise(a.upper, b.upper, false));
}

/// [f1, g1) \ [f2, g2) = [f1, g1 ^ f2) u [f1 v g2, g1), empty pieces dropped.
inline std::vector<Slab> slab_subtract(const Slab& a, const Slab& b) {
  if (a.lower.size() != b.lower.size()) throw domain_error("slabs live on different ground sets");
  if (a.empty()) return {};
  if (b.empty() || slab_intersect(a, b).empty()) return {a};
  std::vector<Slab> out;
  for (auto s : {Slab::make(a.lower, detail::pointwise(a.upper, b.lower, false)),
                 Slab::make(detail::pointwise(a.lower, b.upper, true), a.upper)})
    if (!s.empty()) out.push_back(std::move(s));
  return out;
}

/// Sorted distinct values of the given slabs' bounds, with 0 included.
inline std::vector<Rational> slab_breakpoints(const std::vector<Slab>& slabs) {
  std::set<Rational> ts{Rational(0)};
  for (const auto& s : slabs) {
    ts.insert(s.lower.begin(), s.lower.end());
    ts.insert(s.upper.begin(), s.upper.end());
  }
  return {ts.begin(), ts.end()};
}

// ---------------------------------------------------------------------------
// Caratheodory extension

/// Extension of a set function from a semi-ring to the algebra it generates,
/// carried as atom weights. `mass` is the total weight; `measure()` needs it
/// to be 1, `normalized()` divides by it.
struct Extension {
  Algebra algebra;
  std::vector<Rational> weights;
  Rational mass;

  [[nodiscard]] Rational evaluate(const Subset& a) const {
    Rational out;
    for (auto k : algebra.atoms_within(a)) out += weights[k];
    return out;
  }
  [[nodiscard]] Measure measure(Additivity mode = Additivity::sigma) const {
    if (mass != Rational(1)) throw precondition_error("extension has total mass " + mass.str() + ", not 1");
    return Measure::make(algebra, weights, mode);
  }
  [[nodiscard]] Measure normalized(Additivity mode = Additivity::sigma) const {
    if (mass.is_zero()) throw precondition_error("cannot normalize an extension of mass 0");
    std::vector<Rational> w(weights);
    for (auto& x : w) x /= mass;
    return Measure::make(algebra, std::move(w), mode);
  }
};

/// Extends mu from the semi-ring S to the algebra generated by S. The atoms of
/// that algebra are themselves members of S (the intersection of the members
/// containing a point), so their weights are read off mu; mu must then agree
/// with the atom sums on every member, which is exactly finite additivity on S.
inline Extension caratheodory_extend(const SemiRing& S, const std::map<Subset, Rational>& mu) {
  const auto& ground = S.ground();
  const std::size_t n = ground.size();
  auto value = [&](const Subset& a) -> const Rational& {
    auto it = mu.find(a);
    if (it == mu.end()) throw invalid_input("set function is not defined on a semi-ring member", nlohmann::json(a.indices()));
    return it->second;
  };
  Subset covered(n);
  for (const auto& a : S.members()) {
    covered |= a;
    if (value(a).sign() < 0)
      throw extension_error("set function is negative on a member",
                            nlohmann::json{{"set", a.indices()}, {"value", value(a).str()}});
  }
  if (!covered.is_full())
    throw precondition_error("semi-ring does not cover the ground set", nlohmann::json{{"uncovered", (~covered).indices()}});
  if (!value(Subset(n)).is_zero()) throw extension_error("set function is not zero on the empty set");

  auto alg = generate_algebra(ground, S.members());
  std::vector<Rational> w(alg.atom_count());
  Rational mass;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = value(alg.atom(k));
    mass += w[k];
  }
  for (const auto& a : S.members()) {
    Rational sum;
    nlohmann::json parts = nlohmann::json::array();
    for (auto k : alg.atoms_within(a)) {
      sum += w[k];
      parts.push_back(alg.atom(k).indices());
    }
    if (sum != value(a))
      throw extension_error("set function is not additive on the semi-ring",
                            nlohmann::json{{"set", a.indices()}, {"value", value(a).str()}, {"decomposition", parts},
                                           {"sum_of_parts", sum.str()}});
  }
  return {std::move(alg), std::move(w), mass};
}

// ---------------------------------------------------------------------------
// Daniell-Stone via slabs

struct DaniellStoneResult {
  Measure measure;  // on sigma(L), from the slab extension
  std::optional<Measure> direct;  // indicator-table reconstruction, when available
  std::size_t slab_count = 0;
  std::size_t cell_count = 0;
  /// For each level set {f < r}: the n at which n(f v r - f) ^ 1 reached its
  /// indicator.
  std::vector<nlohmann::json> level_witnesses;
};

/// The unique P on sigma(L) with J_P(f) = I(f) for f in L, constructed along
/// the slab route: the slab family over a finite lattice F (closed under v
/// and ^, containing the declared functions and the indicators of the level
/// sets {f < r} reached through n(f v r - f) ^ 1), mu([f,g)) := I'(g - f)
/// with I' the NL-lift of I, Caratheodory on the cells of X x [0, max F), and
/// P(A) := rho(A x [0,1)).
inline DaniellStoneResult daniell_stone(const WeakIntegrationLattice& L,
                                        const std::function<Rational(const PointFunction&)>& I,
                                        std::size_t max_lattice = 256) {
  auto lat = check_weak_lattice(L);
  if (!lat) throw precondition_error("not a weak integration lattice: clause " + lat.clause + " fails", lat.witness);
  const std::size_t n = L.ground.size();
  const PointFunction one(n, Rational(1)), zero(n, Rational(0));
  if (I(one) != Rational(1)) throw precondition_error("I(1) = " + I(one).str() + ", not 1");

  auto lift = [&](const PointFunction& f) -> Rational {
    if (std::all_of(f.begin(), f.end(), [](const Rational& v) { return v.is_zero(); })) return Rational(0);
    auto w = L.in_NL(f);
    if (!w) throw precondition_error("slab height is not in NL", nlohmann::json(detail::rationals_json(f)));
    return Rational(static_cast<long>(w->first)) * I(w->second);
  };

  DaniellStoneResult out;
  std::vector<PointFunction> seeds{zero, one};
  for (const auto& f : L.functions) {
    seeds.push_back(f);
    std::set<Rational> values(f.begin(), f.end());
    for (const auto& r : values) {
      PointFunction target(n);
      for (std::size_t x = 0; x < n; ++x) target[x] = f[x] < r ? Rational(1) : Rational(0);
      PointFunction gap(n);
      for (std::size_t x = 0; x < n; ++x) gap[x] = max(f[x], r) - f[x];
      bool reached = false;
      for (std::size_t k = 1; k <= L.multiplier_bound && !reached; ++k) {
        auto fk = detail::scaled(gap, Rational(static_cast<long>(k)));
        for (auto& v : fk) v = min(v, Rational(1));
        if (!L.in_NL(fk)) throw precondition_error("n(f v r - f) ^ 1 is not in NL", detail::rationals_json(fk));
        if (fk == target) {
          out.level_witnesses.push_back(
              {{"f", detail::rationals_json(f)}, {"r", r.str()}, {"n", k}, {"indicator", detail::rationals_json(target)}});
          reached = true;
        }
      }
      if (!reached) throw precondition_error("level set indicator not reached within the multiplier bound");
      seeds.push_back(std::move(target));
    }
  }

  // F: closure of the seeds under pointwise max and min.
  std::set<PointFunction> F(seeds.begin(), seeds.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PointFunction> cur(F.begin(), F.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        for (bool take_max : {true, false})
          if (F.insert(detail::pointwise(cur[i], cur[j], take_max)).second) grew = true;
    if (F.size() > max_lattice) throw precondition_error("lattice closure exceeds " + std::to_string(max_lattice) + " functions");
  }

  // Cells (x, [t_i, t_{i+1})) below max F; every one is covered by [0, max F).
  std::set<Rational> ts;
  for (const auto& f : F) ts.insert(f.begin(), f.end());
  std::vector<Rational> t(ts.begin(), ts.end());
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i + 1 < t.size(); ++i) cells.emplace_back(x, i);
  const std::size_t m = cells.size();
  auto cells_of = [&](const PointFunction& f, const PointFunction& g) {
    Subset s(m);
    for (std::size_t c = 0; c < m; ++c) {
      auto [x, i] = cells[c];
      if (f[x] <= t[i] && t[i + 1] <= g[x]) s.set(c);
    }
    return s;
  };

  std::map<Subset, Rational> mu;
  std::vector<PointFunction> fs(F.begin(), F.end());
  for (const auto& f : fs)
    for (const auto& g : fs) {
      if (!detail::leq(f, g)) continue;
      auto cs = cells_of(f, g);
      auto v = lift(detail::minus(g, f));
      auto [it, fresh] = mu.emplace(cs, v);
      if (!fresh && it->second != v)
        throw extension_error("I assigns two values to the same slab",
                              nlohmann::json{{"cells", cs.indices()}, {"values", {it->second.str(), v.str()}}});
    }
  out.slab_count = mu.size();
  out.cell_count = m;

  std::vector<std::string> labels;
  for (auto [x, i] : cells) labels.push_back(L.ground.label(x) + "@[" + t[i].str() + "," + t[i + 1].str() + ")");
  std::vector<Subset> members;
  for (const auto& [s, v] : mu) members.push_back(s);
  auto cell_ground = GroundSet::make(std::move(labels), std::max<std::size_t>(m, 1));
  auto S = SemiRing::make(cell_ground, SubsetFamily(m, std::move(members)));
  auto rho = caratheodory_extend(S, mu);

  std::vector<PointFunction> fns(L.functions);
  auto sigma = sigma_of_functions(L.ground, fns);
  std::vector<Rational> w(sigma.atom_count());
  for (std::size_t k = 0; k < w.size(); ++k) {
    PointFunction ind(n);
    for (auto x : sigma.atom(k).indices()) ind[x] = Rational(1);
    auto cyl = cells_of(zero, ind);
    if (!rho.algebra.contains(cyl)) throw extension_error("A x [0,1) is not measurable for an atom A of sigma(L)");
    w[k] = rho.evaluate(cyl);
  }
  out.measure = Measure::make(sigma, std::move(w));

  for (const auto& f : L.functions) {
    Rational integral;
    for (std::size_t k = 0; k < sigma.atom_count(); ++k) integral += f[sigma.representative(k)] * out.measure.weight(k);
    if (integral != I(f))
      throw extension_error("the slab measure does not reproduce I",
                            nlohmann::json{{"f", detail::rationals_json(f)}, {"I(f)", I(f).str()}, {"integral", integral.str()}});
  }

  // Cross-check against the indicator table P'(A) = I'(1_A), available when
  // the atom indicators of sigma(L) lie in NL.
  std::vector<SimpleFunction> family;
  std::vector<Rational> values;
  for (std::size_t k = 0; k < sigma.atom_count(); ++k) {
    PointFunction ind(n);
    for (auto x : sigma.atom(k).indices()) ind[x] = Rational(1);
    if (!L.in_NL(ind)) return out;
    family.push_back(SimpleFunction::indicator(sigma, sigma.atom(k)));
    values.push_back(lift(ind));
  }
  family.push_back(SimpleFunction::constant(sigma, Rational(1)));
  values.push_back(I(one));
  for (const auto& f : L.functions)
    if (std::all_of(f.begin(), f.end(), [](const Rational& v) { return v <= Rational(1); })) {
      family.push_back(SimpleFunction::from_point_values(sigma, f));
      values.push_back(I(f));
    }
  out.direct = reconstruct_measure(Functional::from_table(sigma, std::move(family), std::move(values)));
  if (!(*out.direct == out.measure))
    throw extension_error("slab route and indicator reconstruction disagree",
                          nlohmann::json{{"slab", detail::rationals_json(out.measure.weights())},
                                         {"direct", detail::rationals_json(out.direct->weights())}});
  return out;
}

}  // namespace giry
