#pragma once

// Cones over the comma category X | G restricted to finite arrow families:
// p_f(P) = (int f_a dP)_a, naturality against label maps, and recovery of the
// measure from a cone through I(f) = q_{hat f}(1).

#include "config.hpp"
#include "errors.hpp"
#include "generate.hpp"
#include "integrate.hpp"
#include "measure.hpp"
#include "monad.hpp"
#include "random.hpp"
#include "report.hpp"
#include "represent.hpp"
#include "simplex.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace giry {

/// A measurable map X -> GA, given by one simplex point per ground point.
class Arrow {
 public:
  Arrow() = default;

  static Arrow make(Algebra source, std::vector<std::string> targets, std::vector<SimplexPoint> rows) {
    if (rows.size() != source.universe()) throw invalid_input("arrow needs one row per ground point");
    for (const auto& r : rows)
      if (r.labels() != targets) throw invalid_input("arrow row is indexed by the wrong labels");
    for (std::size_t k = 0; k < source.atom_count(); ++k)
      for (auto x : source.atom(k).indices())
        if (!(rows[x] == rows[source.representative(k)]))
          throw precondition_error("arrow component is not measurable: rows differ inside atom " + std::to_string(k),
                                   nlohmann::json{{"atom", k}, {"point", x}});
    Arrow a;
    a.source_ = std::move(source);
    a.targets_ = std::move(targets);
    a.rows_ = std::move(rows);
    return a;
  }

  /// x -> p for every x.
  static Arrow constant(const Algebra& source, const SimplexPoint& p) {
    return make(source, p.labels(), std::vector<SimplexPoint>(source.universe(), p));
  }

  [[nodiscard]] const Algebra& source() const { return source_; }
  [[nodiscard]] const std::vector<std::string>& targets() const { return targets_; }
  [[nodiscard]] std::size_t arity() const { return targets_.size(); }
  [[nodiscard]] const std::vector<SimplexPoint>& rows() const { return rows_; }
  [[nodiscard]] const SimplexPoint& row(std::size_t x) const { return rows_.at(x); }
  [[nodiscard]] const SimplexPoint& on_atom(std::size_t k) const { return rows_.at(source_.representative(k)); }

  /// f_a = ev_a o f.
  [[nodiscard]] SimpleFunction component(std::size_t a) const {
    std::vector<Rational> v(source_.atom_count());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = on_atom(k)[a];
    return SimpleFunction::from_atom_values(source_, std::move(v));
  }

  friend bool operator==(const Arrow& a, const Arrow& b) {
    return a.source_ == b.source_ && a.targets_ == b.targets_ && a.rows_ == b.rows_;
  }

 private:
  Algebra source_;
  std::vector<std::string> targets_;
  std::vector<SimplexPoint> rows_;
};

inline const std::vector<std::string>& two_labels() {
  static const std::vector<std::string> labels{"0", "1"};
  return labels;
}

/// hat f : x -> (1 - f(x), f(x)) into G2.
inline Arrow hat(const SimpleFunction& f) {
  const auto& alg = f.algebra();
  std::vector<SimplexPoint> rows;
  for (std::size_t x = 0; x < alg.universe(); ++x)
    rows.push_back(SimplexPoint::make(two_labels(), {Rational(1) - f.at(x), f.at(x)}));
  return Arrow::make(alg, two_labels(), std::move(rows));
}

/// The unique arrow X -> G1.
inline Arrow terminal_arrow(const Algebra& x) { return Arrow::constant(x, SimplexPoint::vertex({"*"}, 0)); }

/// Arrow x -> (1 - 1_U(x), 1_{a_1}(x), ..., 1_{a_j}(x)) for atoms a_i and U
/// their union: the finite form of the arrow into G(N) used for additivity.
inline Arrow partition_arrow(const Algebra& x, const std::vector<std::size_t>& atoms) {
  std::vector<std::string> labels{"rest"};
  for (auto k : atoms) labels.push_back("atom" + std::to_string(k));
  std::vector<SimplexPoint> rows;
  for (std::size_t p = 0; p < x.universe(); ++p) {
    std::vector<Rational> w(labels.size());
    w[0] = Rational(1);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (x.atom_of(p) == atoms[i]) {
        w[i + 1] = Rational(1);
        w[0] = Rational(0);
      }
    rows.push_back(SimplexPoint::make(labels, std::move(w)));
  }
  return Arrow::make(x, std::move(labels), std::move(rows));
}

/// Arrows of arity <= k sufficient to run the reconstruction: the terminal
/// arrow, hat(1_A) for every member A, the partition arrows over at most
/// k - 1 atoms, each extra arrow, and hat(f_a) for every component of an
/// extra arrow.
inline std::vector<Arrow> closed_family(const Algebra& x, std::size_t k, const std::vector<Arrow>& extra = {}) {
  std::vector<Arrow> out;
  auto push = [&](Arrow a) {
    if (a.arity() > k) return;
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  };
  push(terminal_arrow(x));
  for (const auto& m : x.members()) push(hat(SimpleFunction::indicator(x, m)));
  const std::size_t atoms = x.atom_count();
  for (std::size_t mask = 1; mask < (std::size_t{1} << atoms); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < atoms; ++i)
      if ((mask >> i) & 1U) chosen.push_back(i);
    if (chosen.size() >= 2 && chosen.size() + 1 <= k) push(partition_arrow(x, chosen));
  }
  for (const auto& f : extra) {
    push(f);
    if (f.arity() <= k)
      for (std::size_t a = 0; a < f.arity(); ++a) push(hat(f.component(a)));
  }
  return out;
}

struct Cone {
  std::vector<Arrow> arrows;
  std::vector<SimplexPoint> legs;

  [[nodiscard]] std::optional<SimplexPoint> leg(const Arrow& f) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i] == f) return legs[i];
    return std::nullopt;
  }
};

/// p_f(P) = (J_P(f_a))_a for each arrow of the family.
inline Cone cone_of_measure(const Measure& p, const std::vector<Arrow>& family) {
  Cone c;
  for (const auto& f : family) {
    if (!(f.source() == p.algebra())) throw precondition_error("arrow is not sourced at the measure's algebra");
    std::vector<Rational> w(f.arity());
    for (std::size_t k = 0; k < p.algebra().atom_count(); ++k)
      for (std::size_t a = 0; a < w.size(); ++a) w[a] += p.weight(k) * f.on_atom(k)[a];
    c.arrows.push_back(f);
    c.legs.push_back(SimplexPoint::make(f.targets(), std::move(w)));
  }
  return c;
}

struct Triangle {
  std::size_t from;  // index of f
  std::size_t to;    // index of g
  LabelMap s;        // g = Gs o f
};

/// Calls visit(s) for every label map s with Gs o f = g, pruning partial
/// assignments whose fibre sums already exceed g on some atom.
template <class Visit>
void for_each_triangle_map(const Arrow& f, const Arrow& g, Visit&& visit) {
  const std::size_t atoms = f.source().atom_count();
  const std::size_t na = f.arity(), nb = g.arity();
  std::vector<std::vector<Rational>> partial(atoms, std::vector<Rational>(nb));
  LabelMap s(na);
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == na) {
      for (std::size_t k = 0; k < atoms; ++k)
        for (std::size_t b = 0; b < nb; ++b)
          if (partial[k][b] != g.on_atom(k)[b]) return;
      visit(s);
      return;
    }
    for (std::size_t b = 0; b < nb; ++b) {
      bool fits = true;
      for (std::size_t k = 0; k < atoms && fits; ++k) fits = partial[k][b] + f.on_atom(k)[a] <= g.on_atom(k)[b];
      if (!fits) continue;
      s[a] = b;
      for (std::size_t k = 0; k < atoms; ++k) partial[k][b] += f.on_atom(k)[a];
      self(self, a + 1);
      for (std::size_t k = 0; k < atoms; ++k) partial[k][b] -= f.on_atom(k)[a];
    }
  };
  rec(rec, 0);
}

struct NaturalityCheck {
  bool ok = true;
  std::size_t triangles = 0;
  std::optional<Triangle> witness;
  explicit operator bool() const { return ok; }
};

inline nlohmann::json triangle_json(const Cone& c, const Triangle& t) {
  return {{"from", t.from},
          {"to", t.to},
          {"map", t.s},
          {"leg_from", detail::rationals_json(c.legs[t.from].weights())},
          {"leg_to", detail::rationals_json(c.legs[t.to].weights())}};
}

/// legs(g) = Gs(legs(f)) on every triangle g = Gs o f inside the family.
inline NaturalityCheck check_cone_naturality(const Cone& c) {
  NaturalityCheck out;
  for (std::size_t i = 0; i < c.arrows.size(); ++i)
    for (std::size_t j = 0; j < c.arrows.size(); ++j) {
      const auto& g = c.arrows[j];
      for_each_triangle_map(c.arrows[i], g, [&](const LabelMap& s) {
        ++out.triangles;
        if (out.ok && !(g_map(s, g.targets(), c.legs[i]) == c.legs[j])) {
          out.ok = false;
          out.witness = Triangle{i, j, s};
        }
      });
    }
  return out;
}

/// P(A) := q_{hat 1_A}(1), after checking naturality (which carries I(1) = 1
/// through G1 and additivity through the partition arrows). Reconstruction is
/// finished by reconstruct_measure, or reconstruct_charge in the finitely
/// additive mode.
inline Measure reconstruct_from_cone(const Cone& c, Additivity mode = Additivity::sigma) {
  if (c.arrows.empty()) throw reconstruction_error("cone over an empty family");
  const auto& x = c.arrows.front().source();
  auto nat = check_cone_naturality(c);
  if (!nat) throw reconstruction_error("cone is not natural", triangle_json(c, *nat.witness));
  std::vector<SimpleFunction> family;
  std::vector<Rational> values;
  for (const auto& m : x.members()) {
    auto ind = SimpleFunction::indicator(x, m);
    auto q = c.leg(hat(ind));
    if (!q) throw reconstruction_error("cone family lacks hat(1_A)", nlohmann::json{{"set", m.indices()}});
    family.push_back(ind);
    values.push_back((*q)[1]);
  }
  auto F = Functional::from_table(x, std::move(family), std::move(values));
  return mode == Additivity::sigma ? reconstruct_measure(F) : reconstruct_charge(F);
}

// ---------------------------------------------------------------------------
// Suites

namespace detail {

/// Random measurable arrow into a simplex with `arity` labels.
inline Arrow random_arrow(Rng& rng, const Algebra& x, std::size_t arity, long max_den) {
  std::vector<SimplexPoint> per_atom;
  for (std::size_t k = 0; k < x.atom_count(); ++k) per_atom.push_back(gen::simplex_point(rng, arity, max_den));
  std::vector<SimplexPoint> rows;
  for (std::size_t p = 0; p < x.universe(); ++p) rows.push_back(per_atom[x.atom_of(p)]);
  return Arrow::make(x, SimplexPoint::default_labels(arity), std::move(rows));
}

inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// Whether the legs on a family determine the measure: the map P -> legs is
/// linear in the atom weights, so it is injective on the simplex iff its
/// matrix together with the all-ones row has full column rank.
inline bool legs_determine_measure(const Algebra& x, const std::vector<Arrow>& family) {
  std::vector<std::vector<Rational>> rows{std::vector<Rational>(x.atom_count(), Rational(1))};
  for (const auto& f : family)
    for (std::size_t a = 0; a < f.arity(); ++a) {
      std::vector<Rational> row(x.atom_count());
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = f.on_atom(k)[a];
      rows.push_back(std::move(row));
    }
  return detail::rank(std::move(rows)) == x.atom_count();
}

/// Round trip measure -> cone -> measure, cone naturality, cone -> measure ->
/// cone on the declared family, and uniqueness of the mediating measure, over
/// generated algebras with at most cfg.max_ground_size points. Arrows have
/// arity at most k.
inline Report verify_codensity_bijection(const SuiteConfig& cfg, std::size_t k = 3, const std::string& stream = "codensity") {
  Report r;
  r.suite = "codensity";
  r.parameters = {{"cases", cfg.cases}, {"max_ground_size", cfg.max_ground_size}, {"max_denominator", cfg.max_denominator},
                  {"mode", to_string(cfg.mode)}, {"k", k}};
  for (std::size_t c = 0; c < cfg.cases; ++c) {
    Rng rng(cfg.seed, stream, c);
    auto x = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, static_cast<long>(cfg.max_ground_size))));
    auto p = gen::measure(rng, x, cfg.max_denominator, cfg.mode, c % 4);
    std::vector<Arrow> extra;
    if (k >= 2) extra.push_back(detail::random_arrow(rng, x, static_cast<std::size_t>(rng.between(2, static_cast<long>(k))),
                                                     cfg.max_denominator));
    auto family = closed_family(x, k, extra);
    auto cone = cone_of_measure(p, family);

    auto nat = check_cone_naturality(cone);
    r.check("cone_naturality").record(nat.ok, [&] { return triangle_json(cone, *nat.witness); });
    r.check("triangles_enumerated").record(nat.triangles > 0);

    auto back = reconstruct_from_cone(cone, cfg.mode);
    r.check("round_trip_measure").record(back == p, [&] {
      return nlohmann::json{{"measure", detail::rationals_json(p.weights())}, {"reconstructed", detail::rationals_json(back.weights())}};
    });
    r.check("round_trip_mode").record(back.mode() == cfg.mode);
    auto again = cone_of_measure(back, family);
    r.check("round_trip_cone").record(again.legs == cone.legs);

    auto q = gen::measure(rng, x, cfg.max_denominator, cfg.mode, 2);
    if (!(q == p)) {
      auto qc = cone_of_measure(q, family);
      bool differs = false;
      for (const auto& m : x.members()) {
        auto f = hat(SimpleFunction::indicator(x, m));
        if (!(*qc.leg(f) == *cone.leg(f))) differs = true;
      }
      r.check("mediating_uniqueness").record(differs, [&] {
        return nlohmann::json{{"p", detail::rationals_json(p.weights())}, {"q", detail::rationals_json(q.weights())}};
      });
    }
  }
  return r;
}

/// Runs the bijection with arrows of arity <= k when k >= 2, and reports
/// whether legs on such arrows determine the measure. For k = 1 only the
/// terminal arrow remains: the report exhibits two distinct measures with
/// identical cones whenever the algebra has at least two atoms.
inline Report small_index_sufficiency(const SuiteConfig& cfg, std::size_t k) {
  Report r;
  r.suite = "small_index_k" + std::to_string(k);
  r.parameters = {{"cases", cfg.cases}, {"k", k}, {"max_ground_size", cfg.max_ground_size}};
  if (k == 0) throw invalid_input("--k must be positive");
  for (std::size_t c = 0; c < cfg.cases; ++c) {
    Rng rng(cfg.seed, "small_index", c);
    const auto n = static_cast<std::size_t>(rng.between(std::min<long>(2, static_cast<long>(cfg.max_ground_size)),
                                                        static_cast<long>(cfg.max_ground_size)));
    auto x = k == 1 && n >= 2 ? gen::algebra_with_atoms(rng, n, 2) : gen::algebra(rng, n);
    auto family = closed_family(x, k);
    bool determined = legs_determine_measure(x, family);
    if (k >= 2) {
      r.check("determined").record(determined, [&] { return nlohmann::json{{"atoms", x.atom_count()}}; });
      continue;
    }
    if (x.atom_count() < 2) continue;
    r.check("not_determined").record(!determined, [&] { return nlohmann::json{{"atoms", x.atom_count()}}; });
    auto p = gen::measure(rng, x, cfg.max_denominator, cfg.mode, 2);
    std::size_t from = 0;
    while (p.weight(from).is_zero()) ++from;
    std::size_t to = from == 0 ? 1 : 0;
    auto w = p.weights();
    Rational eps = w[from] / Rational(2);
    w[from] -= eps;
    w[to] += eps;
    auto q = Measure::make(x, std::move(w), cfg.mode);
    auto same = cone_of_measure(p, family).legs == cone_of_measure(q, family).legs;
    r.check("indistinguishable_pair").record(same && !(p == q), [&] {
      return nlohmann::json{{"p", detail::rationals_json(p.weights())}, {"q", detail::rationals_json(q.weights())}};
    });
  }
  if (k >= 2) {
    auto one = cfg;
    one.cases = std::max<std::size_t>(1, cfg.cases / 5);
    r.absorb(verify_codensity_bijection(one, k, "small_index_bijection"), "bijection.");
  }
  return r;
}

}  // namespace giry
