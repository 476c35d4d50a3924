#pragma once

// The Giry monad on finite spaces. G sends an algebra to its probability
// measures; elements of GGX and GGGX are represented with finite support,
// where the integral defining the multiplication is a weighted sum.

#include "config.hpp"
#include "errors.hpp"
#include "generate.hpp"
#include "measure.hpp"
#include "random.hpp"
#include "report.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace giry {

/// Finitely supported probability distribution over values of T. Support
/// points are pairwise distinct and carry strictly positive weight: make()
/// merges duplicates and drops zero-weight entries.
template <class T>
class FiniteDistribution {
 public:
  FiniteDistribution() = default;

  static FiniteDistribution make(std::vector<std::pair<T, Rational>> entries) {
    FiniteDistribution d;
    Rational total;
    for (auto& [value, w] : entries) {
      if (w.sign() < 0) throw precondition_error("negative weight " + w.str() + " in finite distribution");
      total += w;
      if (w.is_zero()) continue;
      auto it = std::find(d.support_.begin(), d.support_.end(), value);
      if (it == d.support_.end()) {
        d.support_.push_back(std::move(value));
        d.weights_.push_back(w);
      } else {
        d.weights_[static_cast<std::size_t>(it - d.support_.begin())] += w;
      }
    }
    if (total != Rational(1)) throw precondition_error("finite distribution weights sum to " + total.str());
    return d;
  }

  static FiniteDistribution point(T value) { return make({{std::move(value), Rational(1)}}); }

  [[nodiscard]] std::size_t size() const { return support_.size(); }
  [[nodiscard]] const std::vector<T>& support() const { return support_; }
  [[nodiscard]] const std::vector<Rational>& weights() const { return weights_; }

  /// Weight of a value (zero if outside the support).
  [[nodiscard]] Rational mass_of(const T& value) const {
    auto it = std::find(support_.begin(), support_.end(), value);
    return it == support_.end() ? Rational(0) : weights_[static_cast<std::size_t>(it - support_.begin())];
  }

  /// Pushforward along f: the functor G on finitely supported distributions.
  template <class F>
  [[nodiscard]] auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<std::pair<U, Rational>> out;
    out.reserve(support_.size());
    for (std::size_t i = 0; i < support_.size(); ++i) out.emplace_back(f(support_[i]), weights_[i]);
    return FiniteDistribution<U>::make(std::move(out));
  }

  /// Equal as measures: same mass on every value, regardless of order.
  friend bool operator==(const FiniteDistribution& a, const FiniteDistribution& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (b.mass_of(a.support_[i]) != a.weights_[i]) return false;
    return true;
  }

 private:
  std::vector<T> support_;
  std::vector<Rational> weights_;
};

/// Finitely supported element of GGX.
using MetaMeasure = FiniteDistribution<Measure>;
/// Finitely supported element of GGGX.
using MetaMetaMeasure = FiniteDistribution<MetaMeasure>;

/// Multiplication one level up (mu_{GX} on finite support): flattens a
/// distribution of distributions.
template <class T>
FiniteDistribution<T> flatten(const FiniteDistribution<FiniteDistribution<T>>& dd) {
  std::vector<std::pair<T, Rational>> out;
  for (std::size_t i = 0; i < dd.size(); ++i) {
    const auto& inner = dd.support()[i];
    for (std::size_t j = 0; j < inner.size(); ++j) out.emplace_back(inner.support()[j], dd.weights()[i] * inner.weights()[j]);
  }
  return FiniteDistribution<T>::make(std::move(out));
}

/// Curried Gf: the simplex map induced by a label map.
inline auto g_map(LabelMap f, std::vector<std::string> target_labels) {
  return [f = std::move(f), t = std::move(target_labels)](const SimplexPoint& p) { return g_map(f, t, p); };
}

/// Finite-map condition between finite label sets with their powerset
/// algebras: preimages of members are members, which always holds.
inline bool is_finite_map(const LabelMap& f, std::size_t target_size) {
  return std::all_of(f.begin(), f.end(), [&](std::size_t b) { return b < target_size; });
}

/// The unit: x -> delta_x.
inline Measure unit(std::size_t x, const Algebra& algebra, Additivity mode = Additivity::sigma) {
  return dirac(x, algebra, mode);
}

/// mu_X(M)(A) = sum_i w_i P_i(A). The result carries the mode of the support.
inline Measure mult(const MetaMeasure& m) {
  if (m.size() == 0) throw precondition_error("empty meta-measure");
  const auto& alg = m.support().front().algebra();
  std::vector<Rational> w(alg.atom_count());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& p = m.support()[i];
    if (!(p.algebra() == alg)) throw domain_error("meta-measure support lives on different algebras");
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += m.weights()[i] * p.weight(k);
  }
  return Measure::make(alg, std::move(w), m.support().front().mode());
}

/// G(eta)(P): the image of P under x -> delta_x, a meta-measure supported on
/// the Dirac measures of the atoms P charges.
inline MetaMeasure pushforward_unit(const Measure& p) {
  std::vector<std::pair<Measure, Rational>> out;
  const auto& alg = p.algebra();
  for (std::size_t k = 0; k < alg.atom_count(); ++k) out.emplace_back(unit(alg.representative(k), alg, p.mode()), p.weight(k));
  return MetaMeasure::make(std::move(out));
}

/// GGf on finite support: push every support measure forward along f.
inline MetaMeasure pushforward_meta(const MetaMeasure& m, const PointMap& f, const Algebra& cod) {
  return m.map([&](const Measure& p) { return pushforward(p, f, cod); });
}

namespace detail {

inline nlohmann::json weights_json(const std::vector<Rational>& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : w) out.push_back(x.str());
  return out;
}

inline nlohmann::json measure_witness(const Measure& p) { return weights_json(p.weights()); }

inline MetaMeasure random_meta(Rng& rng, const Algebra& alg, long max_den, Additivity mode, std::size_t max_support) {
  auto k = static_cast<std::size_t>(rng.between(1, static_cast<long>(max_support)));
  auto w = rng.simplex_weights(k, max_den);
  std::vector<std::pair<Measure, Rational>> entries;
  for (std::size_t i = 0; i < k; ++i) entries.emplace_back(gen::measure(rng, alg, max_den, mode, rng.below(4)), w[i]);
  // Guarantee a non-empty distribution even if every weight landed on a merged point.
  return MetaMeasure::make(std::move(entries));
}

}  // namespace detail

/// Runs the monad laws and the naturality squares of eta and mu on `cases`
/// generated instances over the algebra X:
///   left unit      mult(delta_P) = P
///   right unit     mult(G eta (P)) = P
///   associativity  mult(G mult (MM)) = mult(mult_G (MM))
///   eta natural    f_*(delta_x) = delta_{f(x)}
///   mu natural     f_*(mult M) = mult(GGf M)
/// Case c draws from its own seed, so counts are independent of scheduling.
inline Report check_monad_laws(const Algebra& x, const SuiteConfig& cfg, std::size_t stream_offset = 0) {
  Report r;
  r.suite = "monad_laws";
  const long d = cfg.max_denominator;
  for (std::size_t c = 0; c < cfg.cases; ++c) {
    Rng rng(cfg.seed, "monad_laws", stream_offset + c);
    auto p = gen::measure(rng, x, d, cfg.mode, c % 4);

    r.check("left_unit").record(mult(MetaMeasure::point(p)) == p, [&] { return detail::measure_witness(p); });
    r.check("right_unit").record(mult(pushforward_unit(p)) == p, [&] { return detail::measure_witness(p); });

    std::vector<std::pair<MetaMeasure, Rational>> outer;
    auto outer_w = rng.simplex_weights(static_cast<std::size_t>(rng.between(1, 3)), d);
    for (const auto& w : outer_w) outer.emplace_back(detail::random_meta(rng, x, d, cfg.mode, 3), w);
    auto mm = MetaMetaMeasure::make(std::move(outer));
    auto lhs = mult(mm.map([](const MetaMeasure& m) { return mult(m); }));
    auto rhs = mult(flatten(mm));
    r.check("associativity").record(lhs == rhs, [&] {
      return nlohmann::json{{"lhs", detail::measure_witness(lhs)}, {"rhs", detail::measure_witness(rhs)}};
    });
    r.check("mode_preserved").record(lhs.mode() == cfg.mode && rhs.mode() == cfg.mode);

    auto cod = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, static_cast<long>(cfg.max_ground_size))));
    auto f = gen::premeasurable_map(rng, x, cod);
    auto point = rng.below(x.universe());
    r.check("unit_naturality").record(pushforward(unit(point, x, cfg.mode), f, cod) == unit(f[point], cod, cfg.mode),
                                      [&] { return nlohmann::json{{"point", point}, {"map", f}}; });
    auto m = detail::random_meta(rng, x, d, cfg.mode, 3);
    auto a = pushforward(mult(m), f, cod);
    auto b = mult(pushforward_meta(m, f, cod));
    r.check("mult_naturality").record(a == b, [&] {
      return nlohmann::json{{"map", f}, {"lhs", detail::measure_witness(a)}, {"rhs", detail::measure_witness(b)}};
    });

    // mult of a convex combination is the combination of the mults.
    auto m2 = detail::random_meta(rng, x, d, cfg.mode, 3);
    Rational t = rng.unit_rational(d);
    std::vector<std::pair<Measure, Rational>> mixed;
    for (std::size_t i = 0; i < m.size(); ++i) mixed.emplace_back(m.support()[i], t * m.weights()[i]);
    for (std::size_t i = 0; i < m2.size(); ++i) mixed.emplace_back(m2.support()[i], (Rational(1) - t) * m2.weights()[i]);
    auto mixed_mult = mult(MetaMeasure::make(std::move(mixed)));
    auto p1 = mult(m), p2 = mult(m2);
    std::vector<Rational> expect(x.atom_count());
    for (std::size_t k = 0; k < expect.size(); ++k) expect[k] = t * p1.weight(k) + (Rational(1) - t) * p2.weight(k);
    r.check("mult_affine").record(mixed_mult.weights() == expect, [&] {
      return nlohmann::json{{"t", t.str()}, {"lhs", detail::measure_witness(mixed_mult)}, {"rhs", detail::weights_json(expect)}};
    });

    // G(g o f) = Gg o Gf on simplex points.
    auto na = static_cast<std::size_t>(rng.between(1, 4));
    auto nb = static_cast<std::size_t>(rng.between(1, 4));
    auto nc = static_cast<std::size_t>(rng.between(1, 4));
    LabelMap lf(na), lg(nb), lgf(na);
    for (auto& v : lf) v = rng.below(nb);
    for (auto& v : lg) v = rng.below(nc);
    for (std::size_t i = 0; i < na; ++i) lgf[i] = lg[lf[i]];
    auto sp = gen::simplex_point(rng, na, d);
    auto gb = SimplexPoint::default_labels(nb), gc = SimplexPoint::default_labels(nc);
    auto composite = g_map(lgf, gc)(sp);
    auto stepwise = g_map(lg, gc)(g_map(lf, gb)(sp));
    r.check("g_map_functorial").record(composite == stepwise, [&] {
      return nlohmann::json{{"f", lf}, {"g", lg}, {"point", detail::weights_json(sp.weights())}};
    });
    r.check("finite_map").record(is_finite_map(lf, nb) && is_finite_map(lg, nc));
  }
  return r;
}

/// The law suite over freshly generated algebras with at most
/// cfg.max_ground_size points, one algebra per case.
inline Report monad_law_suite(const SuiteConfig& cfg) {
  Report total;
  total.suite = "monad_laws";
  total.parameters = {{"cases", cfg.cases}, {"max_ground_size", cfg.max_ground_size},
                      {"max_denominator", cfg.max_denominator}, {"mode", to_string(cfg.mode)}};
  for (std::size_t c = 0; c < cfg.cases; ++c) {
    Rng rng(cfg.seed, "monad_algebra", c);
    auto x = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, static_cast<long>(cfg.max_ground_size))));
    auto one = cfg;
    one.cases = 1;
    total.absorb(check_monad_laws(x, one, c), "");
  }
  return total;
}

}  // namespace giry
