#pragma once

// Finite metric spaces and the bounded Lipschitz distance
//   d_L(P, Q) = sup { |int f dP - int f dQ| : f 1-Lipschitz into [0,1] }.

#include "config.hpp"
#include "errors.hpp"
#include "lp.hpp"
#include "monad.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "simplex.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace giry {

class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  /// Validates zero diagonal, symmetry, positivity off the diagonal and the
  /// triangle inequality; precondition_error with the offending indices.
  static FiniteMetricSpace make(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist) {
    const std::size_t n = labels.size();
    if (n == 0) throw invalid_input("metric space needs at least one point");
    if (dist.size() != n) throw invalid_input("distance matrix must be n x n");
    for (const auto& row : dist)
      if (row.size() != n) throw invalid_input("distance matrix must be n x n");
    for (std::size_t x = 0; x < n; ++x) {
      if (!dist[x][x].is_zero()) throw precondition_error("d(x,x) != 0", nlohmann::json{{"x", x}});
      for (std::size_t y = 0; y < n; ++y) {
        if (dist[x][y] != dist[y][x]) throw precondition_error("distance is not symmetric", nlohmann::json{{"x", x}, {"y", y}});
        if (x != y && dist[x][y].sign() <= 0)
          throw precondition_error("distinct points at distance <= 0", nlohmann::json{{"x", x}, {"y", y}});
        for (std::size_t z = 0; z < n; ++z)
          if (dist[x][z] > dist[x][y] + dist[y][z])
            throw precondition_error("triangle inequality fails", nlohmann::json{{"x", x}, {"y", y}, {"z", z}});
      }
    }
    FiniteMetricSpace m;
    m.labels_ = std::move(labels);
    m.dist_ = std::move(dist);
    return m;
  }

  /// All off-diagonal distances 1.
  static FiniteMetricSpace discrete(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = Rational(0);
    return make(std::move(labels), std::move(d));
  }
  static FiniteMetricSpace discrete(std::size_t n) { return discrete(SimplexPoint::default_labels(n)); }

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const Rational& operator()(std::size_t x, std::size_t y) const { return dist_.at(x).at(y); }
  [[nodiscard]] const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> dist_;
};

struct BlDistance {
  Rational value;
  /// An optimal test function: 1-Lipschitz into [0,1] with
  /// int f dP - int f dQ = value.
  std::vector<Rational> witness;
};

namespace detail {

inline void require_indexed_by(const std::vector<Rational>& p, const std::vector<Rational>& q, std::size_t n) {
  if (p.size() != n || q.size() != n) throw domain_error("points are not indexed by the metric space");
}

/// max sum_x f(x) c_x over f 1-Lipschitz into [0,1].
inline LpResult lipschitz_lp(const std::vector<Rational>& c, const FiniteMetricSpace& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || m(x, y) >= Rational(1)) continue;  // implied by 0 <= f <= 1
      std::vector<Rational> row(n);
      row[x] = Rational(1);
      row[y] = Rational(-1);
      A.push_back(std::move(row));
      b.push_back(m(x, y));
    }
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Rational> row(n);
    row[x] = Rational(1);
    A.push_back(std::move(row));
    b.push_back(Rational(1));
  }
  return lp_maximize(c, A, b);
}

}  // namespace detail

/// d_L on weight vectors over the points of m, by exact LP over both signs.
inline BlDistance bl_distance_lp(const std::vector<Rational>& p, const std::vector<Rational>& q,
                                 const FiniteMetricSpace& m) {
  detail::require_indexed_by(p, q, m.size());
  std::vector<Rational> c(p.size());
  for (std::size_t x = 0; x < c.size(); ++x) c[x] = p[x] - q[x];
  auto pos = detail::lipschitz_lp(c, m);
  for (auto& v : c) v = -v;
  auto neg = detail::lipschitz_lp(c, m);
  if (neg.value > pos.value) return {neg.value, neg.x};
  return {pos.value, pos.x};
}

inline BlDistance bl_distance_lp(const SimplexPoint& p, const SimplexPoint& q, const FiniteMetricSpace& m) {
  return bl_distance_lp(p.weights(), q.weights(), m);
}

/// max over A' of |sum_{A'} p - sum_{A'} q|, by enumeration (|A| <= 20).
inline Rational bl_distance_subsets(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (p.size() != q.size()) throw domain_error("points live on different label sets");
  if (p.size() > 20) throw precondition_error("subset enumeration is limited to 20 labels");
  const std::size_t k = p.size();
  Rational best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Rational s;
    for (std::size_t a = 0; a < k; ++a)
      if ((mask >> a) & 1U) s += p[a] - q[a];
    best = max(best, abs(s));
  }
  return best;
}

inline Rational bl_distance_subsets(const SimplexPoint& p, const SimplexPoint& q) {
  return bl_distance_subsets(p.weights(), q.weights());
}

/// (1/2) sum |p_a - q_a|.
inline Rational half_l1(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  Rational s;
  for (std::size_t a = 0; a < p.size(); ++a) s += abs(p[a] - q[a]);
  return s / Rational(2);
}

// ---------------------------------------------------------------------------
// Lipschitz maps into simplices

struct SimplexLipschitzCheck {
  bool direct = true;  // d_LA(f(x), f(y)) <= d(x, y) for all pairs
  bool subset = true;  // every subset sum is 1-Lipschitz
  [[nodiscard]] bool agree() const { return direct == subset; }
  nlohmann::json direct_witness;
  nlohmann::json subset_witness;
};

/// Both sides of the characterization of 1-Lipschitz maps X -> LA, computed
/// independently. `distance` overrides the direct-side computation of d_LA
/// (callers cache it); by default it is the LP under the discrete metric.
inline SimplexLipschitzCheck check_simplex_lipschitz(
    const std::vector<SimplexPoint>& f, const FiniteMetricSpace& m,
    const std::function<Rational(const SimplexPoint&, const SimplexPoint&)>& distance = nullptr) {
  if (f.size() != m.size()) throw domain_error("map is not total on the metric space");
  if (f.empty()) return {};
  const std::size_t k = f.front().size();
  for (const auto& p : f)
    if (p.size() != k) throw domain_error("images live in different simplices");
  if (k > 20) throw precondition_error("subset criterion is limited to 20 labels");
  auto discrete = FiniteMetricSpace::discrete(k);
  SimplexLipschitzCheck out;
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = x + 1; y < f.size(); ++y) {
      Rational d = distance ? distance(f[x], f[y]) : bl_distance_lp(f[x], f[y], discrete).value;
      if (out.direct && d > m(x, y)) {
        out.direct = false;
        out.direct_witness = {{"x", x}, {"y", y}, {"image_distance", d.str()}, {"distance", m(x, y).str()}};
      }
      for (std::uint64_t mask = 1; out.subset && mask < (std::uint64_t{1} << k); ++mask) {
        Rational gap;
        for (std::size_t a = 0; a < k; ++a)
          if ((mask >> a) & 1U) gap += f[x][a] - f[y][a];
        if (abs(gap) > m(x, y)) {
          std::vector<std::size_t> labels;
          for (std::size_t a = 0; a < k; ++a)
            if ((mask >> a) & 1U) labels.push_back(a);
          out.subset = false;
          out.subset_witness = {{"x", x}, {"y", y}, {"subset", labels}, {"gap", abs(gap).str()}, {"distance", m(x, y).str()}};
        }
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Non-expansiveness of the monad structure

/// Random metric: positive rational edge weights on the complete graph, then
/// shortest-path closure.
inline FiniteMetricSpace random_metric(Rng& rng, std::size_t n, long max_den) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      long den = rng.between(1, max_den);
      d[x][y] = d[y][x] = Rational(rng.between(1, 2 * den), den);
    }
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (d[x][z] + d[z][y] < d[x][y]) d[x][y] = d[x][z] + d[z][y];
  return FiniteMetricSpace::make(SimplexPoint::default_labels(n), std::move(d));
}

/// Finitely supported distribution over LX for a metric space X.
using MetaPoint = FiniteDistribution<SimplexPoint>;

inline SimplexPoint mult(const MetaPoint& m) {
  if (m.size() == 0) throw precondition_error("empty meta-measure");
  std::vector<Rational> w(m.support().front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t a = 0; a < w.size(); ++a) w[a] += m.weights()[i] * m.support()[i][a];
  return SimplexPoint::make(m.support().front().labels(), std::move(w));
}

struct MetaDistance {
  /// d_LLX(M1, M2): the bounded Lipschitz distance between the two
  /// meta-measures. Both are supported on the finite set S of their support
  /// points; a 1-Lipschitz [0,1]-function on S extends to all of LX (McShane
  /// extension, clamped to [0,1]), so the supremum is the LP on (S, d_LX).
  Rational value;
  std::vector<SimplexPoint> support;
};

inline MetaDistance meta_distance(const MetaPoint& m1, const MetaPoint& m2, const FiniteMetricSpace& m) {
  MetaDistance out;
  for (const auto* mm : {&m1, &m2})
    for (const auto& p : mm->support())
      if (std::find(out.support.begin(), out.support.end(), p) == out.support.end()) out.support.push_back(p);
  const std::size_t s = out.support.size();
  if (s == 1) return out;
  std::vector<std::vector<Rational>> d(s, std::vector<Rational>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) d[i][j] = d[j][i] = bl_distance_lp(out.support[i], out.support[j], m).value;
  auto space = FiniteMetricSpace::make(SimplexPoint::default_labels(s), std::move(d));
  std::vector<Rational> w1(s), w2(s);
  for (std::size_t i = 0; i < s; ++i) {
    w1[i] = m1.mass_of(out.support[i]);
    w2[i] = m2.mass_of(out.support[i]);
  }
  out.value = bl_distance_lp(w1, w2, space).value;
  return out;
}

namespace detail {

inline Rational integrate_point(const std::vector<Rational>& f, const SimplexPoint& p) {
  Rational s;
  for (std::size_t x = 0; x < f.size(); ++x) s += f[x] * p[x];
  return s;
}

inline MetaPoint random_meta_point(Rng& rng, std::size_t n, long max_den, std::size_t max_support) {
  auto k = static_cast<std::size_t>(rng.between(1, static_cast<long>(max_support)));
  auto w = rng.simplex_weights(k, max_den);
  std::vector<std::pair<SimplexPoint, Rational>> entries;
  for (std::size_t i = 0; i < k; ++i) entries.emplace_back(gen::simplex_point(rng, n, max_den), w[i]);
  return MetaPoint::make(std::move(entries));
}

}  // namespace detail

/// eta and mu are 1-Lipschitz for d_L on one metric space m:
///  - d_L(delta_x, delta_y) <= d(x, y) on every pair (equality recorded when
///    m is discrete);
///  - for `meta_cases` random pairs of finitely supported meta-measures, with
///    f optimal for d_L(mu M1, mu M2): that value equals
///    |int ev_f dM1 - int ev_f dM2|, ev_f is 1-Lipschitz on the support, and
///    the value is at most d_LLX(M1, M2);
///  - the monad laws on the powerset of m's points.
inline Report check_bl_monad_nonexpansive(const FiniteMetricSpace& m, const SuiteConfig& cfg, std::size_t meta_cases,
                                          std::size_t stream_index = 0) {
  Report r;
  r.suite = "bl_nonexpansive";
  const std::size_t n = m.size();
  bool is_discrete = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && m(x, y) != Rational(1)) is_discrete = false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      auto dx = SimplexPoint::vertex(m.labels(), x), dy = SimplexPoint::vertex(m.labels(), y);
      auto d = bl_distance_lp(dx, dy, m).value;
      r.check("unit_nonexpansive").record(d <= m(x, y), [&] {
        return nlohmann::json{{"x", x}, {"y", y}, {"d_L", d.str()}, {"d", m(x, y).str()}};
      });
      if (is_discrete) r.check("unit_isometric_discrete").record(d == m(x, y));
    }
  for (std::size_t c = 0; c < meta_cases; ++c) {
    Rng rng(cfg.seed, "bl_meta", stream_index * 1000003 + c);
    auto m1 = detail::random_meta_point(rng, n, cfg.max_denominator, 3);
    auto m2 = rng.below(8) == 0 ? m1 : detail::random_meta_point(rng, n, cfg.max_denominator, 3);
    auto p1 = mult(m1), p2 = mult(m2);
    auto lhs = bl_distance_lp(p1, p2, m);
    const auto& f = lhs.witness;
    auto ev = [&](const MetaPoint& mm) {
      Rational s;
      for (std::size_t i = 0; i < mm.size(); ++i) s += mm.weights()[i] * detail::integrate_point(f, mm.support()[i]);
      return s;
    };
    Rational chain = abs(ev(m1) - ev(m2));
    auto meta = meta_distance(m1, m2, m);
    bool ev_lipschitz = true;
    for (std::size_t i = 0; i < meta.support.size(); ++i)
      for (std::size_t j = i + 1; j < meta.support.size(); ++j) {
        auto gap = abs(detail::integrate_point(f, meta.support[i]) - detail::integrate_point(f, meta.support[j]));
        if (gap > bl_distance_lp(meta.support[i], meta.support[j], m).value) ev_lipschitz = false;
      }
    auto witness = [&] {
      return nlohmann::json{{"d_L(mu M1, mu M2)", lhs.value.str()}, {"ev_f gap", chain.str()}, {"d_LL(M1, M2)", meta.value.str()}};
    };
    r.check("mult_ev_chain_equality").record(chain == lhs.value, witness);
    r.check("mult_ev_lipschitz").record(ev_lipschitz, witness);
    r.check("mult_nonexpansive").record(lhs.value <= meta.value, witness);
    if (m1 == m2) r.check("mult_equal_inputs").record(lhs.value.is_zero() && meta.value.is_zero(), witness);
  }
  auto x = Algebra::powerset(GroundSet::make(m.labels()));
  auto law_cfg = cfg;
  law_cfg.cases = std::min<std::size_t>(cfg.cases, 20);
  r.absorb(check_monad_laws(x, law_cfg, stream_index * 1000003), "laws.");
  return r;
}

}  // namespace giry
