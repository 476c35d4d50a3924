#include "oracles.hpp"

#include <giry/generate.hpp>
#include <giry/lipmetric.hpp>
#include <giry/lp.hpp>

#include <gtest/gtest.h>

using namespace giry;

namespace {

SimplexPoint sp(std::vector<Rational> w) { return SimplexPoint::make(std::move(w)); }

FiniteMetricSpace two_points(const Rational& d) {
  return FiniteMetricSpace::make({"x", "y"}, {{Rational(0), d}, {d, Rational(0)}});
}

}  // namespace

TEST(Lp, SmallProgram) {
  // max 3x + 2y  s.t.  x + y <= 4, x + 3y <= 6, x <= 3
  auto r = lp_maximize({Rational(3), Rational(2)}, {{Rational(1), Rational(1)}, {Rational(1), Rational(3)}, {Rational(1), Rational(0)}},
                       {Rational(4), Rational(6), Rational(3)});
  EXPECT_EQ(r.value, Rational(11));
  EXPECT_EQ(r.x, (std::vector<Rational>{Rational(3), Rational(1)}));
  EXPECT_THROW(lp_maximize({Rational(1)}, {{Rational(-1)}}, {Rational(1)}), domain_error);
}

TEST(FiniteMetricSpace, Validation) {
  EXPECT_THROW(FiniteMetricSpace::make({"a", "b"}, {{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}), giry::error);
  EXPECT_THROW(FiniteMetricSpace::make({"a", "b"}, {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}), giry::error);
  EXPECT_THROW(FiniteMetricSpace::make({"a", "b", "c"}, {{Rational(0), Rational(1), Rational(3)},
                                                         {Rational(1), Rational(0), Rational(1)},
                                                         {Rational(3), Rational(1), Rational(0)}}),
               giry::error);
}

TEST(BlDistance, Examples) {
  auto p = sp({Rational(1), Rational(0)}), q = sp({Rational(0), Rational(1)});
  EXPECT_EQ(bl_distance_lp(p, p, FiniteMetricSpace::discrete(2)).value, Rational(0));
  EXPECT_EQ(bl_distance_lp(p, q, FiniteMetricSpace::discrete(2)).value, Rational(1));
  EXPECT_EQ(bl_distance_lp(p, q, two_points(Rational(1, 2))).value, Rational(1, 2));
  EXPECT_EQ(bl_distance_subsets(p, q), Rational(1));
  auto a = sp({Rational(1, 2), Rational(1, 2), Rational(0)}), b = sp({Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  EXPECT_EQ(bl_distance_subsets(a, b), Rational(1, 3));
  EXPECT_EQ(bl_distance_lp(a, b, FiniteMetricSpace::discrete(3)).value, Rational(1, 3));
  EXPECT_EQ(bl_distance_subsets(a, a), Rational(0));
}

TEST(BlDistance, LpMatchesGridSearch) {
  // Optimal test functions take values in the subgroup generated by the
  // distances, so a grid whose step divides every distance is exact.
  for (std::size_t c = 0; c < 150; ++c) {
    Rng rng(21, "bl_grid", c);
    auto n = static_cast<std::size_t>(rng.between(1, 3));
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) d[x][y] = d[y][x] = Rational(rng.between(1, 8), 8);
    // Keep only metrics.
    bool metric = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) metric = metric && d[x][z] <= d[x][y] + d[y][z];
    if (!metric) continue;
    auto m = FiniteMetricSpace::make(SimplexPoint::default_labels(n), d);
    auto p = gen::simplex_point(rng, n, 6), q = gen::simplex_point(rng, n, 6);
    ASSERT_EQ(bl_distance_lp(p, q, m).value, oracle::grid_bl(p.weights(), q.weights(), d, 8)) << "case " << c;
  }
}

TEST(BlDistance, DiscreteIdentity) {
  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(22, "bl_discrete", c);
    auto k = static_cast<std::size_t>(rng.between(1, 8));
    auto p = gen::simplex_point(rng, k, 12), q = gen::simplex_point(rng, k, 12);
    auto lp = bl_distance_lp(p, q, FiniteMetricSpace::discrete(k)).value;
    ASSERT_EQ(lp, oracle::half_l1(p.weights(), q.weights()));
    ASSERT_EQ(lp, oracle::subset_gap(p.weights(), q.weights()));
    ASSERT_EQ(bl_distance_subsets(p, q), lp);
    ASSERT_EQ(half_l1(p.weights(), q.weights()), lp);
  }
}

TEST(SimplexLipschitz, Examples) {
  auto disc = FiniteMetricSpace::discrete(2);
  auto c = check_simplex_lipschitz({sp({Rational(1, 3), Rational(2, 3)}), sp({Rational(1, 3), Rational(2, 3)})},
                                   two_points(Rational(1, 10)));
  EXPECT_TRUE(c.direct && c.subset);
  auto bad = check_simplex_lipschitz({sp({Rational(1), Rational(0)}), sp({Rational(0), Rational(1)})}, two_points(Rational(1, 10)));
  EXPECT_FALSE(bad.direct);
  EXPECT_FALSE(bad.subset);
  EXPECT_EQ(bad.subset_witness["subset"], nlohmann::json::array({0}));
  EXPECT_EQ(bad.subset_witness["gap"], "1/1");
  std::vector<SimplexPoint> vertices;
  for (std::size_t i = 0; i < 3; ++i) vertices.push_back(SimplexPoint::vertex(SimplexPoint::default_labels(3), i));
  auto emb = check_simplex_lipschitz(vertices, FiniteMetricSpace::discrete(3));
  EXPECT_TRUE(emb.direct && emb.subset);
  (void)disc;
}

TEST(NonExpansive, UnitExamples) {
  auto disc = FiniteMetricSpace::discrete(2);
  auto dx = SimplexPoint::vertex(disc.labels(), 0), dy = SimplexPoint::vertex(disc.labels(), 1);
  EXPECT_EQ(bl_distance_lp(dx, dy, disc).value, Rational(1));
  auto close = two_points(Rational(1, 3));
  EXPECT_EQ(bl_distance_lp(dx, dy, close).value, Rational(1, 3));
}

TEST(NonExpansive, MetaDistance) {
  auto m = FiniteMetricSpace::discrete(2);
  auto a = sp({Rational(1), Rational(0)}), b = sp({Rational(0), Rational(1)});
  auto M = MetaPoint::make({{a, Rational(1, 2)}, {b, Rational(1, 2)}});
  EXPECT_EQ(meta_distance(M, M, m).value, Rational(0));
  auto N = MetaPoint::point(a);
  auto d = meta_distance(M, N, m).value;
  EXPECT_LE(bl_distance_lp(mult(M), mult(N), m).value, d);
  EXPECT_EQ(d, Rational(1, 2));
}

TEST(NonExpansive, RandomMetrics) {
  SuiteConfig cfg;
  cfg.cases = 2;
  for (std::size_t c = 0; c < 30; ++c) {
    Rng rng(23, "nonexp_unit", c);
    auto m = random_metric(rng, static_cast<std::size_t>(rng.between(1, 5)), 6);
    auto r = check_bl_monad_nonexpansive(m, cfg, 2, c);
    ASSERT_TRUE(r.ok()) << r.to_text();
  }
}
