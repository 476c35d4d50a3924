#include <giry/monad.hpp>

#include <gtest/gtest.h>

using namespace giry;

namespace {

Algebra x2() { return Algebra::powerset(GroundSet::range(2)); }

Measure m2(long a, long b, long den) { return Measure::make(x2(), {Rational(a, den), Rational(b, den)}); }

}  // namespace

TEST(FiniteDistribution, MergesAndDropsZeros) {
  auto d = FiniteDistribution<int>::make({{1, Rational(1, 4)}, {2, Rational(0)}, {1, Rational(1, 4)}, {3, Rational(1, 2)}});
  EXPECT_EQ(d.size(), 2U);
  EXPECT_EQ(d.mass_of(1), Rational(1, 2));
  EXPECT_EQ(d.mass_of(2), Rational(0));
  auto e = FiniteDistribution<int>::make({{3, Rational(1, 2)}, {1, Rational(1, 2)}});
  EXPECT_EQ(d, e);
  EXPECT_THROW(FiniteDistribution<int>::make({{1, Rational(1, 2)}}), giry::error);
}

TEST(Mult, Examples) {
  auto p = m2(1, 2, 3);
  EXPECT_EQ(mult(MetaMeasure::point(p)), p);
  auto m = MetaMeasure::make({{m2(1, 0, 1), Rational(1, 2)}, {m2(0, 1, 1), Rational(1, 2)}});
  EXPECT_EQ(mult(m), m2(1, 1, 2));
  // Support equal to P gives P whatever the weights.
  auto same = MetaMeasure::make({{p, Rational(1, 5)}, {p, Rational(4, 5)}});
  EXPECT_EQ(mult(same), p);
}

TEST(Mult, AssociativityWorked) {
  auto a = m2(1, 0, 1), b = m2(0, 1, 1), c = m2(1, 1, 2);
  auto m1 = MetaMeasure::make({{a, Rational(1, 2)}, {b, Rational(1, 2)}});
  auto m2_ = MetaMeasure::make({{c, Rational(1)}});
  auto m3 = MetaMeasure::make({{a, Rational(1, 3)}, {c, Rational(2, 3)}});
  auto mm = MetaMetaMeasure::make({{m1, Rational(1, 4)}, {m2_, Rational(1, 4)}, {m3, Rational(1, 2)}});
  auto lhs = mult(mm.map([](const MetaMeasure& m) { return mult(m); }));
  auto rhs = mult(flatten(mm));
  EXPECT_EQ(lhs, rhs);
  // Expanded by hand: a gets 1/8 + 1/6, b gets 1/8, c gets 1/4 + 1/3.
  Rational wa = Rational(1, 8) + Rational(1, 6), wb(1, 8), wc = Rational(1, 4) + Rational(1, 3);
  EXPECT_EQ(lhs.weight(0), wa + wc / Rational(2));
  EXPECT_EQ(lhs.weight(1), wb + wc / Rational(2));
}

TEST(Unit, RightUnitOnPowersetOfTwo) {
  for (long a = 0; a <= 12; ++a) {
    auto p = m2(a, 12 - a, 12);
    EXPECT_EQ(mult(pushforward_unit(p)), p);
    EXPECT_EQ(mult(MetaMeasure::point(p)), p);
  }
}

TEST(Laws, RandomCasesOnPowersetOfTwo) {
  SuiteConfig cfg;
  cfg.cases = 100;
  for (auto mode : {Additivity::sigma, Additivity::finite}) {
    cfg.mode = mode;
    auto r = check_monad_laws(x2(), cfg);
    EXPECT_TRUE(r.ok()) << r.to_text();
    for (const char* law : {"left_unit", "right_unit", "associativity", "unit_naturality", "mult_naturality"}) {
      ASSERT_NE(r.find(law), nullptr) << law;
      EXPECT_EQ(r.find(law)->passed, 100U) << law;
    }
  }
}

TEST(Laws, ModeIsCarriedThrough) {
  auto p = m2(1, 3, 4).with_mode(Additivity::finite);
  EXPECT_EQ(mult(MetaMeasure::point(p)).mode(), Additivity::finite);
  EXPECT_EQ(mult(pushforward_unit(p)).mode(), Additivity::finite);
}

TEST(GMap, Examples) {
  auto p = SimplexPoint::make({Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  auto q = g_map(LabelMap{0, 0, 1}, SimplexPoint::default_labels(2), p);
  EXPECT_EQ(q.weights(), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(g_map(LabelMap{0, 1, 2}, p.labels(), p), p);
  EXPECT_EQ(g_map(LabelMap{1, 1, 1}, SimplexPoint::default_labels(2), p), SimplexPoint::vertex(SimplexPoint::default_labels(2), 1));
}

TEST(MonadLawSuite, Deterministic) {
  SuiteConfig cfg;
  cfg.cases = 30;
  EXPECT_EQ(monad_law_suite(cfg).to_json().dump(), monad_law_suite(cfg).to_json().dump());
  auto other = cfg;
  other.seed = 1;
  EXPECT_TRUE(monad_law_suite(other).ok());
}
