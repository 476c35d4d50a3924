#include <giry/codensity.hpp>

#include <gtest/gtest.h>

using namespace giry;

namespace {

Subset S(std::size_t n, std::initializer_list<std::size_t> pts) { return Subset::of(n, pts); }

// Independent oracle: the weights P assigns to the atoms, read off legs of the
// indicator arrows.
std::vector<Rational> indicator_table(const Cone& c, const Algebra& x) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < x.atom_count(); ++k) {
    auto leg = c.leg(hat(SimpleFunction::indicator(x, x.atom(k))));
    out.push_back(leg ? (*leg)[1] : Rational(-1));
  }
  return out;
}

}  // namespace

TEST(Hat, Examples) {
  auto x = Algebra::powerset(GroundSet::range(3));
  auto one = hat(SimpleFunction::constant(x, Rational(1)));
  for (const auto& row : one.rows()) EXPECT_EQ(row.weights(), (std::vector<Rational>{Rational(0), Rational(1)}));
  auto zero = hat(SimpleFunction::constant(x, Rational(0)));
  for (const auto& row : zero.rows()) EXPECT_EQ(row.weights(), (std::vector<Rational>{Rational(1), Rational(0)}));
  auto ind = hat(SimpleFunction::indicator(x, S(3, {1})));
  EXPECT_EQ(ind.row(1)[1], Rational(1));
  EXPECT_EQ(ind.row(0)[0], Rational(1));
}

TEST(Arrow, RejectsNonMeasurableRows) {
  auto x = Algebra::from_atoms(GroundSet::range(2), {Subset::full(2)});
  auto a = SimplexPoint::make({Rational(1), Rational(0)}), b = SimplexPoint::make({Rational(0), Rational(1)});
  EXPECT_THROW(Arrow::make(x, SimplexPoint::default_labels(2), {a, b}), giry::error);
}

TEST(Cone, LegsOfMeasure) {
  auto x = Algebra::powerset(GroundSet::range(3));
  auto d = dirac(1, x);
  auto f = hat(SimpleFunction::from_point_values(x, {Rational(1, 4), Rational(1, 2), Rational(1)}));
  EXPECT_EQ(cone_of_measure(d, {f}).legs[0][1], Rational(1, 2));
  // The identity-like arrow with components 1_{a}.
  std::vector<SimplexPoint> rows;
  for (std::size_t i = 0; i < 3; ++i) rows.push_back(SimplexPoint::vertex(SimplexPoint::default_labels(3), i));
  auto id = Arrow::make(x, SimplexPoint::default_labels(3), rows);
  auto u = Measure::uniform(x);
  EXPECT_EQ(cone_of_measure(u, {id}).legs[0].weights(), (std::vector<Rational>(3, Rational(1, 3))));
  auto p = SimplexPoint::make({Rational(1, 5), Rational(4, 5)});
  EXPECT_EQ(cone_of_measure(u, {Arrow::constant(x, p)}).legs[0], p);
}

TEST(Cone, NaturalityAndPerturbation) {
  auto x = Algebra::powerset(GroundSet::range(3));
  auto p = Measure::make(x, {Rational(1, 7), Rational(2, 7), Rational(4, 7)});
  auto c = cone_of_measure(p, closed_family(x, 3));
  auto nat = check_cone_naturality(c);
  EXPECT_TRUE(nat.ok);
  EXPECT_GT(nat.triangles, 0U);
  auto target = hat(SimpleFunction::indicator(x, S(3, {0})));
  for (std::size_t i = 0; i < c.arrows.size(); ++i)
    if (c.arrows[i] == target)
      c.legs[i] = SimplexPoint::make(c.legs[i].labels(), {c.legs[i][0] - Rational(1, 100), c.legs[i][1] + Rational(1, 100)});
  auto broken = check_cone_naturality(c);
  EXPECT_FALSE(broken.ok);
  EXPECT_TRUE(broken.witness.has_value());
  EXPECT_THROW((void)reconstruct_from_cone(c), reconstruction_error);
}

TEST(Cone, NoTrianglesIsVacuous) {
  auto x = Algebra::powerset(GroundSet::range(2));
  auto p = Measure::uniform(x);
  auto c = cone_of_measure(p, {hat(SimpleFunction::indicator(x, S(2, {0})))});
  EXPECT_TRUE(check_cone_naturality(c).ok);
}

TEST(Cone, RoundTrip) {
  auto x = Algebra::powerset(GroundSet::range(3));
  auto p = Measure::make(x, {Rational(1, 7), Rational(2, 7), Rational(4, 7)});
  auto c = cone_of_measure(p, closed_family(x, 3));
  EXPECT_EQ(indicator_table(c, x), p.weights());
  EXPECT_EQ(reconstruct_from_cone(c), p);
  auto d = dirac(0, x);
  EXPECT_EQ(reconstruct_from_cone(cone_of_measure(d, closed_family(x, 2))), d);
  auto q = Measure::uniform(x);
  EXPECT_NE(cone_of_measure(q, closed_family(x, 2)).legs, cone_of_measure(p, closed_family(x, 2)).legs);
}

TEST(SmallIndex, DeterminationByArity) {
  auto x = Algebra::powerset(GroundSet::range(3));
  EXPECT_FALSE(legs_determine_measure(x, closed_family(x, 1)));
  EXPECT_TRUE(legs_determine_measure(x, closed_family(x, 2)));
  EXPECT_TRUE(legs_determine_measure(x, closed_family(x, 3)));
  // A single-atom space is determined by normalization alone.
  auto t = Algebra::trivial(GroundSet::range(2));
  EXPECT_TRUE(legs_determine_measure(t, closed_family(t, 1)));
}

TEST(SmallIndex, Suites) {
  SuiteConfig cfg;
  cfg.cases = 20;
  cfg.max_ground_size = 4;
  for (std::size_t k = 1; k <= 3; ++k) {
    auto r = small_index_sufficiency(cfg, k);
    EXPECT_TRUE(r.ok()) << r.to_text();
  }
  EXPECT_TRUE(verify_codensity_bijection(cfg, 3).ok());
}
