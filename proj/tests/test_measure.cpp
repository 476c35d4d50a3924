#include "oracles.hpp"

#include <giry/generate.hpp>
#include <giry/integrate.hpp>
#include <giry/measure.hpp>
#include <giry/random.hpp>

#include <gtest/gtest.h>

using namespace giry;

namespace {

Subset S(std::size_t n, std::initializer_list<std::size_t> pts) { return Subset::of(n, pts); }

Algebra two_block() {
  return Algebra::from_family(GroundSet::range(3), SubsetFamily(3, {Subset(3), S(3, {0}), S(3, {1, 2}), Subset::full(3)}));
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational(1, 2).str(), "1/2");
  EXPECT_EQ(Rational(2).str(), "2/1");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(" 1"), std::invalid_argument);
}

TEST(Measure, Evaluate) {
  auto p = Measure::uniform(Algebra::powerset(GroundSet::range(3)));
  EXPECT_EQ(evaluate(p, S(3, {0, 2})), Rational(2, 3));
  EXPECT_EQ(evaluate(p, Subset::full(3)), Rational(1));
  EXPECT_EQ(evaluate(p, Subset(3)), Rational(0));
  EXPECT_THROW(evaluate(Measure::uniform(two_block()), S(3, {1})), domain_error);
}

TEST(Measure, Dirac) {
  auto ab = Algebra::powerset(GroundSet::make({"a", "b"}));
  EXPECT_EQ(evaluate(dirac("a", ab), S(2, {0})), Rational(1));
  EXPECT_EQ(evaluate(dirac("a", ab), S(2, {1})), Rational(0));
  EXPECT_EQ(evaluate(dirac(1, two_block()), S(3, {1, 2})), Rational(1));
  EXPECT_EQ(evaluate(dirac(2, two_block()), Subset::full(3)), Rational(1));
}

TEST(Measure, Validate) {
  auto alg = Algebra::powerset(GroundSet::range(3));
  std::vector<Rational> short_mass{Rational(3, 10), Rational(3, 10), Rational(3, 10)};
  auto v = validate(alg, short_mass);
  ASSERT_FALSE(v.ok);
  EXPECT_EQ(v.diagnostics.front().kind, "normalization");
  EXPECT_TRUE(validate(alg, std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(0)}).ok);
  EXPECT_THROW(Measure::make(alg, short_mass), giry::error);
  EXPECT_THROW(Measure::make(alg, {Rational(3, 2), Rational(-1, 2), Rational(0)}), giry::error);
}

TEST(Measure, Pushforward) {
  auto dom = Algebra::powerset(GroundSet::range(3));
  auto cod = Algebra::powerset(GroundSet::range(2));
  auto q = pushforward(Measure::uniform(dom), {0, 0, 1}, cod);
  EXPECT_EQ(q.weights(), (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
  auto p = Measure::make(dom, {Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  EXPECT_EQ(pushforward(p, {1, 1, 1}, cod), dirac(1, cod));
  EXPECT_EQ(pushforward(p, {0, 1, 2}, dom), p);
  EXPECT_THROW(pushforward(Measure::uniform(two_block()), {0, 0, 1}, cod), giry::error);
}

TEST(Measure, PushforwardFunctorial) {
  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(11, "push_functorial", c);
    auto x = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, 5)));
    auto y = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, 5)));
    auto z = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, 5)));
    auto f = gen::premeasurable_map(rng, x, y);
    auto g = gen::premeasurable_map(rng, y, z);
    PointMap gf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) gf[i] = g[f[i]];
    auto p = gen::measure(rng, x, 12, Additivity::sigma, c % 4);
    ASSERT_EQ(pushforward(pushforward(p, f, y), g, z), pushforward(p, gf, z));
  }
}

TEST(SimpleFunction, Canonical) {
  auto x2 = Algebra::powerset(GroundSet::range(2));
  auto half = SimpleFunction::from_terms(Algebra::trivial(GroundSet::range(2)), {{Rational(1, 2), Subset::full(2)}});
  EXPECT_EQ(half.point_values(), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  auto s = SimpleFunction::from_terms(x2, {{Rational(1, 2), S(2, {0})}, {Rational(1, 2), Subset::full(2)}});
  EXPECT_EQ(s.point_values(), (std::vector<Rational>{Rational(1), Rational(1, 2)}));
  auto a = SimpleFunction::from_terms(x2, {{Rational(1, 2), Subset::full(2)}});
  auto b = SimpleFunction::from_terms(x2, {{Rational(1, 2), S(2, {0})}, {Rational(1, 2), S(2, {1})}});
  EXPECT_EQ(a, b);
  EXPECT_THROW(SimpleFunction::from_terms(x2, {{Rational(1), S(2, {0})}, {Rational(1), Subset::full(2)}}), range_error);
}

TEST(Integral, Examples) {
  auto x3 = Algebra::powerset(GroundSet::range(3));
  auto u = Measure::uniform(x3);
  EXPECT_EQ(j_integral(u, SimpleFunction::constant(x3, Rational(1))), Rational(1));
  auto s = SimpleFunction::from_terms(x3, {{Rational(1, 2), S(3, {0})}, {Rational(1, 2), S(3, {0, 1})}});
  EXPECT_EQ(j_integral(u, s), Rational(1, 2));
  EXPECT_EQ(j_integral(u, SimpleFunction::indicator(x3, S(3, {1, 2}))), Rational(2, 3));
  auto u2 = Measure::uniform(Algebra::powerset(GroundSet::range(2)));
  auto f = SimpleFunction::from_point_values(u2.algebra(), {Rational(1), Rational(1, 2)});
  EXPECT_EQ(i_integral(u2, f), Rational(3, 4));
  EXPECT_EQ(i_integral(u2, SimpleFunction::constant(u2.algebra(), Rational(0))), Rational(0));
}

TEST(Integral, AgreesWithPointDensity) {
  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(5, "integral_density", c);
    auto n = static_cast<std::size_t>(rng.between(1, 5));
    auto x = Algebra::powerset(GroundSet::range(n));
    auto p = gen::measure(rng, x, 12, Additivity::sigma, c % 4);
    auto f = gen::simple_function(rng, x, 12);
    ASSERT_EQ(j_integral(p, f), oracle::point_integral(f.point_values(), p.weights()));
  }
}

TEST(Integral, RepresentationIndependence) {
  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(6, "integral_repr", c);
    auto x = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, 5)));
    auto p = gen::measure(rng, x, 12, Additivity::sigma, c % 4);
    auto f = gen::simple_function(rng, x, 6);
    // Split every atom value into a chain of nested members.
    std::vector<Term> terms;
    for (std::size_t k = 0; k < x.atom_count(); ++k) {
      auto v = f.on_atom(k);
      terms.push_back({v / Rational(3), x.atom(k)});
      terms.push_back({v - v / Rational(3), x.atom(k)});
    }
    auto g = SimpleFunction::from_terms(x, terms);
    ASSERT_EQ(f, g);
    ASSERT_EQ(j_integral(p, f), j_integral(p, g));
  }
}

TEST(IntegralProperties, Examples) {
  auto x3 = Algebra::powerset(GroundSet::range(3));
  auto u = Measure::uniform(x3);
  auto f = SimpleFunction::constant(x3, Rational(1, 3));
  auto g = SimpleFunction::indicator(x3, S(3, {0}));
  g = scale(g, Rational(1, 3));
  EXPECT_EQ(j_integral(u, add(f, g)), Rational(4, 9));
  auto a = SimpleFunction::indicator(x3, S(3, {0, 1}));
  auto ac = SimpleFunction::indicator(x3, S(3, {2}));
  auto rep = check_integral_properties(u, {f, g, a, ac, SimpleFunction::constant(x3, Rational(0))});
  EXPECT_TRUE(rep.ok());
  for (const char* clause : {"i", "ii", "iii", "iv", "v", "vi"}) EXPECT_GT(rep.clause(clause).checked, 0U) << clause;
}
