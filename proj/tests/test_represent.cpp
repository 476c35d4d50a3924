#include "oracles.hpp"

#include <giry/generate.hpp>
#include <giry/represent.hpp>

#include <gtest/gtest.h>

using namespace giry;

namespace {

Subset S(std::size_t n, std::initializer_list<std::size_t> pts) { return Subset::of(n, pts); }

std::vector<SimpleFunction> indicators(const Algebra& x) {
  std::vector<SimpleFunction> out;
  for (const auto& m : x.members()) out.push_back(SimpleFunction::indicator(x, m));
  return out;
}

PointFunction pf(std::initializer_list<Rational> v) { return PointFunction(v); }

}  // namespace

// ---------------------------------------------------------------------------
// Reconstruction

TEST(Reconstruct, IntegrationRoundTrip) {
  auto x3 = Algebra::powerset(GroundSet::range(3));
  auto u = Measure::uniform(x3);
  EXPECT_EQ(reconstruct_measure(Functional::integration(u, indicators(x3))), u);
  auto p = Measure::make(x3, {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  auto q = reconstruct_charge(Functional::integration(p, indicators(x3)));
  EXPECT_EQ(q, p);
  EXPECT_EQ(q.mode(), Additivity::finite);
  auto ab = Algebra::powerset(GroundSet::make({"a", "b"}));
  EXPECT_EQ(reconstruct_measure(Functional::integration(dirac(0, ab), indicators(ab))), dirac(0, ab));
}

TEST(Reconstruct, PointEvaluationGivesDirac) {
  auto x3 = Algebra::powerset(GroundSet::range(3));
  auto F = Functional::from_callback(x3, [](const SimpleFunction& s) { return s.at(2); }, indicators(x3));
  EXPECT_EQ(reconstruct_measure(F), dirac(2, x3));
}

TEST(Reconstruct, ComplementViolation) {
  auto x2 = Algebra::powerset(GroundSet::range(2));
  auto F = Functional::from_table(x2, indicators(x2), {Rational(0), Rational(3, 4), Rational(3, 4), Rational(1)});
  try {
    (void)reconstruct_measure(F);
    FAIL() << "violation not detected";
  } catch (const reconstruction_error& e) {
    EXPECT_EQ(e.witness()["clause"], "additivity");
    EXPECT_EQ(e.witness()["I(f+g)"], "1/1");
  }
}

TEST(Reconstruct, ThreeTermViolation) {
  auto x3 = Algebra::powerset(GroundSet::range(3));
  std::vector<SimpleFunction> fam{SimpleFunction::indicator(x3, S(3, {0})), SimpleFunction::indicator(x3, S(3, {1})),
                                  SimpleFunction::indicator(x3, S(3, {2})), SimpleFunction::constant(x3, Rational(1))};
  auto F = Functional::from_table(x3, fam, {Rational(1, 2), Rational(1, 4), Rational(1, 2), Rational(1)});
  try {
    (void)reconstruct_measure(F);
    FAIL() << "violation not detected";
  } catch (const reconstruction_error& e) {
    EXPECT_EQ(e.witness()["clause"], "finite_sum_additivity");
    EXPECT_EQ(e.witness()["sum_of_values"], "5/4");
  }
}

TEST(Reconstruct, TableNeedsAtomIndicators) {
  auto x2 = Algebra::powerset(GroundSet::range(2));
  auto F = Functional::from_table(x2, {SimpleFunction::constant(x2, Rational(1))}, {Rational(1)});
  EXPECT_THROW((void)reconstruct_measure(F), reconstruction_error);
}

TEST(Reconstruct, HomogeneityOnRandomMeasures) {
  for (std::size_t c = 0; c < 100; ++c) {
    Rng rng(9, "represent_homogeneity", c);
    auto x = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, 5)));
    auto p = gen::measure(rng, x, 12, Additivity::sigma, c % 4);
    auto fam = indicators(x);
    auto back = reconstruct_measure(Functional::integration(p, fam));
    ASSERT_EQ(back, p);
    auto f = gen::simple_function(rng, x, 12);
    for (long k = 0; k <= 6; ++k) {
      Rational r(k, 6);
      ASSERT_EQ(j_integral(back, scale(f, r)), r * j_integral(back, f));
    }
  }
}

// ---------------------------------------------------------------------------
// Weak integration lattices

TEST(Lattice, StepFunctionsOnAtoms) {
  auto x = Algebra::from_atoms(GroundSet::range(3), {S(3, {0}), S(3, {1, 2})});
  WeakIntegrationLattice L;
  L.ground = x.ground();
  // Every [0,1] function constant on the atoms with values of denominator <= 2.
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b) L.functions.push_back(pf({Rational(a, 2), Rational(b, 2), Rational(b, 2)}));
  EXPECT_TRUE(check_weak_lattice(L));
}

TEST(Lattice, ConstantOne) {
  WeakIntegrationLattice L;
  L.ground = GroundSet::range(2);
  L.functions = {pf({Rational(1), Rational(1)})};
  EXPECT_TRUE(check_weak_lattice(L));
}

TEST(Lattice, MissingDifference) {
  WeakIntegrationLattice L;
  L.ground = GroundSet::range(2);
  L.functions = {pf({Rational(1), Rational(1)}), pf({Rational(1, 2), Rational(1)})};
  auto c = check_weak_lattice(L);
  ASSERT_FALSE(c);
  EXPECT_EQ(c.clause, "join_minus_meet");
}

// ---------------------------------------------------------------------------
// Slabs

TEST(Slab, Examples) {
  auto one = pf({Rational(1)});
  auto zero = pf({Rational(0)});
  auto full = Slab::make(zero, one);
  EXPECT_EQ(slab_intersect(full, full), full);
  auto f = pf({Rational(1, 3)});
  EXPECT_TRUE(slab_intersect(Slab::make(zero, f), Slab::make(f, one)).empty());
  EXPECT_EQ(slab_intersect(full, Slab::make(pf({Rational(1, 2)}), one)), Slab::make(pf({Rational(1, 2)}), one));
  EXPECT_TRUE(slab_subtract(full, full).empty());
  EXPECT_EQ(slab_subtract(full, Slab::make(zero, zero)), std::vector<Slab>{full});
  auto d = slab_subtract(full, Slab::make(pf({Rational(1, 4)}), pf({Rational(1, 2)})));
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0], Slab::make(zero, pf({Rational(1, 4)})));
  EXPECT_EQ(d[1], Slab::make(pf({Rational(1, 2)}), one));
}

TEST(Slab, ExtensionalSemantics) {
  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(4, "slab_unit", c);
    auto n = static_cast<std::size_t>(rng.between(1, 4));
    auto bound = [&] {
      PointFunction f(n);
      for (auto& v : f) v = Rational(rng.between(0, 4), 4);
      return f;
    };
    auto a = Slab::make(bound(), bound()), b = Slab::make(bound(), bound());
    auto inter = slab_intersect(a, b);
    auto diff = slab_subtract(a, b);
    for (std::size_t x = 0; x < n; ++x)
      for (long t8 = 0; t8 <= 8; ++t8) {
        Rational t(t8, 8);
        bool in_a = oracle::in_interval(a.lower[x], a.upper[x], t), in_b = oracle::in_interval(b.lower[x], b.upper[x], t);
        ASSERT_EQ(inter.contains(x, t), in_a && in_b);
        std::size_t hits = 0;
        for (const auto& s : diff) hits += s.contains(x, t) ? 1 : 0;
        ASSERT_EQ(hits, (in_a && !in_b) ? 1U : 0U);
      }
  }
}

// ---------------------------------------------------------------------------
// Caratheodory

TEST(Caratheodory, SingletonsGiveUniform) {
  auto g = GroundSet::range(3);
  std::map<Subset, Rational> mu{{Subset(3), Rational(0)}};
  std::vector<Subset> fam{Subset(3)};
  for (std::size_t i = 0; i < 3; ++i) {
    fam.push_back(Subset::singleton(3, i));
    mu[Subset::singleton(3, i)] = Rational(1, 3);
  }
  auto e = caratheodory_extend(SemiRing::make(g, SubsetFamily(3, fam)), mu);
  EXPECT_EQ(e.measure(), Measure::uniform(Algebra::powerset(g)));
  EXPECT_EQ(e.evaluate(S(3, {0, 2})), Rational(2, 3));
}

TEST(Caratheodory, AlgebraIsFixed) {
  auto x = Algebra::from_atoms(GroundSet::range(4), {S(4, {0, 1}), S(4, {2}), S(4, {3})});
  auto p = Measure::make(x, {Rational(1, 5), Rational(3, 5), Rational(1, 5)});
  std::map<Subset, Rational> mu;
  for (const auto& m : x.members()) mu[m] = evaluate(p, m);
  auto e = caratheodory_extend(SemiRing::make(x.ground(), x.members()), mu);
  EXPECT_EQ(e.measure(), p);
}

TEST(Caratheodory, NonAdditiveWitness) {
  auto g = GroundSet::range(2);
  auto fam = SubsetFamily(2, {Subset(2), S(2, {0}), S(2, {1}), Subset::full(2)});
  std::map<Subset, Rational> mu{{Subset(2), Rational(0)}, {S(2, {0}), Rational(1, 2)}, {S(2, {1}), Rational(3, 4)}, {Subset::full(2), Rational(1)}};
  try {
    (void)caratheodory_extend(SemiRing::make(g, fam), mu);
    FAIL() << "non-additivity not detected";
  } catch (const extension_error& e) {
    EXPECT_EQ(e.witness()["set"], nlohmann::json::array({0, 1}));
  }
}

// ---------------------------------------------------------------------------
// Daniell-Stone

TEST(DaniellStone, IndicatorLatticeOnTwoPoints) {
  auto x = Algebra::powerset(GroundSet::range(2));
  auto p = Measure::make(x, {Rational(1, 3), Rational(2, 3)});
  WeakIntegrationLattice L;
  L.ground = x.ground();
  L.functions = {pf({Rational(1), Rational(1)}), pf({Rational(1), Rational(0)}), pf({Rational(0), Rational(1)})};
  auto I = [&](const PointFunction& f) { return oracle::point_integral(f, p.weights()); };
  auto res = daniell_stone(L, I);
  EXPECT_EQ(res.measure, p);
  ASSERT_TRUE(res.direct.has_value());
  EXPECT_EQ(*res.direct, p);
}

TEST(DaniellStone, ConstantOneGivesTrivialAlgebra) {
  WeakIntegrationLattice L;
  L.ground = GroundSet::range(3);
  L.functions = {pf({Rational(1), Rational(1), Rational(1)})};
  auto res = daniell_stone(L, [](const PointFunction& f) { return f[0]; });
  EXPECT_EQ(res.measure.algebra().atom_count(), 1U);
  EXPECT_EQ(res.measure.weight(0), Rational(1));
}

TEST(DaniellStone, LipschitzFunctionsAndDirac) {
  // Under the discrete metric every [0,1]-valued function is 1-Lipschitz.
  WeakIntegrationLattice L;
  L.ground = GroundSet::range(3);
  L.member = [](const PointFunction& f) {
    return std::all_of(f.begin(), f.end(), [](const Rational& v) { return in_unit_interval(v); });
  };
  L.functions = {pf({Rational(1), Rational(1), Rational(1)}), pf({Rational(0), Rational(1, 2), Rational(1)})};
  auto res = daniell_stone(L, [](const PointFunction& f) { return f[1]; });
  auto full = Algebra::powerset(L.ground);
  EXPECT_EQ(res.measure, dirac(1, full));
  EXPECT_FALSE(res.level_witnesses.empty());
}

TEST(DaniellStone, AgreesWithDensityOnStepLattices) {
  for (std::size_t c = 0; c < 40; ++c) {
    Rng rng(12, "ds_unit", c);
    auto x = gen::algebra(rng, static_cast<std::size_t>(rng.between(1, 4)));
    auto p = gen::measure(rng, x, 6, Additivity::sigma, c % 4);
    WeakIntegrationLattice L;
    L.ground = x.ground();
    L.member = [x](const PointFunction& f) {
      for (const auto& v : f)
        if (!in_unit_interval(v)) return false;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != f[x.representative(x.atom_of(i))]) return false;
      return true;
    };
    L.functions = {PointFunction(x.universe(), Rational(1)), gen::simple_function(rng, x, 2).point_values()};
    // Density on the atom representatives.
    std::vector<Rational> density(x.universe());
    for (std::size_t k = 0; k < x.atom_count(); ++k) density[x.representative(k)] = p.weight(k);
    auto res = daniell_stone(L, [&](const PointFunction& f) { return oracle::point_integral(f, density); });
    for (std::size_t k = 0; k < res.measure.algebra().atom_count(); ++k)
      ASSERT_EQ(res.measure.weight(k), evaluate(p, res.measure.algebra().atom(k)));
  }
}
