#pragma once

// Random instances for the verification suites.

#include "integrate.hpp"
#include "measure.hpp"
#include "random.hpp"
#include "setalg.hpp"
#include "simplex.hpp"

#include <cstddef>
#include <vector>

namespace giry::gen {

/// Algebra on {0..n-1} from a uniformly random block assignment.
inline Algebra algebra(Rng& rng, std::size_t n) {
  auto ground = GroundSet::range(n);
  std::vector<Subset> blocks(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x) blocks[rng.below(n)].set(x);
  std::vector<Subset> atoms;
  for (auto& b : blocks)
    if (!b.empty()) atoms.push_back(std::move(b));
  return Algebra::from_atoms(std::move(ground), std::move(atoms));
}

/// Random algebra with at least `min_atoms` atoms (n >= min_atoms required).
inline Algebra algebra_with_atoms(Rng& rng, std::size_t n, std::size_t min_atoms) {
  for (;;) {
    auto a = algebra(rng, n);
    if (a.atom_count() >= min_atoms) return a;
  }
}

/// Measure with weights of denominator <= max_den. Variant 0 puts all mass on
/// one atom, variant 1 is uniform, anything else is random.
inline Measure measure(Rng& rng, const Algebra& alg, long max_den, Additivity mode, std::size_t variant = 2) {
  const std::size_t k = alg.atom_count();
  if (variant == 0) {
    std::vector<Rational> w(k);
    w[rng.below(k)] = Rational(1);
    return Measure::make(alg, std::move(w), mode);
  }
  if (variant == 1) return Measure::uniform(alg, mode);
  return Measure::make(alg, rng.simplex_weights(k, max_den), mode);
}

inline SimpleFunction simple_function(Rng& rng, const Algebra& alg, long max_den) {
  std::vector<Rational> v(alg.atom_count());
  for (auto& x : v) x = rng.unit_rational(max_den);
  return SimpleFunction::from_atom_values(alg, std::move(v));
}

/// Pair (f, g) with f + g <= 1 pointwise.
inline std::pair<SimpleFunction, SimpleFunction> summable_pair(Rng& rng, const Algebra& alg, long max_den) {
  std::vector<Rational> f(alg.atom_count()), g(alg.atom_count());
  for (std::size_t k = 0; k < f.size(); ++k) {
    auto w = rng.simplex_weights(3, max_den);
    f[k] = w[0];
    g[k] = w[1];
  }
  return {SimpleFunction::from_atom_values(alg, std::move(f)), SimpleFunction::from_atom_values(alg, std::move(g))};
}

/// Premeasurable map dom -> cod: each domain atom lands inside one codomain
/// atom, with points spread at random inside it.
inline PointMap premeasurable_map(Rng& rng, const Algebra& dom, const Algebra& cod) {
  PointMap f(dom.universe());
  for (std::size_t k = 0; k < dom.atom_count(); ++k) {
    auto target = cod.atom(rng.below(cod.atom_count())).indices();
    for (auto x : dom.atom(k).indices()) f[x] = target[rng.below(target.size())];
  }
  return f;
}

inline SimplexPoint simplex_point(Rng& rng, std::size_t k, long max_den) {
  return SimplexPoint::make(rng.simplex_weights(k, max_den));
}

}  // namespace giry::gen
