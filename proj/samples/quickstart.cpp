// A fair coin, its integral, and the measure recovered from integrals alone.

#include <giry/giry.hpp>

#include <iostream>

int main() {
  using namespace giry;

  auto coin = Algebra::powerset(GroundSet::make({"heads", "tails"}));
  auto p = Measure::make(coin, {Rational(1, 3), Rational(2, 3)});

  auto bet = SimpleFunction::from_point_values(coin, {Rational(1), Rational(1, 4)});
  std::cout << "J_P(bet) = " << j_integral(p, bet) << "\n";

  auto F = Functional::integration(p, {SimpleFunction::indicator(coin, Subset::singleton(2, 0)),
                                       SimpleFunction::indicator(coin, Subset::singleton(2, 1)),
                                       SimpleFunction::constant(coin, Rational(1)), bet});
  auto back = reconstruct_measure(F);
  std::cout << "reconstructed: " << back.weight(0) << ", " << back.weight(1) << "\n";

  auto d = bl_distance_lp(SimplexPoint::make({Rational(1, 2), Rational(1, 2), Rational(0)}),
                          SimplexPoint::make({Rational(1, 3), Rational(1, 3), Rational(1, 3)}),
                          FiniteMetricSpace::discrete(3));
  std::cout << "d_L = " << d.value << "\n";

  std::cout << monad_law_suite(SuiteConfig{}.with(3, 6, 20)).to_text();
}
