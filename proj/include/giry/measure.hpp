#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "setalg.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace giry {

/// Sigma-additive probability measure or finitely additive charge. On a finite
/// algebra the two coincide numerically; the flag records which theory a value
/// belongs to and is preserved by every operation.
enum class Additivity { sigma, finite };

inline const char* to_string(Additivity m) { return m == Additivity::sigma ? "sigma" : "finitely_additive"; }

struct MeasureDiagnostic {
  std::string kind;  // "normalization", "negative", "range", "additivity", "shape"
  std::string message;
  std::vector<std::size_t> atoms;  // atoms involved, when applicable
};

struct MeasureValidation {
  bool ok = true;
  std::vector<MeasureDiagnostic> diagnostics;
  explicit operator bool() const { return ok; }
};

namespace detail {
inline Rational sum_over(std::span<const Rational> weights, const Subset& atom_selection) {
  Rational s;
  for (auto k : atom_selection.indices()) s += weights[k];
  return s;
}
}  // namespace detail

/// Exact check of a candidate atom-weight vector: shape, nonnegativity, range,
/// normalization, and P(A u B) = P(A) + P(B) over every disjoint member pair.
///
/// Additivity is enumerated over all 3^k disjoint pairs while k <= 10; beyond
/// that (or with `check_additivity` off) it holds structurally because member
/// values are atom sums.
inline MeasureValidation validate(const Algebra& algebra, std::span<const Rational> weights,
                                  bool check_additivity = true) {
  MeasureValidation v;
  auto fail = [&](std::string kind, std::string msg, std::vector<std::size_t> atoms = {}) {
    v.ok = false;
    v.diagnostics.push_back({std::move(kind), std::move(msg), std::move(atoms)});
  };
  const std::size_t k = algebra.atom_count();
  if (weights.size() != k) {
    fail("shape", "expected " + std::to_string(k) + " atom weights, got " + std::to_string(weights.size()));
    return v;
  }
  Rational total;
  for (std::size_t i = 0; i < k; ++i) {
    if (weights[i].sign() < 0) fail("negative", "atom " + std::to_string(i) + " has weight " + weights[i].str(), {i});
    if (weights[i] > Rational(1)) fail("range", "atom " + std::to_string(i) + " has weight " + weights[i].str(), {i});
    total += weights[i];
  }
  if (total != Rational(1)) fail("normalization", "weights sum to " + total.str());
  if (check_additivity && k <= 10) {
    // Each atom is in A, in B, or in neither: base-3 digits enumerate the pairs.
    std::size_t pairs = 1;
    for (std::size_t i = 0; i < k; ++i) pairs *= 3;
    for (std::size_t code = 0; code < pairs; ++code) {
      Subset a(k), b(k);
      std::size_t c = code;
      for (std::size_t i = 0; i < k; ++i, c /= 3) {
        if (c % 3 == 1) a.set(i);
        if (c % 3 == 2) b.set(i);
      }
      auto lhs = detail::sum_over(weights, a | b);
      auto rhs = detail::sum_over(weights, a) + detail::sum_over(weights, b);
      if (lhs != rhs) fail("additivity", "P(A u B) != P(A) + P(B)", (a | b).indices());
    }
  }
  return v;
}

/// Probability measure (or charge) on a finite algebra, stored by atom weights.
class Measure {
 public:
  Measure() = default;

  /// Throws precondition_error listing every diagnostic when the weights are
  /// not a probability vector over the atoms.
  static Measure make(Algebra algebra, std::vector<Rational> atom_weights, Additivity mode = Additivity::sigma) {
    auto v = validate(algebra, atom_weights, false);
    if (!v) {
      nlohmann::json diags = nlohmann::json::array();
      for (const auto& d : v.diagnostics) diags.push_back({{"kind", d.kind}, {"message", d.message}, {"atoms", d.atoms}});
      throw precondition_error("invalid measure: " + v.diagnostics.front().message, diags);
    }
    Measure m;
    m.algebra_ = std::move(algebra);
    m.weights_ = std::move(atom_weights);
    m.mode_ = mode;
    return m;
  }

  static Measure uniform(Algebra algebra, Additivity mode = Additivity::sigma) {
    std::vector<Rational> w(algebra.atom_count(), Rational(1, static_cast<long>(algebra.atom_count())));
    return make(std::move(algebra), std::move(w), mode);
  }

  [[nodiscard]] const Algebra& algebra() const { return algebra_; }
  [[nodiscard]] const std::vector<Rational>& weights() const { return weights_; }
  [[nodiscard]] const Rational& weight(std::size_t atom) const { return weights_.at(atom); }
  [[nodiscard]] Additivity mode() const { return mode_; }
  [[nodiscard]] Measure with_mode(Additivity mode) const {
    Measure m = *this;
    m.mode_ = mode;
    return m;
  }

  /// Same algebra and same atom weights. The additivity flag is not compared.
  friend bool operator==(const Measure& a, const Measure& b) {
    return a.algebra_ == b.algebra_ && a.weights_ == b.weights_;
  }

 private:
  Algebra algebra_;
  std::vector<Rational> weights_;
  Additivity mode_ = Additivity::sigma;
};

/// P(A) for a member A; domain_error if A is not in the algebra.
inline Rational evaluate(const Measure& p, const Subset& a) {
  Rational s;
  for (auto k : p.algebra().atoms_within(a)) s += p.weight(k);
  return s;
}

inline MeasureValidation validate(const Measure& p) { return validate(p.algebra(), p.weights()); }

/// Point mass at x: every member containing x has measure 1.
inline Measure dirac(std::size_t x, const Algebra& algebra, Additivity mode = Additivity::sigma) {
  if (x >= algebra.universe()) throw domain_error("point index " + std::to_string(x) + " is outside the ground set");
  std::vector<Rational> w(algebra.atom_count());
  w[algebra.atom_of(x)] = Rational(1);
  return Measure::make(algebra, std::move(w), mode);
}

inline Measure dirac(const std::string& label, const Algebra& algebra, Additivity mode = Additivity::sigma) {
  return dirac(algebra.ground().index_of(label), algebra, mode);
}

/// Image measure B -> P(f^{-1}(B)). Requires f premeasurable.
inline Measure pushforward(const Measure& p, const PointMap& f, const Algebra& cod) {
  const auto& dom = p.algebra();
  auto check = is_premeasurable(f, dom, cod);
  if (!check)
    throw precondition_error("map is not premeasurable", nlohmann::json{{"witness", check.witness->indices()}});
  // Premeasurability puts each domain atom inside a single codomain atom.
  std::vector<Rational> w(cod.atom_count());
  for (std::size_t k = 0; k < dom.atom_count(); ++k) w[cod.atom_of(f[dom.representative(k)])] += p.weight(k);
  return Measure::make(cod, std::move(w), p.mode());
}

}  // namespace giry
