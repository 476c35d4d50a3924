#pragma once

#include "errors.hpp"
#include "measure.hpp"
#include "rational.hpp"
#include "setalg.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace giry {

/// Point of the probability simplex on a finite label set: the underlying set
/// of GA for finite A.
class SimplexPoint {
 public:
  SimplexPoint() = default;

  static SimplexPoint make(std::vector<std::string> labels, std::vector<Rational> weights) {
    if (labels.size() != weights.size()) throw invalid_input("one weight per label expected");
    if (labels.empty()) throw invalid_input("simplex needs at least one label");
    Rational total;
    for (const auto& w : weights) {
      if (w.sign() < 0) throw precondition_error("negative simplex weight " + w.str());
      total += w;
    }
    if (total != Rational(1)) throw precondition_error("simplex weights sum to " + total.str());
    SimplexPoint p;
    p.labels_ = std::move(labels);
    p.weights_ = std::move(weights);
    return p;
  }

  /// Labels "0", ..., "k-1".
  static SimplexPoint make(std::vector<Rational> weights) {
    auto labels = default_labels(weights.size());
    return make(std::move(labels), std::move(weights));
  }

  static SimplexPoint vertex(std::vector<std::string> labels, std::size_t at) {
    std::vector<Rational> w(labels.size());
    w.at(at) = Rational(1);
    return make(std::move(labels), std::move(w));
  }

  static std::vector<std::string> default_labels(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(std::to_string(i));
    return out;
  }

  [[nodiscard]] std::size_t size() const { return weights_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<Rational>& weights() const { return weights_; }
  [[nodiscard]] const Rational& operator[](std::size_t a) const { return weights_.at(a); }

  /// The same point as a measure on the powerset of the labels.
  [[nodiscard]] Measure as_measure(Additivity mode = Additivity::sigma) const {
    return Measure::make(Algebra::powerset(GroundSet::make(labels_, labels_.size())), weights_, mode);
  }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> weights_;
};

/// Label map A -> B given by target indices.
using LabelMap = std::vector<std::size_t>;

/// Gf on simplex points: (p_a)_a -> (sum_{a in f^{-1}(b)} p_a)_b.
inline SimplexPoint g_map(const LabelMap& f, const std::vector<std::string>& target_labels, const SimplexPoint& p) {
  if (f.size() != p.size()) throw domain_error("label map is not total on the simplex's labels");
  std::vector<Rational> out(target_labels.size());
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a] >= out.size()) throw domain_error("label map leaves its codomain");
    out[f[a]] += p[a];
  }
  return SimplexPoint::make(target_labels, std::move(out));
}

}  // namespace giry
