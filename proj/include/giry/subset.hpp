#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace giry {

/// Subset of a finite ground set {0, ..., n-1}, stored as a fixed-width bit
/// vector. Point i corresponds to bit i.
///
/// Subsets are ordered as the binary numbers sum_i 2^i [i in S]; that order is
/// the canonical serialization order for families.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }
  static Subset of(std::size_t universe, std::span<const std::size_t> points) {
    Subset s(universe);
    for (auto p : points) s.set(p);
    return s;
  }
  static Subset of(std::size_t universe, std::initializer_list<std::size_t> points) {
    return of(universe, std::span<const std::size_t>(points.begin(), points.size()));
  }
  static Subset singleton(std::size_t universe, std::size_t point) { return of(universe, {point}); }

  [[nodiscard]] std::size_t universe() const { return universe_; }

  [[nodiscard]] bool test(std::size_t i) const {
    check(i);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  Subset& set(std::size_t i) {
    check(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
    return *this;
  }
  Subset& reset(std::size_t i) {
    check(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    return *this;
  }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  [[nodiscard]] bool is_full() const { return *this == full(universe_); }

  /// Lowest member; requires a non-empty set.
  [[nodiscard]] std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    throw std::out_of_range("Subset::first on empty set");
  }

  [[nodiscard]] std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w != 0) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  [[nodiscard]] bool is_subset_of(const Subset& o) const {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    return true;
  }
  [[nodiscard]] bool intersects(const Subset& o) const {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & o.words_[k]) != 0) return true;
    return false;
  }

  Subset& operator&=(const Subset& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  Subset& operator|=(const Subset& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  Subset& operator^=(const Subset& o) { return combine(o, [](auto a, auto b) { return a ^ b; }); }
  Subset& operator-=(const Subset& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator^(Subset a, const Subset& b) { return a ^= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  friend Subset operator~(Subset a) {
    for (auto& w : a.words_) w = ~w;
    a.trim();
    return a;
  }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check(std::size_t i) const {
    if (i >= universe_) throw std::out_of_range("Subset: point index out of range");
  }
  void same_universe(const Subset& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("Subset: ground sets differ");
  }
  template <class Op>
  Subset& combine(const Subset& o, Op op) {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] = op(words_[k], o.words_[k]);
    return *this;
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace giry
