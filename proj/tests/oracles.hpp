#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library algorithms they are compared against.

#include <giry/rational.hpp>

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using giry::Rational;
using Mask = std::uint32_t;

/// Closure of the generators under complement and pairwise union, iterated to
/// a fixpoint over bitmasks.
inline std::set<Mask> algebra_closure(std::size_t n, const std::vector<Mask>& generators) {
  const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::set<Mask> s{0, full};
  s.insert(generators.begin(), generators.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> cur(s.begin(), s.end());
    for (auto a : cur) {
      if (s.insert(full & ~a).second) grew = true;
      for (auto b : cur)
        if (s.insert(a | b).second) grew = true;
    }
  }
  return s;
}

/// sup |sum f (p - q)| over f : X -> {0, 1/den, ..., 1} with
/// |f(x) - f(y)| <= d(x, y).
inline Rational grid_bl(const std::vector<Rational>& p, const std::vector<Rational>& q,
                        const std::vector<std::vector<Rational>>& d, long den) {
  const std::size_t n = p.size();
  std::vector<long> f(n, 0);
  Rational best;
  for (;;) {
    bool lipschitz = true;
    for (std::size_t x = 0; x < n && lipschitz; ++x)
      for (std::size_t y = 0; y < n && lipschitz; ++y)
        if (Rational(f[x] - f[y] < 0 ? f[y] - f[x] : f[x] - f[y], den) > d[x][y]) lipschitz = false;
    if (lipschitz) {
      Rational s;
      for (std::size_t x = 0; x < n; ++x) s += Rational(f[x], den) * (p[x] - q[x]);
      if (s.sign() < 0) s = -s;
      if (s > best) best = s;
    }
    std::size_t pos = 0;
    while (pos < n && ++f[pos] > den) f[pos++] = 0;
    if (pos == n) break;
  }
  return best;
}

inline Rational half_l1(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  Rational s;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] > q[i] ? p[i] - q[i] : q[i] - p[i];
  return s / Rational(2);
}

/// max over subsets B of |p(B) - q(B)|, enumerated directly.
inline Rational subset_gap(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  Rational best;
  for (Mask m = 0; m < (Mask{1} << p.size()); ++m) {
    Rational s;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (m >> i & 1U) s += p[i] - q[i];
    if (s.sign() < 0) s = -s;
    if (s > best) best = s;
  }
  return best;
}

/// sum_x f(x) w(x) for a density on points.
inline Rational point_integral(const std::vector<Rational>& f, const std::vector<Rational>& w) {
  Rational s;
  for (std::size_t x = 0; x < f.size(); ++x) s += f[x] * w[x];
  return s;
}

/// Half-open interval membership lo <= t < hi.
inline bool in_interval(const Rational& lo, const Rational& hi, const Rational& t) { return lo <= t && t < hi; }

}  // namespace oracle
