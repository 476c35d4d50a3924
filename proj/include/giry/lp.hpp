#pragma once

// Exact rational simplex method for  maximize c.x  s.t.  A x <= b, x >= 0
// with b >= 0, so the slack basis is a feasible start. Bland's rule (lowest
// index enters, lowest basic index leaves on ties) guarantees termination.

#include "errors.hpp"
#include "rational.hpp"

#include <cstddef>
#include <vector>

namespace giry {

struct LpResult {
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

inline LpResult lp_maximize(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b) {
  const std::size_t n = c.size(), m = A.size();
  if (b.size() != m) throw invalid_input("constraint matrix and bound vector sizes differ");
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw invalid_input("constraint row has the wrong length");
    if (b[i].sign() < 0) throw precondition_error("lp_maximize needs b >= 0 for the slack start");
  }
  // Tableau columns: n structural, m slack, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = Rational(1);
    t[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  auto& obj = t[m];
  for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];

  LpResult out;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (obj[j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw domain_error("linear program is unbounded");

    auto& prow = t[leave];
    const Rational piv = prow[enter];
    for (auto& v : prow)
      if (!v.is_zero()) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (!prow[j].is_zero()) t[i][j] -= factor * prow[j];
    }
    basis[leave] = enter;
    ++out.pivots;
  }
  out.value = obj[width - 1];
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.x[basis[i]] = t[i][width - 1];
  return out;
}

}  // namespace giry
