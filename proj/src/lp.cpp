#include "hop/lp.hpp"

#include <cassert>

namespace hop::lp {

std::optional<RatVec> convex_combination(const std::vector<RatVec>& vertices, const RatVec& x) {
  if (vertices.empty()) return std::nullopt;
  const std::size_t dim = x.size();
  const std::size_t m = dim + 1;           // coordinate rows + mass row
  const std::size_t n = vertices.size();   // structural columns
  const std::size_t cols = n + m + 1;      // + artificials + rhs

  std::vector<RatVec> tab(m, RatVec(cols, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = i < dim ? vertices[j][i] : Rational(1);
    tab[i][cols - 1] = i < dim ? x[i] : Rational(1);
    if (sgn(tab[i][cols - 1]) < 0)
      for (auto& v : tab[i]) v = -v;
    tab[i][n + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Objective row: minimize sum of artificials, expressed as reduced costs.
  RatVec cost(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (j < n || j == cols - 1) cost[j] -= tab[i][j];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < n + m; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      Rational ratio = tab[i][cols - 1] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a pivot.
    assert(leave != m);

    Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  // cost[rhs] holds minus the optimal objective.
  if (sgn(cost[cols - 1]) != 0) return std::nullopt;
  RatVec t(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) t[basis[i]] = tab[i][cols - 1];
  return t;
}

}  // namespace hop::lp
