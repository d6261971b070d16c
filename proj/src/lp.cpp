#include "cartanlab/lp.hpp"

#include <stdexcept>

namespace cartanlab {

// Phase-1 simplex on the tableau
//   rows: one per constraint (all as equalities with slack columns),
//   cols: [x+ (n), x- (n), slacks (#ge), artificials (m), rhs]
// minimizing the sum of artificials with Bland's anti-cycling rule.
LPResult lp_feasible(const LinearConstraints& c) {
  const int n = c.nvars;
  const int m_eq = static_cast<int>(c.eq_lhs.size());
  const int m_ge = static_cast<int>(c.ge_lhs.size());
  const int m = m_eq + m_ge;
  const int col_slack = 2 * n;
  const int col_art = col_slack + m_ge;
  const int cols = col_art + m;  // structural columns (rhs kept separately)

  std::vector<RatVec> T(m, RatVec(cols));
  RatVec rhs(m);

  auto fill_row = [&](int row, const RatVec& a, const Rational& b) {
    for (int j = 0; j < n; ++j) {
      T[row][j] = a[j];
      T[row][n + j] = -a[j];
    }
    rhs[row] = b;
  };
  for (int i = 0; i < m_eq; ++i) fill_row(i, c.eq_lhs[i], c.eq_rhs[i]);
  for (int i = 0; i < m_ge; ++i) {
    fill_row(m_eq + i, c.ge_lhs[i], c.ge_rhs[i]);
    T[m_eq + i][col_slack + i] = Rational(-1);
  }
  // make rhs nonnegative, then set artificial basis
  for (int i = 0; i < m; ++i) {
    if (rhs[i].sign() < 0) {
      for (auto& v : T[i]) v = -v;
      rhs[i] = -rhs[i];
    }
    T[i][col_art + i] = Rational(1);
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = col_art + i;

  // objective row: minimize sum of artificials; reduced costs after pricing out
  RatVec obj(cols);
  Rational obj_val;
  for (int j = 0; j < col_art; ++j) {
    Rational s;
    for (int i = 0; i < m; ++i) s += T[i][j];
    obj[j] = -s;
  }
  for (int i = 0; i < m; ++i) obj_val -= rhs[i];

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (obj[j].sign() < 0) { enter = j; break; }  // Bland: smallest index
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter].sign() <= 0) continue;
      Rational ratio = rhs[i] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw std::logic_error("lp_feasible: phase-1 unbounded");
    // pivot
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    rhs[leave] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter].is_zero()) continue;
      Rational f = T[i][enter];
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (!obj[enter].is_zero()) {
      Rational f = obj[enter];
      for (int j = 0; j < cols; ++j) obj[j] -= f * T[leave][j];
      obj_val -= f * rhs[leave];
    }
    basis[leave] = enter;
  }

  LPResult res;
  if (!obj_val.is_zero()) return res;  // infeasible (artificials > 0)
  res.feasible = true;
  res.point.assign(n, Rational());
  for (int i = 0; i < m; ++i) {
    int b = basis[i];
    if (b < n) res.point[b] += rhs[i];
    else if (b < 2 * n) res.point[b - n] -= rhs[i];
  }
  return res;
}

}  // namespace cartanlab
