// Exact rational linear feasibility (phase-1 simplex, Bland's rule).
#pragma once

#include <vector>

#include "cartanlab/rational.hpp"

namespace cartanlab {

struct LinearConstraints {
  int nvars = 0;
  std::vector<RatVec> eq_lhs;  // rows, each of length nvars
  RatVec eq_rhs;
  std::vector<RatVec> ge_lhs;  // rows: ge_lhs . x >= ge_rhs
  RatVec ge_rhs;

  void add_eq(const RatVec& a, const Rational& b) { eq_lhs.push_back(a); eq_rhs.push_back(b); }
  void add_ge(const RatVec& a, const Rational& b) { ge_lhs.push_back(a); ge_rhs.push_back(b); }
};

struct LPResult {
  bool feasible = false;
  RatVec point;  // a feasible point when feasible
};

LPResult lp_feasible(const LinearConstraints& c);

}  // namespace cartanlab
