// Exact log singular values of 2^k-th powers of rational (double-entried)
// matrices, via integer Gram characteristic polynomials. Used where forming
// the power in floating point would lose the small singular values.
#pragma once

#include <vector>

#include "cartanlab/bigint.hpp"
#include "cartanlab/linalg.hpp"

namespace cartanlab {

// Integer matrix with a dyadic scale: value = entries / 2^log2_den.
struct DyadicMat {
  int n = 0;
  long log2_den = 0;
  std::vector<BigInt> a;  // row-major n x n

  BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static DyadicMat from_double(const Mat& m);  // exact
  DyadicMat squared() const;
};

// Characteristic polynomial coefficients c[0..n] (c[n] = 1) of an integer
// matrix, by the Faddeev-LeVerrier recurrence (exact).
std::vector<BigInt> charpoly(const std::vector<BigInt>& m, int n);

// Natural logs of the singular values of g^(2^k), descending. Exact integer
// arithmetic throughout; root extraction good to ~1e-12 relative.
std::vector<double> log_singular_values_of_power(const Mat& g, int k);

}  // namespace cartanlab
