#include "cartanlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace cartanlab {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
  }
  // decimal with optional exponent
  std::string mant = s;
  long expo = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = s.substr(0, epos);
    expo = std::stol(s.substr(epos + 1));
  }
  auto dpos = mant.find('.');
  std::string digits = mant;
  long frac_digits = 0;
  if (dpos != std::string::npos) {
    digits = mant.substr(0, dpos) + mant.substr(dpos + 1);
    frac_digits = static_cast<long>(mant.size() - dpos - 1);
  }
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("Rational: bad literal '" + s + "'");
  BigInt num = BigInt::from_string(digits);
  BigInt den(1);
  long net = expo - frac_digits;
  BigInt ten(10);
  for (long i = 0; i < std::labs(net); ++i) {
    if (net > 0) num = num * ten;
    else den = den * ten;
  }
  return Rational(num, den);
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Rational: non-finite double");
  if (v == 0.0) return Rational();
  int e;
  double m = std::frexp(v, &e);  // v = m * 2^e, |m| in [0.5, 1)
  long long mi = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  BigInt num(mi), den(1);
  if (e >= 0) num = num.shifted_left(static_cast<unsigned>(e));
  else den = den.shifted_left(static_cast<unsigned>(-e));
  return Rational(num, den);
}

std::vector<double> to_doubles(const RatVec& a) {
  std::vector<double> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].to_double();
  return r;
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = (*this)(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o(k, j).is_zero()) continue;
        r(i, j) += v * o(k, j);
      }
    }
  return r;
}

RatVec RatMat::operator*(const RatVec& v) const {
  if (static_cast<size_t>(cols_) != v.size()) throw std::invalid_argument("RatMat: shape mismatch");
  RatVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool RatMat::lex_less(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    return std::make_pair(a.rows_, a.cols_) < std::make_pair(b.rows_, b.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i] != b.a_[i]) return a.a_[i] < b.a_[i];
  }
  return false;
}

RatVec solve_linear(RatMat A, RatVec b) {
  int n = A.rows();
  if (A.cols() != n || static_cast<size_t>(n) != b.size())
    throw std::invalid_argument("solve_linear: square system required");
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) throw std::domain_error("solve_linear: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
      std::swap(b[piv], b[col]);
    }
    Rational inv = Rational(1) / A(col, col);
    for (int j = col; j < n; ++j) A(col, j) *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || A(r, col).is_zero()) continue;
      Rational f = A(r, col);
      for (int j = col; j < n; ++j) A(r, j) -= f * A(col, j);
      b[r] -= f * b[col];
    }
  }
  return b;
}

int rat_rank(RatMat A) {
  int n = A.rows(), m = A.cols();
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (!A(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m; ++j) std::swap(A(piv, j), A(rank, j));
    Rational inv = Rational(1) / A(rank, col);
    for (int j = col; j < m; ++j) A(rank, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || A(r, col).is_zero()) continue;
      Rational f = A(r, col);
      for (int j = col; j < m; ++j) A(r, j) -= f * A(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<RatVec> rat_kernel(RatMat A) {
  int n = A.rows(), m = A.cols();
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (!A(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m; ++j) std::swap(A(piv, j), A(rank, j));
    Rational inv = Rational(1) / A(rank, col);
    for (int j = col; j < m; ++j) A(rank, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || A(r, col).is_zero()) continue;
      Rational f = A(r, col);
      for (int j = col; j < m; ++j) A(r, j) -= f * A(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m);
    v[free] = Rational(1);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -A(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cartanlab
