// Exact rationals over BigInt, always normalized (gcd 1, positive denominator).
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartanlab/bigint.hpp"

namespace cartanlab {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  // accepts "3", "-3/4", "0.25", "-1.5e2"
  static Rational parse(const std::string& s);
  // exact value of the double (doubles are dyadic rationals)
  static Rational from_double(double v);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_ == BigInt(1); }

  Rational operator-() const { Rational r(*this); r.num_ = -r.num_; return r; }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return (num_ * o.den_) < (o.num_ * den_); }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const {
    long en, ed;
    double mn = num_.to_double_exp(en);
    double md = den_.to_double_exp(ed);
    if (mn == 0.0) return 0.0;
    return (mn / md) * std::ldexp(1.0, static_cast<int>(en - ed));
  }

  std::string to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

 private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) { num_ = num_ / g; den_ = den_ / g; }
  }
};

using RatVec = std::vector<Rational>;

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec operator*(const Rational& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<double> to_doubles(const RatVec& a);

// Dense rational matrix, row-major.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  RatVec operator*(const RatVec& v) const;
  RatMat transpose() const;
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  // row-major lexicographic compare, for deterministic orderings
  static bool lex_less(const RatMat& a, const RatMat& b);

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Solves A x = b over the rationals (A square, nonsingular); throws if singular.
RatVec solve_linear(RatMat A, RatVec b);

// Rank of a rational matrix by fraction-aware Gaussian elimination.
int rat_rank(RatMat A);

// Kernel basis of A x = 0 (columns of A are the variables).
std::vector<RatVec> rat_kernel(RatMat A);

}  // namespace cartanlab
