// Arbitrary-precision signed integers, base 2^32 limbs.
// Sized for exact Weyl/root combinatorics and Gram characteristic
// polynomials of matrix powers, not for cryptographic workloads.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cartanlab {

class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(long v) : BigInt(static_cast<long long>(v)) {}
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return neg_; }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt operator/(const BigInt& o) const;  // truncated toward zero
  BigInt operator%(const BigInt& o) const;
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  static BigInt gcd(BigInt a, BigInt b);  // nonnegative

  BigInt shifted_left(unsigned bits) const;

  bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator<=(const BigInt& o) const { return !(o < *this); }
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator>=(const BigInt& o) const { return !(*this < o); }

  // number of significant bits of |*this| (0 for zero)
  size_t bit_length() const;
  // |*this| = mantissa * 2^exp with mantissa in [0.5, 1); returns signed mantissa
  double to_double_exp(long& exp) const;
  double to_double() const;
  // exact when the value fits, throws otherwise
  long long to_ll() const;
  bool fits_ll() const;

  // log2 of |*this|; requires nonzero
  double log2_abs() const;

  std::string to_string() const;  // decimal

 private:
  bool neg_ = false;
  std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static BigInt add_mag(const BigInt& a, const BigInt& b);
  static BigInt sub_mag(const BigInt& a, const BigInt& b);  // |a| >= |b|
  static BigInt mul_mag(const BigInt& a, const BigInt& b);
  static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
};

}  // namespace cartanlab
