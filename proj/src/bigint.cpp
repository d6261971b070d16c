#include "cartanlab/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace cartanlab {

BigInt::BigInt(long long v) {
  if (v < 0) {
    neg_ = true;
    // avoid UB on LLONG_MIN
    unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
    while (m) { limbs_.push_back(static_cast<uint32_t>(m)); m >>= 32; }
  } else {
    unsigned long long m = static_cast<unsigned long long>(v);
    while (m) { limbs_.push_back(static_cast<uint32_t>(m)); m >>= 32; }
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
  const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
  r.limbs_.resize(x.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
    r.limbs_[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r.limbs_[x.size()] = static_cast<uint32_t>(carry);
  r.trim();
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow -
                (i < b.limbs_.size() ? b.limbs_[i] : 0u);
    if (d < 0) { d += (1ll << 32); borrow = 1; } else { borrow = 0; }
    r.limbs_[i] = static_cast<uint32_t>(d);
  }
  r.trim();
  return r;
}

BigInt BigInt::mul_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.is_zero() || b.is_zero()) return r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a.limbs_[i];
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.neg_ = !r.neg_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (neg_ == o.neg_) {
    BigInt r = add_mag(*this, o);
    r.neg_ = neg_ && !r.is_zero();
    return r;
  }
  int c = cmp_mag(*this, o);
  if (c == 0) return BigInt();
  BigInt r = c > 0 ? sub_mag(*this, o) : sub_mag(o, *this);
  r.neg_ = (c > 0 ? neg_ : o.neg_) && !r.is_zero();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r = mul_mag(*this, o);
  r.neg_ = (neg_ != o.neg_) && !r.is_zero();
  return r;
}

void BigInt::divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  q = BigInt();
  r = BigInt();
  if (cmp_mag(a, b) < 0) { r = a; r.neg_ = false; return; }
  // binary long division over the bits of a, msb first
  size_t nbits = a.bit_length();
  q.limbs_.assign((nbits + 31) / 32, 0);
  for (size_t i = nbits; i-- > 0;) {
    // r = r*2 + bit_i(a)
    uint32_t carry = (a.limbs_[i / 32] >> (i % 32)) & 1u;
    for (size_t j = 0; j < r.limbs_.size(); ++j) {
      uint32_t nc = r.limbs_[j] >> 31;
      r.limbs_[j] = (r.limbs_[j] << 1) | carry;
      carry = nc;
    }
    if (carry) r.limbs_.push_back(carry);
    if (cmp_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  q.trim();
  r.trim();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  divmod_mag(a, b, q, r);
  // truncated: sign(q) = sign(a)*sign(b), sign(r) = sign(a)
  q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
  r.neg_ = a.neg_ && !r.is_zero();
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod_mag(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::shifted_left(unsigned bits) const {
  if (is_zero() || bits == 0) return *this;
  BigInt r;
  r.neg_ = neg_;
  unsigned words = bits / 32, rem = bits % 32;
  r.limbs_.assign(limbs_.size() + words + 1, 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t v = static_cast<uint64_t>(limbs_[i]) << rem;
    r.limbs_[i + words] |= static_cast<uint32_t>(v);
    r.limbs_[i + words + 1] |= static_cast<uint32_t>(v >> 32);
  }
  r.trim();
  return r;
}

bool BigInt::operator<(const BigInt& o) const {
  if (neg_ != o.neg_) return neg_;
  int c = cmp_mag(*this, o);
  return neg_ ? c > 0 : c < 0;
}

size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  size_t b = limbs_.size() * 32;
  for (uint32_t mask = 0x80000000u; mask && !(top & mask); mask >>= 1) --b;
  return b;
}

double BigInt::to_double_exp(long& exp) const {
  if (is_zero()) { exp = 0; return 0.0; }
  size_t nbits = bit_length();
  int take = static_cast<int>(nbits < 64 ? nbits : 64);
  uint64_t top = 0;
  for (int k = 0; k < take; ++k) {
    size_t i = nbits - 1 - static_cast<size_t>(k);
    uint32_t bit = (limbs_[i / 32] >> (i % 32)) & 1u;
    top = (top << 1) | bit;
  }
  top <<= (64 - take);
  double m = static_cast<double>(top) * std::ldexp(1.0, -64);  // in [0.5, 1)
  exp = static_cast<long>(nbits);
  return neg_ ? -m : m;
}

double BigInt::to_double() const {
  long e;
  double m = to_double_exp(e);
  return std::ldexp(m, static_cast<int>(e));
}

bool BigInt::fits_ll() const {
  if (bit_length() < 63) return true;
  return false;
}

long long BigInt::to_ll() const {
  if (!fits_ll()) throw std::overflow_error("BigInt: does not fit long long");
  long long v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
  return neg_ ? -v : v;
}

double BigInt::log2_abs() const {
  if (is_zero()) throw std::domain_error("BigInt: log2 of zero");
  long e;
  double m = std::fabs(to_double_exp(e));
  return static_cast<double>(e) + std::log2(m);
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt r;
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  r.neg_ = neg && !r.is_zero();
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt cur = *this;
  cur.neg_ = false;
  BigInt ten(10);
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod_mag(cur, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
    cur = q;
  }
  if (neg_) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

}  // namespace cartanlab
