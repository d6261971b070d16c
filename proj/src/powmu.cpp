#include "cartanlab/powmu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cartanlab {

DyadicMat DyadicMat::from_double(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("DyadicMat: square only");
  DyadicMat d;
  d.n = static_cast<int>(m.rows());
  // common dyadic denominator: entry = mant * 2^(e-53), mant 53-bit integer
  long min_exp = 0;
  bool any = false;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      double v = m(i, j);
      if (v == 0.0) continue;
      int e;
      std::frexp(v, &e);
      long le = static_cast<long>(e) - 53;
      if (!any || le < min_exp) min_exp = le;
      any = true;
    }
  d.log2_den = any && min_exp < 0 ? -min_exp : 0;
  d.a.assign(static_cast<size_t>(d.n) * d.n, BigInt(0));
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      double v = m(i, j);
      if (v == 0.0) continue;
      int e;
      double mant = std::frexp(v, &e);
      long long mi = static_cast<long long>(std::ldexp(mant, 53));
      long shift = (static_cast<long>(e) - 53) + d.log2_den;
      if (shift < 0) throw std::logic_error("DyadicMat: negative shift");
      d.at(i, j) = BigInt(mi).shifted_left(static_cast<unsigned>(shift));
    }
  return d;
}

DyadicMat DyadicMat::squared() const {
  DyadicMat r;
  r.n = n;
  r.log2_den = 2 * log2_den;
  r.a.assign(a.size(), BigInt(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (at(k, j).is_zero()) continue;
        r.at(i, j) += v * at(k, j);
      }
    }
  return r;
}

std::vector<BigInt> charpoly(const std::vector<BigInt>& m, int n) {
  auto mat_mul = [n](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    std::vector<BigInt> r(static_cast<size_t>(n) * n, BigInt(0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const BigInt& v = x[static_cast<size_t>(i) * n + k];
        if (v.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          const BigInt& w = y[static_cast<size_t>(k) * n + j];
          if (w.is_zero()) continue;
          r[static_cast<size_t>(i) * n + j] += v * w;
        }
      }
    return r;
  };
  std::vector<BigInt> c(static_cast<size_t>(n) + 1, BigInt(0));
  c[n] = BigInt(1);
  std::vector<BigInt> N(static_cast<size_t>(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i) N[static_cast<size_t>(i) * n + i] = BigInt(1);
  for (int k = 1; k <= n; ++k) {
    std::vector<BigInt> AN = mat_mul(m, N);
    BigInt tr(0);
    for (int i = 0; i < n; ++i) tr += AN[static_cast<size_t>(i) * n + i];
    BigInt ck = -(tr / BigInt(k));  // exact division (Faddeev-LeVerrier)
    c[n - k] = ck;
    N = AN;
    for (int i = 0; i < n; ++i) N[static_cast<size_t>(i) * n + i] += ck;
  }
  return c;
}

namespace {

// sign of p(x) at dyadic x = num / 2^e, exact
int poly_sign_at_dyadic(const std::vector<BigInt>& c, int n, const BigInt& num, long e) {
  // p(x) * 2^(n e) = sum c[j] num^j 2^((n-j) e)
  BigInt acc(0);
  BigInt numpow(1);
  for (int j = 0; j <= n; ++j) {
    if (!c[j].is_zero()) {
      BigInt term = c[j] * numpow;
      long shift = static_cast<long>(n - j) * e;
      if (shift > 0) term = term.shifted_left(static_cast<unsigned>(shift));
      acc += term;
    }
    if (j < n) numpow = numpow * num;
  }
  return acc.sign();
}

struct ScaledPoly {
  std::vector<double> coef;  // q(u) = sum coef[j] u^j
  double eval(double u, double* deriv = nullptr) const {
    double v = 0, d = 0;
    for (size_t j = coef.size(); j-- > 0;) {
      d = d * u + v;
      v = v * u + coef[j];
    }
    if (deriv) *deriv = d;
    return v;
  }
};

ScaledPoly scale_poly(const std::vector<BigInt>& c, int n, double log2_root) {
  // coefficients of p(2^L u), normalized by the largest magnitude
  std::vector<double> lg(static_cast<size_t>(n) + 1, 0), sg(static_cast<size_t>(n) + 1, 0);
  double mx = -1e300;
  for (int j = 0; j <= n; ++j) {
    if (c[j].is_zero()) continue;
    lg[j] = c[j].log2_abs() + j * log2_root;
    sg[j] = c[j].sign();
    mx = std::max(mx, lg[j]);
  }
  ScaledPoly q;
  q.coef.assign(static_cast<size_t>(n) + 1, 0.0);
  for (int j = 0; j <= n; ++j) {
    if (sg[j] == 0) continue;
    double l = lg[j] - mx;
    if (l < -1080) continue;  // underflow: irrelevant coefficient
    q.coef[j] = sg[j] * std::exp2(l);
  }
  return q;
}

// Newton from u0; returns NaN if it does not settle
double newton_root(const ScaledPoly& q, double u0) {
  double u = u0;
  for (int it = 0; it < 200; ++it) {
    double d;
    double v = q.eval(u, &d);
    if (d == 0) return std::nan("");
    double step = v / d;
    u -= step;
    if (!(u > 0) || !std::isfinite(u)) return std::nan("");
    if (std::fabs(step) <= 1e-15 * std::fabs(u)) return u;
  }
  return std::nan("");
}

}  // namespace

std::vector<double> log_singular_values_of_power(const Mat& g, int k) {
  const int n = static_cast<int>(g.rows());
  if (n != g.cols()) throw std::invalid_argument("log_singular_values_of_power: square only");
  DyadicMat d = DyadicMat::from_double(g);
  for (int i = 0; i < k; ++i) d = d.squared();

  // integer Gram matrix
  std::vector<BigInt> gram(static_cast<size_t>(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      BigInt s(0);
      for (int r = 0; r < n; ++r) s += d.at(r, i) * d.at(r, j);
      gram[static_cast<size_t>(i) * n + j] = s;
      gram[static_cast<size_t>(j) * n + i] = s;
    }

  const double half_ln2 = 0.5 * std::log(2.0);
  std::vector<double> logs;

  bool diagonal = true;
  for (int i = 0; i < n && diagonal; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !gram[static_cast<size_t>(i) * n + j].is_zero()) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    for (int i = 0; i < n; ++i) {
      const BigInt& y = gram[static_cast<size_t>(i) * n + i];
      if (y.sign() <= 0) throw std::domain_error("power of a singular matrix");
      logs.push_back(half_ln2 * (y.log2_abs() - 2.0 * d.log2_den));
    }
    std::sort(logs.rbegin(), logs.rend());
    return logs;
  }

  std::vector<BigInt> c = charpoly(gram, n);
  // elementary symmetric functions of the (positive) roots: E_i = (-1)^i c[n-i]
  std::vector<BigInt> E(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    E[i] = (i % 2 == 0) ? c[n - i] : -c[n - i];
    if (E[i].sign() <= 0)
      throw std::domain_error("Gram characteristic polynomial not totally positive");
  }

  std::vector<double> log2Y(n);
  for (int i = 1; i <= n; ++i) {
    double L = E[i].log2_abs() - E[i - 1].log2_abs();
    ScaledPoly q = scale_poly(c, n, L);
    double u = newton_root(q, 1.0);
    bool ok = std::isfinite(u);
    if (ok) {
      double resid = std::fabs(q.eval(u));
      ok = resid <= 1e-9;
    }
    if (!ok) {
      // derivative root handles exactly repeated singular values
      ScaledPoly dq;
      dq.coef.resize(q.coef.size() - 1);
      for (size_t j = 1; j < q.coef.size(); ++j) dq.coef[j - 1] = q.coef[j] * static_cast<double>(j);
      double u2 = newton_root(dq, 1.0);
      if (std::isfinite(u2) && std::fabs(q.eval(u2)) <= 1e-7) {
        u = u2;
        ok = true;
      }
    }
    if (!ok) {
      // exact dyadic bisection around the estimate: points num/2^e
      const long e = 40;
      double est = L;
      // x = m * 2^s with m a 62-bit integer, so num = m * 2^(s+e)
      auto dyadic_num = [&](double l2) {
        double s = std::floor(l2) - 60;
        double m = std::exp2(l2 - s);
        long shift = static_cast<long>(s) + e;
        if (shift < 0) return BigInt(0);  // below resolution: bracket useless
        return BigInt(static_cast<long long>(m)).shifted_left(static_cast<unsigned>(shift));
      };
      bool found = false;
      for (int t = 1; t <= 50 && !found; ++t) {
        double lo = est - t, hi = est + t;
        BigInt nlo = dyadic_num(lo), nhi = dyadic_num(hi);
        if (nlo.is_zero() || nhi.is_zero()) break;
        int slo = poly_sign_at_dyadic(c, n, nlo, e);
        int shi = poly_sign_at_dyadic(c, n, nhi, e);
        if (slo == 0) { log2Y[i - 1] = lo; found = true; break; }
        if (shi == 0) { log2Y[i - 1] = hi; found = true; break; }
        if (slo != shi) {
          for (int it = 0; it < 200; ++it) {
            BigInt mid = (nlo + nhi) / BigInt(2);
            int sm = poly_sign_at_dyadic(c, n, mid, e);
            if (sm == 0 || sm == slo) nlo = mid;
            else nhi = mid;
            if (sm == 0) break;
          }
          log2Y[i - 1] = nlo.log2_abs() - e;
          found = true;
        }
      }
      if (!found)
        throw std::runtime_error("log_singular_values_of_power: root isolation failed");
      continue;
    }
    log2Y[i - 1] = L + std::log2(u);
  }

  // consistency: sum of log roots equals log det
  double total = 0;
  for (double v : log2Y) total += v;
  if (std::fabs(total - E[n].log2_abs()) > 1e-6 * std::max(1.0, std::fabs(E[n].log2_abs())))
    throw std::runtime_error("log_singular_values_of_power: root consistency check failed");

  for (double v : log2Y) logs.push_back(half_ln2 * (v - 2.0 * d.log2_den));
  std::sort(logs.rbegin(), logs.rend());
  return logs;
}

}  // namespace cartanlab
