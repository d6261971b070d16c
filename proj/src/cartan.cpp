#include "cartanlab/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cartanlab/powmu.hpp"

namespace cartanlab {

GroupSpec GroupSpec::sl(int n, char field) {
  if (n < 2) throw std::invalid_argument("SL(n): n >= 2 required");
  GroupSpec s;
  s.n = n;
  switch (field) {
    case 'R': s.kind = Kind::SL_R; break;
    case 'C': s.kind = Kind::SL_C; break;
    case 'H': s.kind = Kind::SL_H; break;
    default: throw std::invalid_argument("SL field must be R, C or H");
  }
  return s;
}

GroupSpec GroupSpec::so(int p, int q) {
  if (q < 1 || p < q) throw std::invalid_argument("SO(p,q): p >= q >= 1 required");
  if (p == q && q < 3)
    throw std::invalid_argument("SO(q,q) supported for q >= 3 (use a product spec below that)");
  GroupSpec s;
  s.kind = Kind::SO;
  s.p = p;
  s.q = q;
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.size() < 2) throw std::invalid_argument("product: need at least two factors");
  GroupSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

std::vector<const GroupSpec*> GroupSpec::leaves() const {
  std::vector<const GroupSpec*> out;
  if (kind != Kind::Product) {
    out.push_back(this);
    return out;
  }
  for (const auto& f : factors) {
    auto sub = f.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

int GroupSpec::matrix_dim() const {
  switch (kind) {
    case Kind::SL_R:
    case Kind::SL_C: return n;
    case Kind::SL_H: return 2 * n;
    case Kind::SO: return p + q;
    case Kind::Product: throw std::logic_error("matrix_dim: leaf specs only");
  }
  return 0;
}

int GroupSpec::rank() const {
  switch (kind) {
    case Kind::SL_R:
    case Kind::SL_C:
    case Kind::SL_H: return n - 1;
    case Kind::SO: return q;
    case Kind::Product: {
      int r = 0;
      for (const auto& f : factors) r += f.rank();
      return r;
    }
  }
  return 0;
}

RootSystem GroupSpec::root_system() const {
  switch (kind) {
    case Kind::SL_R: return build_root_system(Family::A, n - 1, {1, 1, 1});
    case Kind::SL_C: return build_root_system(Family::A, n - 1, {2, 2, 2});
    case Kind::SL_H: return build_root_system(Family::A, n - 1, {4, 4, 4});
    case Kind::SO:
      if (p > q) return build_root_system(Family::B, q, {1, p - q, 1});
      return build_root_system(Family::D, q, {1, 1, 1});
    case Kind::Product: {
      RootSystem sys = factors[0].root_system();
      for (size_t i = 1; i < factors.size(); ++i)
        sys = cartanlab::product(sys, factors[i].root_system());
      return sys;
    }
  }
  throw std::logic_error("root_system: unreachable");
}

std::string GroupSpec::name() const {
  switch (kind) {
    case Kind::SL_R: return "SL(" + std::to_string(n) + ",R)";
    case Kind::SL_C: return "SL(" + std::to_string(n) + ",C)";
    case Kind::SL_H: return "SL(" + std::to_string(n) + ",H)";
    case Kind::SO: return "SO(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Kind::Product: {
      std::string s;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].name();
      }
      return s;
    }
  }
  return "?";
}

Mat so_defining_form(int p, int q) {
  Mat j = Mat::Zero(p + q, p + q);
  for (int i = 0; i < p; ++i) j(i, i) = 1;
  for (int i = p; i < p + q; ++i) j(i, i) = -1;
  return j;
}

namespace {

void validate_leaf(const GroupSpec& spec, const LeafMatrix& m, double tol) {
  if (spec.complex_storage() != m.complex_flag)
    throw std::domain_error("element storage does not match the group family");
  int d = spec.matrix_dim();
  if (m.complex_flag) {
    if (m.cplx.rows() != d || m.cplx.cols() != d)
      throw std::domain_error("element has wrong dimensions for " + spec.name());
    if (!all_finite(m.cplx)) throw std::domain_error("element has non-finite entries");
    double dres = std::abs(determinant(m.cplx) - std::complex<double>(1, 0));
    if (dres > tol)
      throw std::domain_error("element fails det=1 for " + spec.name() +
                              " (residual " + std::to_string(dres) + ")");
    if (spec.kind == GroupSpec::Kind::SL_H) {
      // quaternionic structure: M J = J conj(M), J = [[0, I], [-I, 0]]
      int n = spec.n;
      CMat J = CMat::Zero(2 * n, 2 * n);
      for (int i = 0; i < n; ++i) {
        J(i, n + i) = 1;
        J(n + i, i) = -1;
      }
      double res = frobenius(CMat(m.cplx * J - J * m.cplx.conjugate()));
      if (res > tol * std::max(1.0, frobenius(m.cplx)))
        throw std::domain_error("element fails the quaternionic structure relation (residual " +
                                std::to_string(res) + ")");
    }
  } else {
    if (m.real.rows() != d || m.real.cols() != d)
      throw std::domain_error("element has wrong dimensions for " + spec.name());
    if (!all_finite(m.real)) throw std::domain_error("element has non-finite entries");
    double dres = std::fabs(determinant(m.real) - 1.0);
    if (dres > tol)
      throw std::domain_error("element fails det=1 for " + spec.name() +
                              " (residual " + std::to_string(dres) + ")");
    if (spec.kind == GroupSpec::Kind::SO) {
      Mat J = so_defining_form(spec.p, spec.q);
      double res = frobenius(Mat(m.real.transpose() * J * m.real - J));
      if (res > tol * std::max(1.0, frobenius(m.real) * frobenius(m.real)))
        throw std::domain_error("element fails g^T J g = J for " + spec.name() +
                                " (residual " + std::to_string(res) + ")");
    }
  }
}

std::vector<double> leaf_mu(const GroupSpec& spec, const LeafMatrix& m) {
  Vec s = m.complex_flag ? singular_values(m.cplx) : singular_values(m.real);
  std::vector<double> logs;
  switch (spec.kind) {
    case GroupSpec::Kind::SL_R:
    case GroupSpec::Kind::SL_C:
      for (double v : s) logs.push_back(std::log(v));
      break;
    case GroupSpec::Kind::SL_H:
      // singular values pair up in the complex realization
      for (size_t i = 0; i < s.size(); i += 2) logs.push_back(std::log(s[i]));
      break;
    case GroupSpec::Kind::SO:
      // +-lambda pairs and p-q unit values; the q largest are the chamber coords
      for (int i = 0; i < spec.q; ++i) logs.push_back(std::log(s[i]));
      break;
    default: throw std::logic_error("leaf_mu: leaf specs only");
  }
  std::sort(logs.rbegin(), logs.rend());
  return logs;
}

std::vector<double> leaf_jordan(const GroupSpec& spec, const LeafMatrix& m) {
  Vec mod = m.complex_flag ? eigenvalue_moduli(m.cplx) : eigenvalue_moduli(m.real);
  std::vector<double> logs;
  switch (spec.kind) {
    case GroupSpec::Kind::SL_R:
    case GroupSpec::Kind::SL_C:
      for (double v : mod) logs.push_back(std::log(v));
      break;
    case GroupSpec::Kind::SL_H:
      for (size_t i = 0; i < mod.size(); i += 2) logs.push_back(std::log(mod[i]));
      break;
    case GroupSpec::Kind::SO:
      for (int i = 0; i < spec.q; ++i) logs.push_back(std::log(mod[i]));
      break;
    default: throw std::logic_error("leaf_jordan: leaf specs only");
  }
  std::sort(logs.rbegin(), logs.rend());
  return logs;
}

}  // namespace

GroupElement validate_element(const GroupSpec& spec, std::vector<LeafMatrix> blocks,
                              double tolerance) {
  auto lv = spec.leaves();
  if (blocks.size() != lv.size())
    throw std::domain_error("element block count does not match the product structure");
  for (size_t i = 0; i < lv.size(); ++i) validate_leaf(*lv[i], blocks[i], tolerance);
  GroupElement g;
  g.blocks = std::move(blocks);
  g.tolerance = tolerance;
  return g;
}

GroupElement validate_element(const GroupSpec& spec, Mat m, double tolerance) {
  std::vector<LeafMatrix> b;
  b.push_back(LeafMatrix::of(std::move(m)));
  return validate_element(spec, std::move(b), tolerance);
}

GroupElement validate_element(const GroupSpec& spec, CMat m, double tolerance) {
  std::vector<LeafMatrix> b;
  b.push_back(LeafMatrix::of(std::move(m)));
  return validate_element(spec, std::move(b), tolerance);
}

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double CartanVector::norm() const { return cartanlab::norm(coords); }

CartanVector mu(const GroupSpec& spec, const GroupElement& g) {
  auto lv = spec.leaves();
  CartanVector out;
  for (size_t i = 0; i < lv.size(); ++i) {
    auto part = leaf_mu(*lv[i], g.blocks[i]);
    out.coords.insert(out.coords.end(), part.begin(), part.end());
  }
  return out;
}

CartanVector jordan(const GroupSpec& spec, const GroupElement& g) {
  auto lv = spec.leaves();
  CartanVector out;
  for (size_t i = 0; i < lv.size(); ++i) {
    auto part = leaf_jordan(*lv[i], g.blocks[i]);
    out.coords.insert(out.coords.end(), part.begin(), part.end());
  }
  return out;
}

GroupElement group_inverse(const GroupSpec&, const GroupElement& g) {
  GroupElement r;
  r.tolerance = g.tolerance;
  for (const auto& b : g.blocks) {
    if (b.complex_flag) r.blocks.push_back(LeafMatrix::of(inverse(b.cplx)));
    else r.blocks.push_back(LeafMatrix::of(inverse(b.real)));
  }
  return r;
}

GroupElement group_product(const GroupSpec&, const GroupElement& a,
                           const GroupElement& b) {
  GroupElement r;
  r.tolerance = std::max(a.tolerance, b.tolerance);
  for (size_t i = 0; i < a.blocks.size(); ++i) {
    if (a.blocks[i].complex_flag)
      r.blocks.push_back(LeafMatrix::of(CMat(a.blocks[i].cplx * b.blocks[i].cplx)));
    else
      r.blocks.push_back(LeafMatrix::of(Mat(a.blocks[i].real * b.blocks[i].real)));
  }
  return r;
}

GroupElement group_identity(const GroupSpec& spec) {
  GroupElement r;
  for (const auto* leaf : spec.leaves()) {
    int d = leaf->matrix_dim();
    if (leaf->complex_storage()) r.blocks.push_back(LeafMatrix::of(CMat(CMat::Identity(d, d))));
    else r.blocks.push_back(LeafMatrix::of(Mat(Mat::Identity(d, d))));
  }
  return r;
}

CartanVector vec_distance(const GroupSpec& spec, const GroupElement& g,
                          const GroupElement& g_prime) {
  return mu(spec, group_product(spec, group_inverse(spec, g), g_prime));
}

CartanVector mu_power(const GroupSpec& spec, const GroupElement& g, int log2_exponent,
                      int dim_cap) {
  auto lv = spec.leaves();
  CartanVector out;
  for (size_t i = 0; i < lv.size(); ++i) {
    const GroupSpec& leaf = *lv[i];
    const LeafMatrix& b = g.blocks[i];
    Mat real = b.complex_flag ? realify(b.cplx) : b.real;
    if (real.rows() > dim_cap)
      throw std::domain_error("mu_power: realified dimension exceeds cap");
    auto logs = log_singular_values_of_power(real, log2_exponent);  // descending
    int stride = 1;
    if (leaf.kind == GroupSpec::Kind::SL_C) stride = 2;   // realification pairs
    if (leaf.kind == GroupSpec::Kind::SL_H) stride = 4;   // plus quaternionic pairs
    std::vector<double> part;
    if (leaf.kind == GroupSpec::Kind::SO) {
      for (int j = 0; j < leaf.q; ++j) part.push_back(logs[j]);
    } else {
      for (size_t j = 0; j < logs.size(); j += stride) part.push_back(logs[j]);
    }
    out.coords.insert(out.coords.end(), part.begin(), part.end());
  }
  return out;
}

CartanVector jordan_power_estimate(const GroupSpec& spec, const GroupElement& g,
                                   int log2_exponent, double* residual_out) {
  CartanVector hi = mu_power(spec, g, log2_exponent);
  double scale = std::ldexp(1.0, -log2_exponent);
  for (auto& v : hi.coords) v *= scale;
  if (residual_out) {
    CartanVector lo = mu_power(spec, g, log2_exponent - 1);
    double s2 = std::ldexp(1.0, -(log2_exponent - 1));
    double r = 0;
    for (size_t i = 0; i < hi.coords.size(); ++i) {
      double d = hi.coords[i] - lo.coords[i] * s2;
      r += d * d;
    }
    *residual_out = std::sqrt(r);
  }
  return hi;
}

}  // namespace cartanlab
