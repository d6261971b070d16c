#include "cartanlab/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cartanlab {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
  }
  return "?";
}

std::string RootSystem::name() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += family_name(factors[i].family) + std::to_string(factors[i].rank);
  }
  return s;
}

int RootSystem::simple_index(const std::string& name) const {
  for (size_t i = 0; i < simple_names.size(); ++i)
    if (simple_names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown simple root '" + name + "'");
}

namespace {

RatVec unit(int dim, int i, const Rational& c = Rational(1)) {
  RatVec v(dim);
  v[i] = c;
  return v;
}

void check_profile(const MultiplicityProfile& m, Family f) {
  auto bad = [](long x) { return x <= 0; };
  if (bad(m.pair)) throw std::invalid_argument("multiplicity profile: nonpositive pair entry");
  if ((f == Family::B || f == Family::BC) && bad(m.single))
    throw std::invalid_argument("multiplicity profile: nonpositive e_i entry");
  if ((f == Family::C || f == Family::BC) && bad(m.doubled))
    throw std::invalid_argument("multiplicity profile: nonpositive 2e_i entry");
}

}  // namespace

RootSystem build_root_system(Family family, int rank, const MultiplicityProfile& mult) {
  if (rank < 1) throw std::invalid_argument("root system rank must be >= 1");
  if (family == Family::D && rank < 3)
    throw std::invalid_argument("D family requires rank >= 3");
  check_profile(mult, family);

  RootSystem sys;
  sys.rank = rank;
  int dim = family == Family::A ? rank + 1 : rank;
  sys.ambient_dim = dim;
  sys.factors.push_back({family, rank, 0, dim});

  for (int i = 0; i < rank; ++i) sys.simple_names.push_back("alpha" + std::to_string(i + 1));

  auto ei_minus_ej = [&](int i, int j) {
    RatVec v(dim);
    v[i] = Rational(1);
    v[j] = Rational(-1);
    return v;
  };
  auto ei_plus_ej = [&](int i, int j) {
    RatVec v(dim);
    v[i] = Rational(1);
    v[j] = Rational(1);
    return v;
  };

  switch (family) {
    case Family::A: {
      for (int i = 0; i < rank; ++i) sys.simple_roots.push_back(ei_minus_ej(i, i + 1));
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
          sys.positive_roots.push_back({ei_minus_ej(i, j), mult.pair});
      RatVec sum(dim, Rational(1));
      sys.a_equations.push_back(sum);
      break;
    }
    case Family::B:
    case Family::BC: {
      for (int i = 0; i + 1 < rank; ++i) sys.simple_roots.push_back(ei_minus_ej(i, i + 1));
      sys.simple_roots.push_back(unit(dim, rank - 1));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          sys.positive_roots.push_back({ei_minus_ej(i, j), mult.pair});
          sys.positive_roots.push_back({ei_plus_ej(i, j), mult.pair});
        }
      for (int i = 0; i < rank; ++i)
        sys.positive_roots.push_back({unit(dim, i), mult.single});
      if (family == Family::BC)
        for (int i = 0; i < rank; ++i)
          sys.positive_roots.push_back({unit(dim, i, Rational(2)), mult.doubled});
      break;
    }
    case Family::C: {
      for (int i = 0; i + 1 < rank; ++i) sys.simple_roots.push_back(ei_minus_ej(i, i + 1));
      sys.simple_roots.push_back(unit(dim, rank - 1, Rational(2)));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          sys.positive_roots.push_back({ei_minus_ej(i, j), mult.pair});
          sys.positive_roots.push_back({ei_plus_ej(i, j), mult.pair});
        }
      for (int i = 0; i < rank; ++i)
        sys.positive_roots.push_back({unit(dim, i, Rational(2)), mult.doubled});
      break;
    }
    case Family::D: {
      for (int i = 0; i + 1 < rank; ++i) sys.simple_roots.push_back(ei_minus_ej(i, i + 1));
      sys.simple_roots.push_back(ei_plus_ej(rank - 2, rank - 1));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          sys.positive_roots.push_back({ei_minus_ej(i, j), mult.pair});
          sys.positive_roots.push_back({ei_plus_ej(i, j), mult.pair});
        }
      break;
    }
  }
  return sys;
}

RootSystem product(const RootSystem& a, const RootSystem& b) {
  RootSystem sys;
  sys.ambient_dim = a.ambient_dim + b.ambient_dim;
  sys.rank = a.rank + b.rank;
  auto pad_left = [&](const RatVec& v) {
    RatVec r(sys.ambient_dim);
    for (int i = 0; i < a.ambient_dim; ++i) r[i] = v[i];
    return r;
  };
  auto pad_right = [&](const RatVec& v) {
    RatVec r(sys.ambient_dim);
    for (int i = 0; i < b.ambient_dim; ++i) r[a.ambient_dim + i] = v[i];
    return r;
  };
  for (auto f : a.factors) sys.factors.push_back(f);
  for (auto f : b.factors) {
    f.coord_offset += a.ambient_dim;
    sys.factors.push_back(f);
  }
  for (const auto& r : a.simple_roots) sys.simple_roots.push_back(pad_left(r));
  for (const auto& r : b.simple_roots) sys.simple_roots.push_back(pad_right(r));
  for (int i = 0; i < sys.rank; ++i) sys.simple_names.push_back("alpha" + std::to_string(i + 1));
  for (const auto& r : a.positive_roots) sys.positive_roots.push_back({pad_left(r.coords), r.mult});
  for (const auto& r : b.positive_roots) sys.positive_roots.push_back({pad_right(r.coords), r.mult});
  for (const auto& e : a.a_equations) sys.a_equations.push_back(pad_left(e));
  for (const auto& e : b.a_equations) sys.a_equations.push_back(pad_right(e));
  return sys;
}

RatVec RootSystem::project_to_a(const RatVec& form) const {
  RatVec v = form;
  // the a_equations are pairwise orthogonal (one per A factor), so sequential
  // orthogonal projection is exact
  for (const auto& e : a_equations) {
    Rational c = dot(v, e) / dot(e, e);
    if (!c.is_zero()) v = v - (c * e);
  }
  return v;
}

RatVec RootSystem::chamber_interior_point() const {
  // x = sum c_j r_j with Gram(Delta) c = 1; lies in span(Delta) and has
  // alpha_i(x) = 1 for all i
  int r = rank;
  RatMat gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram(i, j) = dot(simple_roots[i], simple_roots[j]);
  RatVec ones(r, Rational(1));
  RatVec c = solve_linear(gram, ones);
  RatVec x(ambient_dim);
  for (int j = 0; j < r; ++j) x = x + (c[j] * simple_roots[j]);
  return x;
}

RatMat simple_reflection_matrix(const RootSystem& sys, int alpha_index) {
  const RatVec& a = sys.simple_roots.at(alpha_index);
  Rational aa = dot(a, a);
  int n = sys.ambient_dim;
  RatMat m = RatMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) -= Rational(2) * a[i] * a[j] / aa;
  return m;
}

Weight simple_reflection(const RootSystem& sys, int alpha_index, const Weight& phi) {
  if (alpha_index < 0 || alpha_index >= sys.rank)
    throw std::invalid_argument("simple_reflection: not a simple root of the system");
  const RatVec& a = sys.simple_roots[alpha_index];
  Rational c = Rational(2) * dot(phi.coords, a) / dot(a, a);
  return Weight{phi.coords - (c * a)};
}

std::vector<RatMat> weyl_group(const RootSystem& sys, size_t cap) {
  std::vector<RatMat> gens;
  for (int i = 0; i < sys.rank; ++i) gens.push_back(simple_reflection_matrix(sys, i));
  std::vector<RatMat> elems{RatMat::identity(sys.ambient_dim)};
  auto cmp = [](const RatMat& x, const RatMat& y) { return RatMat::lex_less(x, y); };
  std::set<RatMat, decltype(cmp)> seen(cmp);
  seen.insert(elems[0]);
  for (size_t head = 0; head < elems.size(); ++head) {
    RatMat cur = elems[head];  // copy: elems may reallocate below
    for (const auto& g : gens) {
      RatMat next = g * cur;
      if (seen.insert(next).second) {
        elems.push_back(next);
        if (elems.size() > cap)
          throw std::runtime_error("weyl_group: element cap exceeded");
      }
    }
  }
  std::sort(elems.begin(), elems.end(), cmp);
  return elems;
}

RatMat opposition_involution(const RootSystem& sys) {
  return opposition_involution(sys, weyl_group(sys));
}

RatMat opposition_involution(const RootSystem& sys, const std::vector<RatMat>& weyl) {
  RatVec x = sys.chamber_interior_point();
  for (const auto& w : weyl) {
    RatVec wx = w * x;
    bool neg_chamber = true;
    for (const auto& a : sys.simple_roots)
      if (dot(a, wx).sign() > 0) { neg_chamber = false; break; }
    if (!neg_chamber) continue;
    // iota = -w0
    RatMat iota = w;
    for (int i = 0; i < iota.rows(); ++i)
      for (int j = 0; j < iota.cols(); ++j) iota(i, j) = -iota(i, j);
    // sanity: iota permutes the simple roots
    for (const auto& a : sys.simple_roots) {
      RatVec im = iota * a;
      bool found = false;
      for (const auto& b : sys.simple_roots)
        if (im == b) { found = true; break; }
      if (!found) throw std::logic_error("opposition involution does not permute the simple roots");
    }
    return iota;
  }
  throw std::logic_error("no longest element found in Weyl group");
}

std::vector<Weight> fundamental_weights(const RootSystem& sys) {
  int r = sys.rank;
  // omega_a = sum_b c_{ab} alpha_b with  2 (omega_a, alpha_j) / (alpha_j,alpha_j) = delta_aj
  RatMat m(r, r);
  for (int j = 0; j < r; ++j) {
    Rational jj = dot(sys.simple_roots[j], sys.simple_roots[j]);
    for (int b = 0; b < r; ++b)
      m(j, b) = Rational(2) * dot(sys.simple_roots[b], sys.simple_roots[j]) / jj;
  }
  std::vector<Weight> ws;
  for (int a = 0; a < r; ++a) {
    RatVec rhs(r);
    rhs[a] = Rational(1);
    RatVec c = solve_linear(m, rhs);
    RatVec w(sys.ambient_dim);
    for (int b = 0; b < r; ++b) w = w + (c[b] * sys.simple_roots[b]);
    ws.push_back(Weight{w});
  }
  return ws;
}

bool dominance_leq(const RootSystem& sys, const Weight& nu, const Weight& nu_prime) {
  // covectors are functionals on a: compare canonical representatives
  RatVec d = sys.project_to_a(nu_prime.coords - nu.coords);
  // solve d = sum c_b alpha_b via the Gram system; then verify exactly
  int r = sys.rank;
  RatMat gram(r, r);
  RatVec rhs(r);
  for (int i = 0; i < r; ++i) {
    rhs[i] = dot(sys.simple_roots[i], d);
    for (int j = 0; j < r; ++j) gram(i, j) = dot(sys.simple_roots[i], sys.simple_roots[j]);
  }
  RatVec c = solve_linear(gram, rhs);
  RatVec recon(sys.ambient_dim);
  for (int b = 0; b < r; ++b) recon = recon + (c[b] * sys.simple_roots[b]);
  if (!is_zero(recon - d)) return false;  // outside span(Delta)
  for (const auto& ci : c)
    if (ci.sign() < 0) return false;
  return true;
}

ChamberMembership chamber_membership(const RootSystem& sys, const RatVec& v) {
  ChamberMembership m;
  m.position = ChamberPosition::Interior;
  for (int i = 0; i < sys.rank; ++i) {
    int s = dot(sys.simple_roots[i], v).sign();
    if (s < 0) {
      m.position = ChamberPosition::Outside;
      m.vanishing_simple_roots.clear();
      return m;
    }
    if (s == 0) m.vanishing_simple_roots.push_back(i);
  }
  if (!m.vanishing_simple_roots.empty()) m.position = ChamberPosition::Boundary;
  return m;
}

RatVec omega_coefficients(const RootSystem& sys, const RatVec& form) {
  RatVec t(sys.rank);
  for (int i = 0; i < sys.rank; ++i) {
    const RatVec& a = sys.simple_roots[i];
    t[i] = Rational(2) * dot(form, a) / dot(a, a);
  }
  return t;
}

Rational div_Xa(const RootSystem& sys, const RatVec& a) {
  Rational s;
  for (const auto& r : sys.positive_roots) {
    Rational v = dot(r.coords, a);
    // min(v,0) + min(-v,0) = -|v|
    s -= Rational(r.mult) * v.abs();
  }
  return s;
}

double div_Xa(const RootSystem& sys, const std::vector<double>& a) {
  double s = 0;
  for (const auto& r : sys.positive_roots) {
    double v = 0;
    for (int i = 0; i < sys.ambient_dim; ++i) v += r.coords[i].to_double() * a[i];
    s -= static_cast<double>(r.mult) * std::abs(v);
  }
  return s;
}

RatVec weyl_reduce(const RootSystem& sys, RatVec v) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < sys.rank; ++i) {
      const RatVec& a = sys.simple_roots[i];
      Rational av = dot(a, v);
      if (av.sign() < 0) {
        Rational c = Rational(2) * av / dot(a, a);
        v = v - (c * a);
        moved = true;
      }
    }
  }
  return v;
}

std::vector<double> weyl_reduce(const RootSystem& sys, std::vector<double> v) {
  bool moved = true;
  int guard = 0;
  while (moved && guard++ < 100000) {
    moved = false;
    for (int i = 0; i < sys.rank; ++i) {
      const RatVec& a = sys.simple_roots[i];
      double av = 0, aa = 0;
      for (int k = 0; k < sys.ambient_dim; ++k) {
        double ak = a[k].to_double();
        av += ak * v[k];
        aa += ak * ak;
      }
      if (av < -1e-15) {
        double c = 2 * av / aa;
        for (int k = 0; k < sys.ambient_dim; ++k) v[k] -= c * a[k].to_double();
        moved = true;
      }
    }
  }
  return v;
}

}  // namespace cartanlab
