#include "cartanlab/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cartanlab/lp.hpp"

namespace cartanlab {

IsotropySpec IsotropySpec::wall_union(std::vector<std::string> names) {
  IsotropySpec s;
  s.kind = Kind::WallUnion;
  s.theta = std::move(names);
  if (s.theta.empty()) throw std::invalid_argument("isotropy: empty wall union");
  return s;
}

IsotropySpec IsotropySpec::hyperplane(RatVec form) {
  IsotropySpec s;
  s.kind = Kind::Hyperplane;
  s.form_coords = std::move(form);
  if (is_zero(s.form_coords)) throw std::invalid_argument("isotropy: zero form");
  return s;
}

IsotropySpec IsotropySpec::subspace(std::vector<RatVec> basis) {
  IsotropySpec s;
  s.kind = Kind::Subspace;
  s.basis = std::move(basis);
  if (s.basis.empty()) throw std::invalid_argument("isotropy: empty subspace basis");
  return s;
}

namespace {

// primitive integer representative with positive leading coefficient
RatVec canonical_form(const RatVec& v) {
  BigInt lcm(1);
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    BigInt g = BigInt::gcd(lcm, x.den());
    lcm = (lcm / g) * x.den();
  }
  RatVec w(v.size());
  BigInt content(0);
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i] * Rational(lcm);
    content = BigInt::gcd(content, w[i].num());
  }
  if (!content.is_zero() && content != BigInt(1)) {
    for (auto& x : w) x = x / Rational(content);
  }
  for (const auto& x : w) {
    if (x.is_zero()) continue;
    if (x.sign() < 0)
      for (auto& y : w) y = -y;
    break;
  }
  return w;
}

std::vector<RatVec> wall_subspace_basis(const RootSystem& sys, const RatVec& form) {
  // kernel of {form} within a
  std::vector<RatVec> rows{form};
  for (const auto& e : sys.a_equations) rows.push_back(e);
  RatMat m(static_cast<int>(rows.size()), sys.ambient_dim);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < sys.ambient_dim; ++j) m(i, j) = rows[i][j];
  return rat_kernel(m);
}

RatMat projector_onto(const std::vector<RatVec>& basis, int dim) {
  int k = static_cast<int>(basis.size());
  RatMat B(k, dim);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < dim; ++j) B(i, j) = basis[i][j];
  RatMat G(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) G(i, j) = dot(basis[i], basis[j]);
  // P = B^T G^{-1} B; solve G X = B instead of forming the inverse
  RatMat X(k, dim);
  for (int j = 0; j < dim; ++j) {
    RatVec col(k);
    for (int i = 0; i < k; ++i) col[i] = B(i, j);
    RatVec sol = solve_linear(G, col);
    for (int i = 0; i < k; ++i) X(i, j) = sol[i];
  }
  return B.transpose() * X;
}

int a_dim(const RootSystem& sys) {
  return sys.ambient_dim - static_cast<int>(sys.a_equations.size());
}

// base feasibility problem: x in a, in the closed chamber
LinearConstraints chamber_problem(const RootSystem& sys) {
  LinearConstraints lc;
  lc.nvars = sys.ambient_dim;
  for (const auto& e : sys.a_equations) lc.add_eq(e, Rational(0));
  for (const auto& a : sys.simple_roots) lc.add_ge(a, Rational(0));
  return lc;
}

}  // namespace

WallArrangement build_arrangement(const RootSystem& sys, const IsotropySpec& spec,
                                  size_t weyl_cap) {
  WallArrangement arr;
  arr.system = sys;
  arr.source = spec;

  std::vector<std::vector<RatVec>> subspaces;
  if (spec.kind == IsotropySpec::Kind::WallUnion) {
    for (const auto& name : spec.theta) {
      int idx = sys.simple_index(name);
      subspaces.push_back(wall_subspace_basis(sys, sys.simple_roots[idx]));
    }
  } else if (spec.kind == IsotropySpec::Kind::Hyperplane) {
    RatVec phi = sys.project_to_a(spec.form_coords);
    if (is_zero(phi))
      throw std::invalid_argument("isotropy: form vanishes on a (degenerate wall)");
    auto W = weyl_group(sys, weyl_cap);
    for (const auto& w : W) subspaces.push_back(wall_subspace_basis(sys, w * phi));
  } else {
    for (const auto& v : spec.basis)
      for (const auto& e : sys.a_equations)
        if (!dot(v, e).is_zero())
          throw std::invalid_argument("isotropy: subspace basis vector not inside a");
    {
      RatMat B(static_cast<int>(spec.basis.size()), sys.ambient_dim);
      for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < sys.ambient_dim; ++j) B(i, j) = spec.basis[i][j];
      if (rat_rank(B) != B.rows())
        throw std::invalid_argument("isotropy: subspace basis not independent");
      if (B.rows() >= a_dim(sys))
        throw std::invalid_argument("isotropy: subspace must be proper in a");
    }
    auto W = weyl_group(sys, weyl_cap);
    for (const auto& w : W) {
      std::vector<RatVec> img;
      for (const auto& v : spec.basis) img.push_back(w * v);
      subspaces.push_back(std::move(img));
    }
  }

  // dedup by exact projector equality
  std::vector<Wall> walls;
  for (auto& basis : subspaces) {
    RatMat P = projector_onto(basis, sys.ambient_dim);
    bool dup = false;
    for (const auto& w : walls)
      if (w.projector == P) { dup = true; break; }
    if (dup) continue;
    Wall w;
    w.basis = std::move(basis);
    w.projector = std::move(P);
    walls.push_back(std::move(w));
  }
  std::sort(walls.begin(), walls.end(), [](const Wall& x, const Wall& y) {
    return RatMat::lex_less(x.projector, y.projector);
  });

  int adim = a_dim(sys);
  arr.hyperplane_walls = true;
  for (auto& w : walls) {
    if (static_cast<int>(w.basis.size()) != adim - 1) {
      arr.hyperplane_walls = false;
      continue;
    }
    // normal direction inside a
    std::vector<RatVec> rows = w.basis;
    for (const auto& e : sys.a_equations) rows.push_back(e);
    RatMat m(static_cast<int>(rows.size()), sys.ambient_dim);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < sys.ambient_dim; ++j) m(i, j) = rows[i][j];
    auto normals = rat_kernel(m);
    if (normals.size() != 1) throw std::logic_error("wall normal not one-dimensional");
    w.form = canonical_form(normals[0]);
  }
  arr.walls = std::move(walls);

  arr.iota = opposition_involution(sys);
  arr.iota_stable = true;
  for (const auto& w : arr.walls) {
    RatMat img = arr.iota * w.projector * arr.iota.transpose();
    bool found = false;
    for (const auto& w2 : arr.walls)
      if (w2.projector == img) { found = true; break; }
    if (!found) { arr.iota_stable = false; break; }
  }
  return arr;
}

double dist_to_muH(const WallArrangement& arr, const std::vector<double>& u,
                   double chamber_tol) {
  const RootSystem& sys = arr.system;
  double scale = 0;
  for (double x : u) scale = std::max(scale, std::fabs(x));
  for (const auto& a : sys.simple_roots) {
    double av = 0;
    for (int i = 0; i < sys.ambient_dim; ++i) av += a[i].to_double() * u[i];
    if (av < -chamber_tol * std::max(1.0, scale))
      throw std::domain_error("dist_to_muH: point outside the closed chamber; Weyl-reduce first");
  }
  double best = -1;
  for (const auto& w : arr.walls) {
    double d2 = 0;
    for (int i = 0; i < sys.ambient_dim; ++i) {
      double ri = u[i];
      for (int j = 0; j < sys.ambient_dim; ++j) ri -= w.projector(i, j).to_double() * u[j];
      d2 += ri * ri;
    }
    double d = std::sqrt(std::max(0.0, d2));
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) throw std::logic_error("dist_to_muH: empty arrangement");
  return best;
}

Rational dist2_to_muH(const WallArrangement& arr, const RatVec& u) {
  const RootSystem& sys = arr.system;
  for (const auto& a : sys.simple_roots)
    if (dot(a, u).sign() < 0)
      throw std::domain_error("dist2_to_muH: point outside the closed chamber");
  std::optional<Rational> best;
  for (const auto& w : arr.walls) {
    RatVec pu = w.projector * u;
    RatVec r = u - pu;
    Rational d2 = dot(r, r);
    if (!best || d2 < *best) best = d2;
  }
  if (!best) throw std::logic_error("dist2_to_muH: empty arrangement");
  return *best;
}

std::vector<Component> components(const WallArrangement& arr) {
  const RootSystem& sys = arr.system;
  if (!arr.hyperplane_walls) {
    // lower-dimensional walls do not disconnect the chamber
    Component c;
    RatVec x = sys.chamber_interior_point();
    // nudge off the walls if necessary, staying inside the chamber
    for (int attempt = 0; attempt < 1000; ++attempt) {
      bool on_wall = false;
      for (const auto& w : arr.walls) {
        RatVec r = x - (w.projector * x);
        if (is_zero(r)) { on_wall = true; break; }
      }
      if (!on_wall) break;
      RatVec y = sys.chamber_interior_point();
      // deterministic perturbation directions from the positive roots
      const auto& root = sys.positive_roots[attempt % sys.positive_roots.size()].coords;
      x = y + (Rational(1, 100 + attempt) * sys.project_to_a(root));
      if (chamber_membership(sys, x).position == ChamberPosition::Outside)
        x = y - (Rational(1, 100 + attempt) * sys.project_to_a(root));
    }
    c.interior_point = x;
    return {c};
  }

  std::vector<RatVec> forms;
  for (const auto& w : arr.walls) forms.push_back(*w.form);
  int nwalls = static_cast<int>(forms.size());

  std::vector<Component> out;
  std::vector<int> signs(nwalls, 0);
  // depth-first sign assignment with exact LP pruning; '+' explored first so
  // the output ordering is deterministic (sorted by sign vector)
  auto feasible = [&](int depth) -> LPResult {
    LinearConstraints lc = chamber_problem(sys);
    for (int i = 0; i < depth; ++i) {
      RatVec f = forms[i];
      if (signs[i] < 0)
        for (auto& x : f) x = -x;
      lc.add_ge(f, Rational(1));  // strict sign via cone scaling
    }
    return lp_feasible(lc);
  };
  std::function<void(int)> rec = [&](int depth) {
    LPResult r = feasible(depth);
    if (!r.feasible) return;
    if (depth == nwalls) {
      Component c;
      c.signs = signs;
      c.interior_point = r.point;
      out.push_back(std::move(c));
      return;
    }
    signs[depth] = +1;
    rec(depth + 1);
    signs[depth] = -1;
    rec(depth + 1);
    signs[depth] = 0;
  };
  rec(0);

  // facet forms: signed forms whose kernel meets the closure away from 0
  for (auto& c : out) {
    for (int i = 0; i < nwalls; ++i) {
      LinearConstraints lc = chamber_problem(sys);
      for (int j = 0; j < nwalls; ++j) {
        RatVec f = forms[j];
        if (c.signs[j] < 0)
          for (auto& x : f) x = -x;
        lc.add_ge(f, Rational(0));  // closure
      }
      lc.add_eq(forms[i], Rational(0));
      RatVec norm(sys.ambient_dim);
      for (const auto& a : sys.simple_roots) norm = norm + a;
      lc.add_eq(norm, Rational(1));  // excludes the origin
      if (lp_feasible(lc).feasible) {
        c.facet_walls.push_back(i);
        RatVec f = forms[i];
        if (c.signs[i] < 0)
          for (auto& x : f) x = -x;
        c.facet_forms.push_back(std::move(f));
      }
    }
  }
  return out;
}

IotaAction iota_action(const WallArrangement& arr, const std::vector<Component>& comps) {
  if (!arr.iota_stable)
    throw std::domain_error(
        "iota_action: wall set is not stable under the opposition involution "
        "(such a union cannot arise as mu(H) of an actual subgroup)");
  IotaAction act;
  act.image.assign(comps.size(), -1);
  if (comps.size() == 1) {
    act.image[0] = 0;
    act.fixed.push_back(0);
    return act;
  }
  std::vector<RatVec> forms;
  for (const auto& w : arr.walls) forms.push_back(w.form ? *w.form : RatVec{});
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    RatVec q = arr.iota * comps[ci].interior_point;
    std::vector<int> sig(arr.walls.size(), 0);
    for (size_t i = 0; i < arr.walls.size(); ++i) {
      if (forms[i].empty()) continue;
      int s = dot(forms[i], q).sign();
      if (s == 0)
        throw std::domain_error("iota_action: image of an interior point lies on a wall");
      sig[i] = s;
    }
    for (size_t cj = 0; cj < comps.size(); ++cj)
      if (comps[cj].signs == sig) { act.image[ci] = static_cast<int>(cj); break; }
    if (act.image[ci] < 0)
      throw std::logic_error("iota_action: image component not found");
  }
  for (size_t ci = 0; ci < comps.size(); ++ci)
    if (act.image[ci] == static_cast<int>(ci)) act.fixed.push_back(static_cast<int>(ci));
  return act;
}

std::vector<int> avoided_simple_roots(const WallArrangement& arr, const Component& comp) {
  const RootSystem& sys = arr.system;
  std::vector<int> avoided;
  for (int ai = 0; ai < sys.rank; ++ai) {
    LinearConstraints lc = chamber_problem(sys);
    for (size_t j = 0; j < comp.signs.size(); ++j) {
      RatVec f = *arr.walls[j].form;
      if (comp.signs[j] < 0)
        for (auto& x : f) x = -x;
      lc.add_ge(f, Rational(1));
    }
    lc.add_eq(sys.simple_roots[ai], Rational(0));
    if (!lp_feasible(lc).feasible) avoided.push_back(ai);
  }
  return avoided;
}

WallSplit split_wall_distance(const RootSystem& sys, const std::vector<RatVec>& subspace_basis,
                              const std::vector<double>& v, double tie_tol) {
  RatMat P = projector_onto(subspace_basis, sys.ambient_dim);
  auto W = weyl_group(sys);  // lex-sorted
  int n = sys.ambient_dim;

  WallSplit best;
  double best_d2 = -1;
  for (size_t wi = 0; wi < W.size(); ++wi) {
    // projector onto w . a_H is w P w^T
    RatMat Q = W[wi] * P * W[wi].transpose();
    std::vector<double> proj(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) proj[i] += Q(i, j).to_double() * v[j];
    double d2 = 0;
    for (int i = 0; i < n; ++i) {
      double r = v[i] - proj[i];
      d2 += r * r;
    }
    // strictly better, or first occurrence within tie tolerance (W is sorted,
    // so the first minimizer is the lexicographically smallest one)
    if (best_d2 < 0 || d2 < best_d2 - tie_tol) {
      best_d2 = d2;
      best.weyl_index = static_cast<int>(wi);
      best.a = proj;
    }
  }
  best.b.resize(n);
  for (int i = 0; i < n; ++i) best.b[i] = v[i] - best.a[i];
  best.dist = std::sqrt(std::max(0.0, best_d2));
  return best;
}

BigInt integerize(const RootSystem& sys, const RatVec& omega_coeffs) {
  if (static_cast<int>(omega_coeffs.size()) != sys.rank)
    throw std::invalid_argument("integerize: need one coefficient per simple root");
  auto omegas = fundamental_weights(sys);
  RatVec phi(sys.ambient_dim);
  for (int i = 0; i < sys.rank; ++i) phi = phi + (omega_coeffs[i] * omegas[i].coords);
  auto W = weyl_group(sys);
  BigInt k(1);
  for (const auto& w : W) {
    RatVec t = omega_coefficients(sys, w * phi);
    for (const auto& c : t) {
      BigInt g = BigInt::gcd(k, c.den());
      k = (k / g) * c.den();
    }
  }
  return k;
}

}  // namespace cartanlab
