#include "cartanlab/obstruct.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartanlab {

namespace {

int field_dim(char f) {
  switch (f) {
    case 'R': return 1;
    case 'C': return 2;
    case 'H': return 4;
  }
  throw std::invalid_argument("field must be R, C or H");
}

[[noreturn]] void unknown(const GroupData& g) {
  throw std::invalid_argument("unknown or unsupported group family '" + g.family + "'");
}

bool so_like(const std::string& f) { return f == "SO" || f == "Spin" || f == "O"; }

}  // namespace

std::string GroupData::name() const {
  if (family == "product") {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) s += " x ";
      s += factors[i].name();
    }
    return s;
  }
  if (family == "SL") return "SL(" + std::to_string(n) + "," + field + ")";
  if (so_like(family) || family == "SU" || family == "Sp" || family == "U")
    return family + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (family == "SpR") return "Sp(" + std::to_string(2 * ell) + ",R)";
  if (family == "SpC") return "Sp(" + std::to_string(2 * ell) + ",C)";
  if (family == "SOstar") return "SO*(" + std::to_string(2 * n) + ")";
  return family;
}

long dim_symmetric_space(const GroupData& g) {
  if (g.family == "product") {
    long s = 0;
    for (const auto& f : g.factors) s += dim_symmetric_space(f);
    return s;
  }
  if (g.family == "compact") return 0;
  if (g.family == "SL") {
    long n = g.n;
    switch (g.field) {
      case 'R': return (n - 1) * (n + 2) / 2;
      case 'C': return n * n - 1;
      case 'H': return (n - 1) * (2 * n + 1);
    }
    unknown(g);
  }
  if (so_like(g.family)) return static_cast<long>(g.p) * g.q;
  if (g.family == "SU") return 2l * g.p * g.q;
  if (g.family == "Sp") return 4l * g.p * g.q;
  if (g.family == "U") return 2l * g.p * g.q;
  if (g.family == "SpR") return static_cast<long>(g.ell) * (g.ell + 1);
  if (g.family == "SpC") return static_cast<long>(g.ell) * (2 * g.ell + 1);
  if (g.family == "SOstar") return static_cast<long>(g.n) * (g.n - 1);
  if (g.family == "G2(2)") return 8;
  if (g.family == "F4(-20)") return 16;
  if (g.family == "E6(-26)") return 26;
  if (g.family == "E6(-14)") return 32;
  unknown(g);
}

long dim_group(const GroupData& g) {
  if (g.family == "product") {
    long s = 0;
    for (const auto& f : g.factors) s += dim_group(f);
    return s;
  }
  if (g.family == "SL") {
    long n = g.n;
    switch (g.field) {
      case 'R': return n * n - 1;
      case 'C': return 2 * (n * n - 1);
      case 'H': return 4l * n * n - 1;
    }
    unknown(g);
  }
  long m = g.p + g.q;
  if (so_like(g.family)) return m * (m - 1) / 2;
  if (g.family == "SU") return m * m - 1;
  if (g.family == "U") return m * m;
  if (g.family == "Sp") return m * (2 * m + 1);
  if (g.family == "SpR") return static_cast<long>(g.ell) * (2 * g.ell + 1);
  if (g.family == "SpC") return 2l * g.ell * (2 * g.ell + 1);
  if (g.family == "SOstar") return static_cast<long>(g.n) * (2 * g.n - 1);
  if (g.family == "G2(2)") return 14;
  if (g.family == "F4(-20)") return 52;
  if (g.family == "E6(-26)") return 78;
  if (g.family == "E6(-14)") return 78;
  unknown(g);
}

long dim_maximal_compact(const GroupData& g) { return dim_group(g) - dim_symmetric_space(g); }

int real_rank(const GroupData& g) {
  if (g.family == "product") {
    int r = 0;
    for (const auto& f : g.factors) r += real_rank(f);
    return r;
  }
  if (g.family == "compact") return 0;
  if (g.family == "SL") return g.n - 1;
  if (so_like(g.family) || g.family == "SU" || g.family == "Sp") return std::min(g.p, g.q);
  if (g.family == "U") return std::min(g.p, g.q);
  if (g.family == "SpR" || g.family == "SpC") return g.ell;
  if (g.family == "SOstar") return g.n / 2;
  if (g.family == "G2(2)") return 2;
  if (g.family == "F4(-20)") return 1;
  if (g.family == "E6(-26)") return 2;
  if (g.family == "E6(-14)") return 2;
  unknown(g);
}

RootSystem restricted_root_system(const GroupData& g) {
  if (g.family == "product") {
    RootSystem sys = restricted_root_system(g.factors.at(0));
    for (size_t i = 1; i < g.factors.size(); ++i)
      sys = product(sys, restricted_root_system(g.factors[i]));
    return sys;
  }
  if (g.family == "SL")
    return build_root_system(Family::A, g.n - 1,
                             {field_dim(g.field), field_dim(g.field), field_dim(g.field)});
  if (so_like(g.family)) {
    int p = std::max(g.p, g.q), q = std::min(g.p, g.q);
    if (p > q) return build_root_system(Family::B, q, {1, p - q, 1});
    return build_root_system(Family::D, q, {1, 1, 1});
  }
  if (g.family == "SU") {
    int p = std::max(g.p, g.q), q = std::min(g.p, g.q);
    if (p > q) return build_root_system(Family::BC, q, {2, 2 * (p - q), 1});
    return build_root_system(Family::C, q, {2, 1, 1});
  }
  if (g.family == "Sp") {
    int p = std::max(g.p, g.q), q = std::min(g.p, g.q);
    if (p > q) return build_root_system(Family::BC, q, {4, 4 * (p - q), 3});
    return build_root_system(Family::C, q, {4, 1, 3});
  }
  if (g.family == "SpR") return build_root_system(Family::C, g.ell, {1, 1, 1});
  if (g.family == "SpC") return build_root_system(Family::C, g.ell, {2, 1, 2});
  throw std::invalid_argument("no realized restricted root system for " + g.name() +
                              " (dimension-only family)");
}

long rank_plus_multiplicity_sum(const GroupData& g) {
  if (g.family == "product") {
    long s = 0;
    for (const auto& f : g.factors) s += rank_plus_multiplicity_sum(f);
    return s;
  }
  // exceptional families: literal restricted-root multiplicity data
  if (g.family == "G2(2)") return 2 + 6;            // six positive roots, all mult 1
  if (g.family == "F4(-20)") return 1 + (8 + 7);    // BC1 with m(e)=8, m(2e)=7
  if (g.family == "E6(-26)") return 2 + 3 * 8;      // A2 with all mult 8
  if (g.family == "E6(-14)") return 2 + (2 * 6 + 2 * 8 + 2 * 1);  // BC2: 6/8/1
  RootSystem sys = restricted_root_system(g);
  long s = sys.rank;
  for (const auto& r : sys.positive_roots) s += r.mult;
  return s;
}

long required_vcd(const GroupData& g, const GroupData& h) {
  long d = dim_symmetric_space(g) - dim_symmetric_space(h);
  if (d < 0)
    throw std::invalid_argument("required_vcd: dim(H/K_H) exceeds dim(G/K); misconfigured pair");
  return d;
}

long boundary_dim_bound(const BoundRule& rule, const RootSystem* sys) {
  switch (rule.kind) {
    case BoundRule::Kind::MidspaceFibration:
      return static_cast<long>(rule.half_dim) * field_dim(rule.field);
    case BoundRule::Kind::FormFlag:
      return static_cast<long>(rule.dim_V - rule.form_rank) * field_dim(rule.field) - 1;
    case BoundRule::Kind::ParabolicPair: {
      if (!sys) throw std::invalid_argument("ParabolicPair bound needs the root system");
      auto span_complement_sum = [&](const std::vector<std::string>& theta,
                                     const std::vector<std::string>& theta_prime) {
        auto in_span = [&](const RatVec& root, const std::vector<std::string>& excluded) {
          // span of the simple roots NOT named in `excluded`
          std::vector<int> keep;
          for (int i = 0; i < sys->rank; ++i) {
            bool ex = false;
            for (const auto& nm : excluded)
              if (sys->simple_index(nm) == i) ex = true;
            if (!ex) keep.push_back(i);
          }
          if (keep.empty()) return is_zero(root);
          RatMat m(static_cast<int>(keep.size()) + 1, sys->ambient_dim);
          for (size_t r = 0; r < keep.size(); ++r)
            for (int j = 0; j < sys->ambient_dim; ++j)
              m(static_cast<int>(r), j) = sys->simple_roots[keep[r]][j];
          for (int j = 0; j < sys->ambient_dim; ++j)
            m(static_cast<int>(keep.size()), j) = root[j];
          RatMat base(static_cast<int>(keep.size()), sys->ambient_dim);
          for (size_t r = 0; r < keep.size(); ++r)
            for (int j = 0; j < sys->ambient_dim; ++j)
              base(static_cast<int>(r), j) = sys->simple_roots[keep[r]][j];
          return rat_rank(m) == rat_rank(base);
        };
        long sum = 0;
        for (const auto& r : sys->positive_roots) {
          if (in_span(r.coords, theta) || in_span(r.coords, theta_prime)) continue;
          sum += r.mult;
        }
        return sum;
      };
      return span_complement_sum(rule.theta, rule.theta_prime);
    }
  }
  throw std::logic_error("boundary_dim_bound: unreachable");
}

long anosov_vcd_bound(const BoundRule& rule, const RootSystem* sys) {
  return boundary_dim_bound(rule, sys) + 1;
}

std::string status_name(Verdict::Status s) {
  return s == Verdict::Status::NoCompactQuotients ? "NO_COMPACT_QUOTIENTS"
                                                  : "NOT_OBSTRUCTED_BY_THIS_METHOD";
}

Verdict obstruction_verdict(const ObstructionCase& c) {
  Verdict v;
  v.required = required_vcd(c.g, c.h);
  RootSystem sys = c.system();
  WallArrangement arr = build_arrangement(sys, c.isotropy);
  auto comps = components(arr);
  auto act = iota_action(arr, comps);
  v.component_count = static_cast<int>(comps.size());

  // A cocompact subgroup must have vcd equal to `required`; virtually cyclic
  // groups have vcd <= 1, so for required >= 2 only opposition-invariant
  // components can host the Cartan image.
  std::vector<std::vector<int>> orbits;
  if (v.required >= 2) {
    for (int ci : act.fixed) orbits.push_back({ci});
  } else {
    std::vector<bool> seen(comps.size(), false);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      if (seen[ci]) continue;
      int im = act.image[ci];
      seen[ci] = true;
      if (im != static_cast<int>(ci)) {
        seen[im] = true;
        orbits.push_back({static_cast<int>(ci), im});
      } else {
        orbits.push_back({static_cast<int>(ci)});
      }
    }
  }

  if (orbits.empty())
    v.note = "no opposition-invariant component: no suitable subgroup exists at all";

  bool all_obstructed = true;
  for (const auto& orbit : orbits) {
    OrbitTrace t;
    t.orbit = orbit;
    // roots avoided by every component of the orbit
    std::vector<int> avoided = avoided_simple_roots(arr, comps[orbit[0]]);
    for (size_t k = 1; k < orbit.size(); ++k) {
      auto other = avoided_simple_roots(arr, comps[orbit[k]]);
      std::vector<int> inter;
      for (int a : avoided)
        if (std::find(other.begin(), other.end(), a) != other.end()) inter.push_back(a);
      avoided = inter;
    }
    t.avoided = avoided;
    for (int ai : avoided) {
      const std::string& nm = sys.simple_names[ai];
      auto it = c.rules.find(nm);
      if (it == c.rules.end()) continue;
      long bound = anosov_vcd_bound(it->second, &sys);
      t.applied.push_back(nm);
      if (!t.best_bound || bound > *t.best_bound) t.best_bound = bound;
    }
    t.obstructed = t.best_bound && *t.best_bound < v.required;
    all_obstructed &= t.obstructed;
    v.trace.push_back(std::move(t));
  }

  v.status = all_obstructed ? Verdict::Status::NoCompactQuotients
                            : Verdict::Status::NotObstructedByThisMethod;
  if (!all_obstructed && v.note.empty()) {
    for (const auto& t : v.trace)
      if (!t.best_bound) {
        v.note = "a component carries no applicable bound; the method is silent here, "
                 "which is not an existence proof";
        break;
      }
  }
  return v;
}

}  // namespace cartanlab
