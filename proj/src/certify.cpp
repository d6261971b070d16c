#include "cartanlab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cartanlab {

namespace {

double block_linf(const LeafMatrix& a, const LeafMatrix& b) {
  double m = 0;
  if (a.complex_flag) {
    for (int i = 0; i < a.cplx.rows(); ++i)
      for (int j = 0; j < a.cplx.cols(); ++j) {
        m = std::max(m, std::fabs(a.cplx(i, j).real() - b.cplx(i, j).real()));
        m = std::max(m, std::fabs(a.cplx(i, j).imag() - b.cplx(i, j).imag()));
      }
  } else {
    for (int i = 0; i < a.real.rows(); ++i)
      for (int j = 0; j < a.real.cols(); ++j)
        m = std::max(m, std::fabs(a.real(i, j) - b.real(i, j)));
  }
  return m;
}

double element_linf(const GroupElement& a, const GroupElement& b) {
  double m = 0;
  for (size_t k = 0; k < a.blocks.size(); ++k)
    m = std::max(m, block_linf(a.blocks[k], b.blocks[k]));
  return m;
}

double element_trace_key(const GroupElement& g) {
  double t = 0;
  for (const auto& b : g.blocks) {
    if (b.complex_flag) {
      auto tr = b.cplx.trace();
      t += tr.real() + 0.7548776662 * tr.imag();  // fixed mixing; only a bucket key
    } else {
      t += b.real.trace();
    }
  }
  return t;
}

int total_dim(const GroupSpec& spec) {
  int d = 0;
  for (const auto* leaf : spec.leaves()) d += leaf->matrix_dim();
  return d;
}

std::vector<double> flat_coords(const GroupElement& g) {
  std::vector<double> v;
  for (const auto& b : g.blocks) {
    if (b.complex_flag) {
      for (int i = 0; i < b.cplx.rows(); ++i)
        for (int j = 0; j < b.cplx.cols(); ++j) {
          v.push_back(b.cplx(i, j).real());
          v.push_back(b.cplx(i, j).imag());
        }
    } else {
      for (int i = 0; i < b.real.rows(); ++i)
        for (int j = 0; j < b.real.cols(); ++j) v.push_back(b.real(i, j));
    }
  }
  return v;
}

}  // namespace

GeneratorSet product_generators(const GroupSpec& product_spec, const GeneratorSet& s1,
                                const GeneratorSet& s2) {
  if (product_spec.factors.size() != 2)
    throw std::invalid_argument("product_generators: binary products only");
  const GroupSpec& f1 = product_spec.factors[0];
  const GroupSpec& f2 = product_spec.factors[1];
  GeneratorSet out;
  out.symmetric = s1.symmetric && s2.symmetric;
  auto id1 = group_identity(f1), id2 = group_identity(f2);
  for (const auto& g : s1.generators) {
    GroupElement e;
    e.tolerance = g.tolerance;
    e.blocks = g.blocks;
    e.blocks.insert(e.blocks.end(), id2.blocks.begin(), id2.blocks.end());
    out.generators.push_back(std::move(e));
  }
  for (const auto& h : s2.generators) {
    GroupElement e;
    e.tolerance = h.tolerance;
    e.blocks = id1.blocks;
    e.blocks.insert(e.blocks.end(), h.blocks.begin(), h.blocks.end());
    out.generators.push_back(std::move(e));
  }
  return out;
}

WordBall enumerate_ball(const GroupSpec& spec, const GeneratorSet& gens, int radius,
                        const BallConfig& config) {
  if (radius < 0) throw std::invalid_argument("enumerate_ball: radius must be >= 0");
  WordBall ball;
  ball.spec = spec;
  ball.radius = radius;

  std::vector<GroupElement> S = gens.generators;
  if (!gens.symmetric) {
    size_t orig = S.size();
    for (size_t i = 0; i < orig; ++i) {
      GroupElement inv = group_inverse(spec, S[i]);
      bool present = false;
      for (const auto& s : S)
        if (element_linf(s, inv) <= config.dedup_tol) { present = true; break; }
      if (!present) S.push_back(std::move(inv));
    }
  }
  ball.gens = S;
  for (const auto& s : S) ball.kappa = std::max(ball.kappa, mu(spec, s).norm());

  const double key_width = total_dim(spec) * config.dedup_tol + 1e-300;
  std::vector<BallEntry> entries;
  std::multimap<double, size_t> index;

  auto find_matches = [&](const GroupElement& g) {
    std::vector<size_t> hits;
    double key = element_trace_key(g);
    auto lo = index.lower_bound(key - key_width);
    auto hi = index.upper_bound(key + key_width);
    for (auto it = lo; it != hi; ++it)
      if (element_linf(entries[it->second].g, g) <= config.dedup_tol)
        hits.push_back(it->second);
    return hits;
  };
  auto insert_entry = [&](BallEntry e) {
    double key = element_trace_key(e.g);
    index.emplace(key, entries.size());
    entries.push_back(std::move(e));
    if (entries.size() > config.max_elements)
      throw std::runtime_error("enumerate_ball: element cap exceeded");
  };

  BallEntry root;
  root.g = group_identity(spec);
  root.length = 0;
  root.mu = mu(spec, root.g);
  insert_entry(std::move(root));

  size_t level_begin = 0;
  for (int len = 1; len <= radius; ++len) {
    size_t level_end = entries.size();
    for (size_t ei = level_begin; ei < level_end; ++ei) {
      for (size_t si = 0; si < S.size(); ++si) {
        GroupElement prod = group_product(spec, entries[ei].g, S[si]);
        auto hits = find_matches(prod);
        if (hits.size() >= 2)
          throw std::runtime_error(
              "enumerate_ball: dedup ambiguity (two stored elements within tolerance of a "
              "product); tighten the dedup tolerance");
        if (!hits.empty()) continue;  // already seen at shorter-or-equal length
        BallEntry e;
        e.word = entries[ei].word;
        e.word.push_back(static_cast<int>(si));
        e.length = len;
        e.mu = mu(spec, prod);
        e.g = std::move(prod);
        insert_entry(std::move(e));
      }
    }
    level_begin = level_end;
  }

  std::sort(entries.begin(), entries.end(), [](const BallEntry& a, const BallEntry& b) {
    if (a.length != b.length) return a.length < b.length;
    return flat_coords(a.g) < flat_coords(b.g);
  });
  ball.entries = std::move(entries);
  return ball;
}

std::string verdict_name(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::CertifiedOnBall: return "CERTIFIED_ON_BALL";
    case ScanVerdict::Violation: return "VIOLATION";
    case ScanVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

EnvelopeFit fit_envelope(const std::vector<std::pair<double, double>>& samples,
                         double intercept_cap) {
  EnvelopeFit fit;
  double slope = 0;
  bool any = false;
  for (const auto& [x, d] : samples) {
    if (x <= 1e-12) continue;
    double s = (d + intercept_cap) / x;
    if (!any || s < slope) slope = s;
    any = true;
  }
  if (!any) return fit;
  fit.defined = true;
  fit.slope = slope;
  double c = 0;  // tightest valid intercept for the chosen slope
  for (const auto& [x, d] : samples) c = std::max(c, slope * x - d);
  fit.intercept = std::min(c, intercept_cap);
  return fit;
}

namespace {

struct GapSample {
  int len;
  double x;  // envelope abscissa (|mu| or |gamma|)
  double d;  // distance or gap
};

EnvelopeFit fit_prefix(const std::vector<GapSample>& samples, int max_len, double cap) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : samples)
    if (s.len <= max_len) pts.push_back({s.x, s.d});
  return fit_envelope(pts, cap);
}

// fitted slope above the floor and stable over the outer half of the radii
bool certified(const std::vector<GapSample>& samples, int radius, const ScanConfig& cfg,
               const EnvelopeFit& full_fit) {
  if (!full_fit.defined || full_fit.slope < cfg.certify_floor) return false;
  if (radius < 2) return false;
  double lo = full_fit.slope, hi = full_fit.slope;
  for (int r = (radius + 1) / 2; r <= radius; ++r) {
    EnvelopeFit f = fit_prefix(samples, r, cfg.intercept_cap);
    if (!f.defined || f.slope < cfg.certify_floor) return false;
    lo = std::min(lo, f.slope);
    hi = std::max(hi, f.slope);
  }
  return (hi - lo) <= cfg.stability_tol * hi;
}

}  // namespace

SharpnessReport sharpness_scan(const WordBall& ball, const WallArrangement& arr,
                               const ScanConfig& config) {
  if (ball.entries.empty()) throw std::invalid_argument("sharpness_scan: empty ball");
  if (arr.system.ambient_dim != static_cast<int>(ball.entries[0].mu.coords.size()))
    throw std::invalid_argument("sharpness_scan: arrangement root system mismatch");
  SharpnessReport rep;
  rep.config = config;
  std::vector<GapSample> by_norm, by_len;
  for (size_t i = 0; i < ball.entries.size(); ++i) {
    const auto& e = ball.entries[i];
    double d = dist_to_muH(arr, e.mu.coords);
    double n = e.mu.norm();
    rep.samples.push_back({e.length, n, d});
    by_norm.push_back({e.length, n, d});
    by_len.push_back({e.length, static_cast<double>(e.length), d});
    if (n >= config.violation_norm_floor && d <= config.zero_tol)
      rep.violation_witnesses.push_back(static_cast<int>(i));
  }
  {
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : by_norm) pts.push_back({s.x, s.d});
    rep.norm_fit = fit_envelope(pts, config.intercept_cap);
  }
  {
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : by_len) pts.push_back({s.x, s.d});
    rep.length_fit = fit_envelope(pts, config.intercept_cap);
  }
  if (!rep.violation_witnesses.empty()) {
    rep.verdict = ScanVerdict::Violation;
  } else if (certified(by_norm, ball.radius, config, rep.norm_fit) &&
             certified(by_len, ball.radius, config, rep.length_fit)) {
    rep.verdict = ScanVerdict::CertifiedOnBall;
  } else {
    rep.verdict = ScanVerdict::Inconclusive;
  }
  double dmax = 0;
  for (const auto& s : rep.samples) dmax = std::max(dmax, s.dist);
  for (int k = 1; k <= 8; ++k) {
    double thr = dmax * k / 8;
    int count = 0;
    for (const auto& s : rep.samples)
      if (s.dist <= thr) ++count;
    rep.growth_counts.push_back({thr, count});
  }
  return rep;
}

AnosovReport anosov_scan(const WordBall& ball, const std::vector<int>& theta,
                         const ScanConfig& config) {
  if (ball.entries.empty()) throw std::invalid_argument("anosov_scan: empty ball");
  RootSystem sys = ball.spec.root_system();
  AnosovReport rep;
  rep.config = config;
  bool any_violation = false, all_certified = !theta.empty();
  for (int ai : theta) {
    const RatVec& alpha = sys.simple_roots.at(ai);
    std::vector<double> ad = to_doubles(alpha);
    AnosovRootReport rr;
    rr.root_index = ai;
    rr.verdict = ScanVerdict::Inconclusive;
    std::vector<GapSample> samples;
    for (size_t i = 0; i < ball.entries.size(); ++i) {
      const auto& e = ball.entries[i];
      double gap = 0;
      for (size_t k = 0; k < ad.size(); ++k) gap += ad[k] * e.mu.coords[k];
      samples.push_back({e.length, static_cast<double>(e.length), gap});
      if (e.length >= config.violation_length_floor && gap <= config.zero_tol)
        rr.violation_witnesses.push_back(static_cast<int>(i));
    }
    rr.fit = fit_prefix(samples, ball.radius, config.intercept_cap);
    if (!rr.violation_witnesses.empty()) rr.verdict = ScanVerdict::Violation;
    else if (certified(samples, ball.radius, config, rr.fit))
      rr.verdict = ScanVerdict::CertifiedOnBall;
    any_violation |= rr.verdict == ScanVerdict::Violation;
    all_certified &= rr.verdict == ScanVerdict::CertifiedOnBall;
    rep.roots.push_back(std::move(rr));
  }
  rep.verdict = any_violation ? ScanVerdict::Violation
              : all_certified ? ScanVerdict::CertifiedOnBall
                              : ScanVerdict::Inconclusive;
  return rep;
}

LimitConeEstimate limit_cone(const WordBall& ball, double cutoff, const WallArrangement* arr,
                             ProjectionKind kind, double dedup_tol) {
  if (cutoff <= 0) throw std::invalid_argument("limit_cone: cutoff must be positive");
  LimitConeEstimate est;
  est.cutoff = cutoff;
  std::vector<std::vector<double>> dirs;
  for (const auto& e : ball.entries) {
    CartanVector v = kind == ProjectionKind::Cartan ? e.mu : jordan(ball.spec, e.g);
    double n = v.norm();
    if (n < cutoff) continue;
    std::vector<double> dir = v.coords;
    for (auto& x : dir) x /= n;
    dirs.push_back(std::move(dir));
  }
  if (dirs.empty()) throw std::runtime_error("limit_cone: no elements above the cutoff");
  std::sort(dirs.begin(), dirs.end());
  for (const auto& d : dirs) {
    bool dup = false;
    for (const auto& kept : est.directions) {
      double m = 0;
      for (size_t i = 0; i < d.size(); ++i) m = std::max(m, std::fabs(d[i] - kept[i]));
      if (m <= dedup_tol) { dup = true; break; }
    }
    if (!dup) est.directions.push_back(d);
  }
  if (arr) {
    double margin = 0;
    bool first = true;
    for (const auto& d : est.directions) {
      double dist = dist_to_muH(*arr, d);
      if (first || dist < margin) margin = dist;
      first = false;
    }
    est.separation_margin = margin;
  }
  return est;
}

ComponentReport component_consistency(const WordBall& ball, const WallArrangement& arr,
                                      const std::vector<Component>& comps,
                                      const IotaAction& act, double norm_floor,
                                      double wall_tol) {
  ComponentReport rep;
  rep.counts.assign(comps.size(), 0);
  std::vector<std::vector<double>> wall_forms;
  for (const auto& w : arr.walls) {
    if (!w.form) throw std::invalid_argument("component_consistency: hyperplane walls required");
    wall_forms.push_back(to_doubles(*w.form));
  }
  std::vector<int> hit_component(ball.entries.size(), -1);
  for (size_t i = 0; i < ball.entries.size(); ++i) {
    const auto& e = ball.entries[i];
    if (e.mu.norm() < norm_floor) { ++rep.below_floor; continue; }
    std::vector<int> sig(wall_forms.size(), 0);
    bool on_wall = false;
    double scale = std::max(1.0, e.mu.norm());
    for (size_t wi = 0; wi < wall_forms.size(); ++wi) {
      double v = 0;
      for (size_t k = 0; k < wall_forms[wi].size(); ++k) v += wall_forms[wi][k] * e.mu.coords[k];
      if (std::fabs(v) <= wall_tol * scale) { on_wall = true; break; }
      sig[wi] = v > 0 ? 1 : -1;
    }
    if (on_wall) { ++rep.on_wall; continue; }
    for (size_t ci = 0; ci < comps.size(); ++ci)
      if (comps[ci].signs == sig) {
        hit_component[i] = static_cast<int>(ci);
        ++rep.counts[ci];
        break;
      }
  }
  int best = -1, best_hits = -1;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    int partner = act.image[ci];
    int hits = rep.counts[ci] + (partner != static_cast<int>(ci) ? rep.counts[partner] : 0);
    if (hits > best_hits) { best_hits = hits; best = static_cast<int>(ci); }
  }
  if (best >= 0) {
    rep.orbit_a = std::min(best, act.image[best]);
    rep.orbit_b = std::max(best, act.image[best]);
  }
  for (size_t i = 0; i < ball.entries.size(); ++i) {
    int c = hit_component[i];
    if (c < 0) continue;
    if (c != rep.orbit_a && c != rep.orbit_b) rep.exceptions.push_back(static_cast<int>(i));
  }
  rep.pass = rep.exceptions.empty();
  return rep;
}

TauGapData make_tau_gap_data(const WallArrangement& arr, const Component& comp) {
  const RootSystem& sys = arr.system;
  TauGapData data;
  if (comp.facet_forms.empty())
    throw std::invalid_argument("make_tau_gap_data: component has no facet forms");
  auto omegas = fundamental_weights(sys);
  for (const auto& phi : comp.facet_forms) {
    std::vector<int> dplus;
    for (int ai = 0; ai < sys.rank; ++ai)
      if (dot(phi, sys.simple_roots[ai]).sign() > 0) dplus.push_back(ai);
    if (dplus.empty())
      throw std::domain_error(
          "make_tau_gap_data: facet form pairs nonpositively with every simple root");
    RatVec chi_p(sys.ambient_dim);
    for (int ai : dplus) {
      // positive part of phi in the fundamental-weight basis: coefficient
      // <phi, alpha_vee>, so that chi+ and chi- = chi+ - phi are both dominant
      Rational c = Rational(2) * dot(phi, sys.simple_roots[ai]) /
                   dot(sys.simple_roots[ai], sys.simple_roots[ai]);
      chi_p = chi_p + (c * omegas[ai].coords);
    }
    data.facet_forms.push_back(phi);
    data.delta_plus.push_back(dplus);
    data.chi_plus.push_back(chi_p);
    data.chi_minus.push_back(chi_p - sys.project_to_a(phi));
  }
  data.component_signs = comp.signs;
  data.interior_point = comp.interior_point;
  return data;
}

Rational tau_gap(const RootSystem& sys, const TauGapData& data, const RatVec& u,
                 bool* in_component) {
  if (in_component) {
    bool in = chamber_membership(sys, u).position != ChamberPosition::Outside;
    for (const auto& f : data.facet_forms)
      if (dot(f, u).sign() <= 0) in = false;
    *in_component = in;
  }
  std::optional<Rational> best;
  for (size_t i = 0; i < data.facet_forms.size(); ++i) {
    Rational m = dot(data.facet_forms[i], u);
    for (int ai : data.delta_plus[i]) {
      Rational av = dot(sys.simple_roots[ai], u);
      if (av < m) m = av;
    }
    if (!best || m < *best) best = m;
  }
  return *best;
}

double tau_gap(const RootSystem& sys, const TauGapData& data, const std::vector<double>& u,
               bool* in_component, double tol) {
  if (in_component) {
    bool in = true;
    for (const auto& a : sys.simple_roots) {
      double v = 0;
      for (int k = 0; k < sys.ambient_dim; ++k) v += a[k].to_double() * u[k];
      if (v < -tol) in = false;
    }
    for (const auto& f : data.facet_forms) {
      double v = 0;
      for (int k = 0; k < sys.ambient_dim; ++k) v += f[k].to_double() * u[k];
      if (v <= tol) in = false;
    }
    *in_component = in;
  }
  double best = 0;
  bool first = true;
  for (size_t i = 0; i < data.facet_forms.size(); ++i) {
    double m = 0;
    for (int k = 0; k < sys.ambient_dim; ++k)
      m += data.facet_forms[i][k].to_double() * u[k];
    for (int ai : data.delta_plus[i]) {
      double av = 0;
      for (int k = 0; k < sys.ambient_dim; ++k)
        av += sys.simple_roots[ai][k].to_double() * u[k];
      m = std::min(m, av);
    }
    if (first || m < best) best = m;
    first = false;
  }
  return best;
}

CrosscheckReport sharpness_anosov_crosscheck(const WordBall& ball, const WallArrangement& arr,
                                             const TauGapData& data,
                                             const ScanConfig& config) {
  const RootSystem& sys = arr.system;
  CrosscheckReport rep;
  rep.sharpness_verdict = sharpness_scan(ball, arr, config).verdict;

  std::vector<std::vector<double>> iota(sys.ambient_dim,
                                        std::vector<double>(sys.ambient_dim, 0.0));
  for (int i = 0; i < sys.ambient_dim; ++i)
    for (int j = 0; j < sys.ambient_dim; ++j) iota[i][j] = arr.iota(i, j).to_double();

  // closed-component membership: samples on the walls (where the gap and the
  // distance both vanish) still count, so degenerate data agrees on VIOLATION
  auto in_closure = [&](const std::vector<double>& u, double tol) {
    for (const auto& a : sys.simple_roots) {
      double v = 0;
      for (int k = 0; k < sys.ambient_dim; ++k) v += a[k].to_double() * u[k];
      if (v < -tol) return false;
    }
    for (const auto& f : data.facet_forms) {
      double v = 0;
      for (int k = 0; k < sys.ambient_dim; ++k) v += f[k].to_double() * u[k];
      if (v < -tol) return false;
    }
    return true;
  };

  std::vector<GapSample> tau_samples;
  bool any_violation = false;
  bool ratio_first = true;
  for (const auto& e : ball.entries) {
    std::vector<double> u = e.mu.coords;
    double scale_tol = config.zero_tol * std::max(1.0, e.mu.norm());
    bool in = in_closure(u, scale_tol);
    double g = tau_gap(sys, data, u);
    if (!in && e.mu.norm() > config.zero_tol) {
      // opposition image: the wall distance and the gap identity are
      // symmetric under iota, so samples in iota(C) evaluate there
      std::vector<double> v(u.size(), 0.0);
      for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < u.size(); ++j) v[i] += iota[i][j] * u[j];
      if (in_closure(v, scale_tol)) {
        g = tau_gap(sys, data, v);
        in = true;
      }
    }
    if (!in && e.mu.norm() > config.zero_tol) {
      ++rep.outside;
      continue;
    }
    ++rep.considered;
    double d = dist_to_muH(arr, e.mu.coords);
    bool gp = g > config.zero_tol, dp = d > config.zero_tol;
    if (gp == dp) ++rep.sign_agreements;
    else ++rep.sign_disagreements;
    if (gp && dp) {
      double r = g / d;
      if (ratio_first) { rep.ratio_min = rep.ratio_max = r; ratio_first = false; }
      rep.ratio_min = std::min(rep.ratio_min, r);
      rep.ratio_max = std::max(rep.ratio_max, r);
    }
    tau_samples.push_back({e.length, static_cast<double>(e.length), g});
    if (e.length >= config.violation_length_floor && g <= config.zero_tol) any_violation = true;
  }
  rep.tau_fit = fit_prefix(tau_samples, ball.radius, config.intercept_cap);
  if (any_violation) rep.tau_verdict = ScanVerdict::Violation;
  else if (certified(tau_samples, ball.radius, config, rep.tau_fit))
    rep.tau_verdict = ScanVerdict::CertifiedOnBall;
  rep.verdicts_agree = rep.tau_verdict == rep.sharpness_verdict;
  return rep;
}

}  // namespace cartanlab
