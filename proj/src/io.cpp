#include "cartanlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cartanlab::io {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

GroupSpec parse_group_spec(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw std::runtime_error("group spec: expected an object with a 'family' field");
  std::string fam = j.at("family").get<std::string>();
  if (fam == "SL") {
    std::string field = j.value("field", "R");
    if (field.size() != 1) throw std::runtime_error("group spec: field must be R, C or H");
    return GroupSpec::sl(j.at("n").get<int>(), field[0]);
  }
  if (fam == "SO") return GroupSpec::so(j.at("p").get<int>(), j.at("q").get<int>());
  if (fam == "product") {
    std::vector<GroupSpec> fs;
    for (const auto& f : j.at("factors")) fs.push_back(parse_group_spec(f));
    return GroupSpec::product(std::move(fs));
  }
  throw std::runtime_error("group spec: unknown family '" + fam +
                           "' (expected SL, SO or product)");
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return Rational::from_double(j.get<double>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::runtime_error("expected a number or a rational/decimal string");
}

RatVec parse_rational_vector(const json& j) {
  if (!j.is_array()) throw std::runtime_error("expected an array of rationals");
  RatVec v;
  for (const auto& x : j) v.push_back(parse_rational(x));
  return v;
}

namespace {

double entry_to_double(const json& e) {
  if (e.is_number()) return e.get<double>();
  if (e.is_string()) return Rational::parse(e.get<std::string>()).to_double();
  throw std::runtime_error("matrix entry: expected number or decimal/rational string");
}

}  // namespace

LeafMatrix parse_leaf_matrix(const GroupSpec& leaf, const json& j) {
  int d = leaf.matrix_dim();
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw std::runtime_error("matrix: expected " + std::to_string(d) + " rows for " +
                             leaf.name());
  if (leaf.complex_storage()) {
    CMat m(d, d);
    for (int i = 0; i < d; ++i) {
      const auto& row = j.at(i);
      if (static_cast<int>(row.size()) != d) throw std::runtime_error("matrix: ragged row");
      for (int k = 0; k < d; ++k) {
        const auto& e = row.at(k);
        if (e.is_array()) {
          if (e.size() != 2) throw std::runtime_error("complex entry: expected [re, im]");
          m(i, k) = std::complex<double>(entry_to_double(e.at(0)), entry_to_double(e.at(1)));
        } else {
          m(i, k) = std::complex<double>(entry_to_double(e), 0.0);
        }
      }
    }
    return LeafMatrix::of(std::move(m));
  }
  Mat m(d, d);
  for (int i = 0; i < d; ++i) {
    const auto& row = j.at(i);
    if (static_cast<int>(row.size()) != d) throw std::runtime_error("matrix: ragged row");
    for (int k = 0; k < d; ++k) {
      if (row.at(k).is_array())
        throw std::runtime_error("complex entry supplied for the real family " + leaf.name());
      m(i, k) = entry_to_double(row.at(k));
    }
  }
  return LeafMatrix::of(std::move(m));
}

GroupElement parse_element(const GroupSpec& spec, const json& j, double tolerance) {
  auto leaves = spec.leaves();
  std::vector<LeafMatrix> blocks;
  if (spec.is_product()) {
    const json& arr = j.is_object() && j.contains("factors") ? j.at("factors") : j;
    if (!arr.is_array() || arr.size() != leaves.size())
      throw std::runtime_error("product element: expected one matrix per factor");
    for (size_t i = 0; i < leaves.size(); ++i)
      blocks.push_back(parse_leaf_matrix(*leaves[i], arr.at(i)));
  } else {
    blocks.push_back(parse_leaf_matrix(spec, j));
  }
  return validate_element(spec, std::move(blocks), tolerance);
}

IsotropySpec parse_isotropy(const json& j, const RootSystem& sys) {
  if (!j.is_object()) throw std::runtime_error("isotropy: expected an object");
  if (j.contains("theta")) {
    std::vector<std::string> names;
    for (const auto& t : j.at("theta")) names.push_back(t.get<std::string>());
    for (const auto& nm : names) sys.simple_index(nm);  // validate early
    return IsotropySpec::wall_union(names);
  }
  if (j.contains("form")) {
    const auto& f = j.at("form");
    if (f.contains("coords")) return IsotropySpec::hyperplane(parse_rational_vector(f.at("coords")));
    if (f.contains("omega_coeffs")) {
      RatVec t = parse_rational_vector(f.at("omega_coeffs"));
      if (static_cast<int>(t.size()) != sys.rank)
        throw std::runtime_error("isotropy form: need one omega coefficient per simple root");
      auto omegas = fundamental_weights(sys);
      RatVec phi(sys.ambient_dim);
      for (int i = 0; i < sys.rank; ++i) phi = phi + (t[i] * omegas[i].coords);
      return IsotropySpec::hyperplane(phi);
    }
    throw std::runtime_error("isotropy form: expected 'coords' or 'omega_coeffs'");
  }
  if (j.contains("subspace")) {
    std::vector<RatVec> basis;
    for (const auto& row : j.at("subspace").at("basis"))
      basis.push_back(parse_rational_vector(row));
    return IsotropySpec::subspace(std::move(basis));
  }
  throw std::runtime_error("isotropy: expected 'theta', 'form' or 'subspace'");
}

RootSystem parse_root_system(const json& j) {
  if (j.is_array()) {
    RootSystem sys = parse_root_system(j.at(0));
    for (size_t i = 1; i < j.size(); ++i) sys = product(sys, parse_root_system(j.at(i)));
    return sys;
  }
  std::string fam = j.at("family").get<std::string>();
  Family f;
  if (fam == "A") f = Family::A;
  else if (fam == "B") f = Family::B;
  else if (fam == "C") f = Family::C;
  else if (fam == "D") f = Family::D;
  else if (fam == "BC") f = Family::BC;
  else throw std::runtime_error("unknown root-system family '" + fam + "'");
  MultiplicityProfile m;
  if (j.contains("mult")) {
    m.pair = j.at("mult").value("pair", 1);
    m.single = j.at("mult").value("single", 1);
    m.doubled = j.at("mult").value("double", 1);
  }
  return build_root_system(f, j.at("rank").get<int>(), m);
}

GroupData parse_group_data(const json& j) {
  GroupData g;
  if (j.is_string()) {
    g.family = j.get<std::string>();
    return g;
  }
  g.family = j.at("family").get<std::string>();
  if (g.family == "product") {
    for (const auto& f : j.at("factors")) g.factors.push_back(parse_group_data(f));
    return g;
  }
  if (j.contains("field")) g.field = j.at("field").get<std::string>().at(0);
  g.n = j.value("n", 0);
  g.p = j.value("p", 0);
  g.q = j.value("q", 0);
  g.ell = j.value("l", j.value("ell", 0));
  return g;
}

BoundRule parse_bound_rule(const json& j) {
  BoundRule r;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "midspace_fibration") {
    r.kind = BoundRule::Kind::MidspaceFibration;
    r.half_dim = j.at("half_dim").get<int>();
    r.field = j.at("field").get<std::string>().at(0);
  } else if (kind == "form_flag") {
    r.kind = BoundRule::Kind::FormFlag;
    r.dim_V = j.at("dim_V").get<int>();
    r.form_rank = j.at("rank").get<int>();
    r.field = j.at("field").get<std::string>().at(0);
  } else if (kind == "parabolic_pair") {
    r.kind = BoundRule::Kind::ParabolicPair;
    for (const auto& t : j.at("theta")) r.theta.push_back(t.get<std::string>());
    for (const auto& t : j.at("theta_prime")) r.theta_prime.push_back(t.get<std::string>());
  } else {
    throw std::runtime_error("unknown bound rule kind '" + kind + "'");
  }
  return r;
}

ObstructionCase parse_obstruction_case(const json& j) {
  ObstructionCase c;
  c.id = j.at("id").get<std::string>();
  c.description = j.value("description", "");
  c.g = parse_group_data(j.at("g"));
  c.h = parse_group_data(j.at("h"));
  if (j.contains("system")) c.system_override = parse_root_system(j.at("system"));
  RootSystem sys = c.system();
  c.isotropy = parse_isotropy(j.at("isotropy"), sys);
  if (j.contains("rules"))
    for (const auto& [root, rule] : j.at("rules").items())
      c.rules.emplace(root, parse_bound_rule(rule));
  return c;
}

std::vector<ObstructionCase> load_catalog(const std::string& path) {
  json j = load_json_file(path);
  std::vector<ObstructionCase> cases;
  for (const auto& cj : j.at("cases")) cases.push_back(parse_obstruction_case(cj));
  return cases;
}

RunConfig parse_run_config(const std::string& path) {
  json j = load_json_file(path);
  RunConfig cfg;
  cfg.echo = j;
  if (j.contains("group")) {
    cfg.group = parse_group_spec(j.at("group"));
    cfg.has_group = true;
  }
  cfg.element_tol = j.value("element_tolerance", 1e-8);
  if (j.contains("generators")) {
    if (!cfg.has_group) throw std::runtime_error("config: generators without a group");
    int idx = 0;
    for (const auto& gj : j.at("generators")) {
      try {
        cfg.generators.push_back(parse_element(cfg.group, gj, cfg.element_tol));
      } catch (const std::exception& e) {
        throw std::runtime_error("generator " + std::to_string(idx) + ": " + e.what());
      }
      ++idx;
    }
  }
  cfg.symmetric = j.value("symmetric", false);
  if (j.contains("isotropy") && cfg.has_group) {
    // without a group the subcommand supplies the root system ("system" key)
    RootSystem sys = cfg.group.root_system();
    cfg.isotropy = parse_isotropy(j.at("isotropy"), sys);
  }
  cfg.ball_radius = j.value("ball_radius", 8);
  if (cfg.ball_radius < 0) throw std::runtime_error("config: ball_radius must be >= 0");
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    cfg.ball.dedup_tol = t.value("dedup", 1e-8);
    cfg.scan.zero_tol = t.value("zero_distance", 1e-9);
    cfg.scan.certify_floor = t.value("certify_floor", 1e-3);
    cfg.scan.stability_tol = t.value("stability", 0.25);
    cfg.scan.intercept_cap = t.value("intercept_cap", 0.0);
    for (double v : {cfg.ball.dedup_tol, cfg.scan.zero_tol, cfg.scan.certify_floor})
      if (v <= 0) throw std::runtime_error("config: tolerances must be positive");
  }
  if (j.contains("floors")) {
    cfg.scan.violation_norm_floor = j.at("floors").value("violation_norm", 0.5);
    cfg.scan.violation_length_floor = j.at("floors").value("violation_length", 2);
  }
  cfg.ball.max_elements = j.value("max_elements", size_t{200000});
  if (j.contains("theta"))
    for (const auto& t : j.at("theta")) cfg.theta.push_back(t.get<std::string>());
  cfg.limit_cone_cutoff = j.value("limit_cone_cutoff", 0.0);
  cfg.seed = j.value("seed", 1l);
  if (j.contains("output")) {
    cfg.out_dir = j.at("output").value("dir", ".");
    cfg.format = j.at("output").value("format", "both");
  }
  if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "both")
    throw std::runtime_error("config: format must be csv, json or both");
  return cfg;
}

json rational_json(const Rational& r) {
  return json::array({r.num().to_string(), r.den().to_string()});
}

json vector_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(fmt(x));
  return a;
}

json rational_vector_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

json root_system_json(const RootSystem& sys) {
  json j;
  j["name"] = sys.name();
  j["rank"] = sys.rank;
  j["ambient_dim"] = sys.ambient_dim;
  json simples = json::array();
  for (int i = 0; i < sys.rank; ++i) {
    json s;
    s["name"] = sys.simple_names[i];
    s["coords"] = rational_vector_json(sys.simple_roots[i]);
    simples.push_back(s);
  }
  j["simple_roots"] = simples;
  json pos = json::array();
  for (const auto& r : sys.positive_roots) {
    json s;
    s["coords"] = rational_vector_json(r.coords);
    s["mult"] = r.mult;
    pos.push_back(s);
  }
  j["positive_roots"] = pos;
  return j;
}

json envelope_json(const EnvelopeFit& f) {
  json j;
  j["defined"] = f.defined;
  if (f.defined) {
    j["slope"] = fmt(f.slope);
    j["intercept"] = fmt(f.intercept);
  }
  return j;
}

json scan_config_json(const ScanConfig& c) {
  json j;
  j["zero_tol"] = fmt(c.zero_tol);
  j["violation_norm_floor"] = fmt(c.violation_norm_floor);
  j["violation_length_floor"] = c.violation_length_floor;
  j["certify_floor"] = fmt(c.certify_floor);
  j["stability_tol"] = fmt(c.stability_tol);
  j["intercept_cap"] = fmt(c.intercept_cap);
  return j;
}

json verdict_json(const Verdict& v, const ObstructionCase& c, const RootSystem& sys) {
  json j;
  j["id"] = c.id;
  if (!c.description.empty()) j["description"] = c.description;
  j["g"] = c.g.name();
  j["h"] = c.h.name();
  j["root_system"] = sys.name();
  j["required_vcd"] = v.required;
  j["component_count"] = v.component_count;
  j["status"] = status_name(v.status);
  if (!v.note.empty()) j["note"] = v.note;
  json trace = json::array();
  for (const auto& t : v.trace) {
    json tj;
    tj["components"] = t.orbit;
    json av = json::array();
    for (int a : t.avoided) av.push_back(sys.simple_names[a]);
    tj["avoided_roots"] = av;
    tj["rules_applied"] = t.applied;
    if (t.best_bound) tj["vcd_bound"] = *t.best_bound;
    tj["obstructed"] = t.obstructed;
    trace.push_back(tj);
  }
  j["trace"] = trace;
  return j;
}

namespace {

std::string word_string(const WordBall&, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ".";
    s += "g" + std::to_string(word[i]);
  }
  return s;
}

}  // namespace

std::string ball_csv(const WordBall& ball, const WallArrangement* arr,
                     const std::vector<int>& theta) {
  RootSystem sys = ball.spec.root_system();
  std::ostringstream out;
  out << "word,length";
  for (int i = 0; i < sys.ambient_dim; ++i) out << ",mu_" << i + 1;
  out << ",mu_norm";
  if (arr) out << ",wall_distance";
  for (int ai : theta) out << ",gap_" << sys.simple_names[ai];
  out << "\n";
  for (const auto& e : ball.entries) {
    out << word_string(ball, e.word) << "," << e.length;
    for (double x : e.mu.coords) out << "," << fmt(x);
    out << "," << fmt(e.mu.norm());
    if (arr) out << "," << fmt(dist_to_muH(*arr, e.mu.coords));
    for (int ai : theta) {
      double gap = 0;
      for (int k = 0; k < sys.ambient_dim; ++k)
        gap += sys.simple_roots[ai][k].to_double() * e.mu.coords[k];
      out << "," << fmt(gap);
    }
    out << "\n";
  }
  return out.str();
}

json sharpness_json(const SharpnessReport& rep, const WordBall& ball) {
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  j["samples"] = rep.samples.size();
  j["radius"] = ball.radius;
  j["kappa"] = fmt(ball.kappa);
  j["norm_fit"] = envelope_json(rep.norm_fit);
  j["length_fit"] = envelope_json(rep.length_fit);
  json w = json::array();
  for (int i : rep.violation_witnesses) {
    json wj;
    wj["word"] = word_string(ball, ball.entries[i].word);
    wj["length"] = ball.entries[i].length;
    w.push_back(wj);
  }
  j["violation_witnesses"] = w;
  json growth = json::array();
  for (const auto& [thr, count] : rep.growth_counts) {
    json gj;
    gj["distance"] = fmt(thr);
    gj["elements_within"] = count;
    growth.push_back(gj);
  }
  j["growth_counts"] = growth;
  j["config"] = scan_config_json(rep.config);
  return j;
}

json anosov_json(const AnosovReport& rep, const RootSystem& sys, const WordBall& ball) {
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  j["radius"] = ball.radius;
  json roots = json::array();
  for (const auto& rr : rep.roots) {
    json rj;
    rj["root"] = sys.simple_names[rr.root_index];
    rj["verdict"] = verdict_name(rr.verdict);
    rj["fit"] = envelope_json(rr.fit);
    rj["violations"] = rr.violation_witnesses.size();
    roots.push_back(rj);
  }
  j["roots"] = roots;
  j["config"] = scan_config_json(rep.config);
  return j;
}

}  // namespace cartanlab::io
