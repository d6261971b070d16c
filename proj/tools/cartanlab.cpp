// cartanlab: Cartan projections, wall arrangements, sharpness and gap
// certification over word balls, and compact-quotient obstruction verdicts.
//
// Subcommands operate on a JSON analysis spec (see README) and write
// deterministic CSV/JSON reports: fixed orderings, 12-significant-digit
// floats, the effective configuration echoed into every report. Exit status
// is 0 whenever the analysis completed, regardless of the verdict.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "cartanlab/io.hpp"
#include "cartanlab/powmu.hpp"

namespace fs = std::filesystem;
using namespace cartanlab;
using cartanlab::io::json;

namespace {

struct CommonFlags {
  std::string spec_path;
  std::string out_dir;
  std::string format;
  int radius = -1;
  double tolerance = -1;
  long seed = -1;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool spec_required = true) {
  auto* opt = cmd->add_option("--spec", f.spec_path, "analysis spec (JSON)");
  if (spec_required) opt->required();
  cmd->add_option("--radius", f.radius, "override the word-ball radius");
  cmd->add_option("--out", f.out_dir, "output directory (default: from spec, else '.')");
  cmd->add_option("--format", f.format, "csv | json | both");
  cmd->add_option("--tolerance", f.tolerance, "override the element validation tolerance");
  cmd->add_option("--seed", f.seed, "seed for sampling diagnostics");
}

io::RunConfig load_config(const CommonFlags& f) {
  io::RunConfig cfg = io::parse_run_config(f.spec_path);
  if (f.radius >= 0) cfg.ball_radius = f.radius;
  if (!f.out_dir.empty()) cfg.out_dir = f.out_dir;
  if (!f.format.empty()) cfg.format = f.format;
  if (f.tolerance > 0) cfg.element_tol = f.tolerance;
  if (f.seed >= 0) cfg.seed = f.seed;
  json effective = cfg.echo;
  // the output directory is deliberately not echoed: reports from identical
  // analyses must be byte-identical wherever they are written
  effective["effective_overrides"] = {{"ball_radius", cfg.ball_radius},
                                      {"format", cfg.format},
                                      {"element_tolerance", io::fmt(cfg.element_tol)},
                                      {"seed", cfg.seed}};
  cfg.echo = effective;
  return cfg;
}

void emit(const io::RunConfig& cfg, const std::string& stem, const json* j,
          const std::string* csv) {
  fs::create_directories(cfg.out_dir);
  if (j && (cfg.format == "json" || cfg.format == "both")) {
    json out = *j;
    out["config"] = cfg.echo;
    io::write_text_file((fs::path(cfg.out_dir) / (stem + ".json")).string(), out.dump(2) + "\n");
  }
  if (csv && (cfg.format == "csv" || cfg.format == "both"))
    io::write_text_file((fs::path(cfg.out_dir) / (stem + ".csv")).string(), *csv);
}

WordBall build_ball(const io::RunConfig& cfg) {
  if (!cfg.has_group || cfg.generators.empty())
    throw std::runtime_error("this subcommand needs a group and generators in the spec");
  GeneratorSet gens{cfg.generators, cfg.symmetric};
  return enumerate_ball(cfg.group, gens, cfg.ball_radius, cfg.ball);
}

WallArrangement build_walls(const io::RunConfig& cfg) {
  if (!cfg.isotropy) throw std::runtime_error("this subcommand needs an isotropy spec");
  RootSystem sys = cfg.group.root_system();
  return build_arrangement(sys, *cfg.isotropy);
}

std::vector<int> theta_indices(const io::RunConfig& cfg, const RootSystem& sys) {
  std::vector<int> t;
  for (const auto& nm : cfg.theta) t.push_back(sys.simple_index(nm));
  return t;
}

RootSystem parse_system_field(const json& j) {
  if (j.contains("group")) return io::parse_group_spec(j.at("group")).root_system();
  return io::parse_root_system(j.at("system"));
}

int run_mu(const CommonFlags& flags, bool jordan_mode) {
  io::RunConfig cfg = load_config(flags);
  if (!cfg.has_group || cfg.generators.empty())
    throw std::runtime_error("mu/jordan need a group and matrices in 'generators'");
  json rows = json::array();
  std::ostringstream csv;
  csv << "index";
  int dim = cfg.group.root_system().ambient_dim;
  for (int i = 0; i < dim; ++i) csv << "," << (jordan_mode ? "lambda_" : "mu_") << i + 1;
  csv << ",norm\n";
  for (size_t i = 0; i < cfg.generators.size(); ++i) {
    CartanVector v = jordan_mode ? jordan(cfg.group, cfg.generators[i])
                                 : mu(cfg.group, cfg.generators[i]);
    json r;
    r["index"] = i;
    r["coords"] = io::vector_json(v.coords);
    r["norm"] = io::fmt(v.norm());
    if (jordan_mode) {
      try {
        double resid = 0;
        jordan_power_estimate(cfg.group, cfg.generators[i], 8, &resid);
        r["power_estimate_residual"] = io::fmt(resid);
      } catch (const std::exception&) {
        r["power_estimate_residual"] = nullptr;  // exact engine unavailable here
      }
    }
    rows.push_back(r);
    csv << i;
    for (double x : v.coords) csv << "," << io::fmt(x);
    csv << "," << io::fmt(v.norm()) << "\n";
  }
  json out;
  out["operation"] = jordan_mode ? "jordan" : "mu";
  out["group"] = cfg.group.name();
  out["values"] = rows;
  std::string csvs = csv.str();
  emit(cfg, jordan_mode ? "jordan" : "mu", &out, &csvs);
  return 0;
}

int run_ball(const CommonFlags& flags) {
  io::RunConfig cfg = load_config(flags);
  WordBall ball = build_ball(cfg);
  std::optional<WallArrangement> arr;
  if (cfg.isotropy) arr = build_walls(cfg);
  RootSystem sys = cfg.group.root_system();
  std::vector<int> theta = theta_indices(cfg, sys);
  std::string csv = io::ball_csv(ball, arr ? &*arr : nullptr, theta);
  json out;
  out["operation"] = "ball";
  out["group"] = cfg.group.name();
  out["radius"] = ball.radius;
  out["elements"] = ball.entries.size();
  out["kappa"] = io::fmt(ball.kappa);
  emit(cfg, "ball", &out, &csv);
  return 0;
}

int run_sharpness(const CommonFlags& flags) {
  io::RunConfig cfg = load_config(flags);
  WordBall ball = build_ball(cfg);
  WallArrangement arr = build_walls(cfg);
  SharpnessReport rep = sharpness_scan(ball, arr, cfg.scan);
  json out = io::sharpness_json(rep, ball);
  out["operation"] = "sharpness";
  out["group"] = cfg.group.name();
  std::string csv = io::ball_csv(ball, &arr, {});
  emit(cfg, "sharpness", &out, &csv);
  return 0;
}

int run_anosov(const CommonFlags& flags) {
  io::RunConfig cfg = load_config(flags);
  WordBall ball = build_ball(cfg);
  RootSystem sys = cfg.group.root_system();
  std::vector<int> theta = theta_indices(cfg, sys);
  if (theta.empty())
    for (int i = 0; i < sys.rank; ++i) theta.push_back(i);  // default: all simple roots
  AnosovReport rep = anosov_scan(ball, theta, cfg.scan);
  json out = io::anosov_json(rep, sys, ball);
  out["operation"] = "anosov";
  out["group"] = cfg.group.name();
  std::string csv = io::ball_csv(ball, nullptr, theta);
  emit(cfg, "anosov", &out, &csv);
  return 0;
}

int run_limit_cone(const CommonFlags& flags) {
  io::RunConfig cfg = load_config(flags);
  WordBall ball = build_ball(cfg);
  std::optional<WallArrangement> arr;
  if (cfg.isotropy) arr = build_walls(cfg);
  double cutoff = cfg.limit_cone_cutoff;
  if (cutoff <= 0) {
    for (const auto& e : ball.entries) cutoff = std::max(cutoff, e.mu.norm());
    cutoff *= 0.5;
    if (cutoff <= 0) throw std::runtime_error("limit-cone: ball has no nontrivial elements");
  }
  LimitConeEstimate est = limit_cone(ball, cutoff, arr ? &*arr : nullptr);
  json out;
  out["operation"] = "limit-cone";
  out["group"] = cfg.group.name();
  out["cutoff"] = io::fmt(est.cutoff);
  json dirs = json::array();
  for (const auto& d : est.directions) dirs.push_back(io::vector_json(d));
  out["directions"] = dirs;
  if (est.separation_margin) out["separation_margin"] = io::fmt(*est.separation_margin);
  std::ostringstream csv;
  csv << "direction_index";
  int dim = cfg.group.root_system().ambient_dim;
  for (int i = 0; i < dim; ++i) csv << ",u_" << i + 1;
  csv << "\n";
  for (size_t i = 0; i < est.directions.size(); ++i) {
    csv << i;
    for (double x : est.directions[i]) csv << "," << io::fmt(x);
    csv << "\n";
  }
  std::string csvs = csv.str();
  emit(cfg, "limit_cone", &out, &csvs);
  return 0;
}

int run_chambers(const CommonFlags& flags) {
  io::RunConfig cfg = load_config(flags);
  json spec_json = io::load_json_file(flags.spec_path);
  RootSystem sys = cfg.has_group ? cfg.group.root_system() : parse_system_field(spec_json);
  if (!cfg.isotropy && !spec_json.contains("isotropy"))
    throw std::runtime_error("chambers needs an isotropy spec");
  IsotropySpec iso = cfg.isotropy ? *cfg.isotropy
                                  : io::parse_isotropy(spec_json.at("isotropy"), sys);
  WallArrangement arr = build_arrangement(sys, iso);
  auto comps = components(arr);
  json out;
  out["operation"] = "chambers";
  out["root_system"] = sys.name();
  out["system"] = io::root_system_json(sys);
  out["walls"] = arr.walls.size();
  out["iota_stable"] = arr.iota_stable;
  json cjs = json::array();
  for (const auto& c : comps) {
    json cj;
    cj["signs"] = c.signs;
    cj["interior_point"] = io::rational_vector_json(c.interior_point);
    json av = json::array();
    for (int ai : avoided_simple_roots(arr, c)) av.push_back(sys.simple_names[ai]);
    cj["avoided_roots"] = av;
    json facets = json::array();
    for (const auto& f : c.facet_forms) facets.push_back(io::rational_vector_json(f));
    cj["facet_forms"] = facets;
    cjs.push_back(cj);
  }
  out["components"] = cjs;
  if (arr.iota_stable) {
    auto act = iota_action(arr, comps);
    out["iota_image"] = act.image;
    out["iota_fixed"] = act.fixed;
  }
  std::ostringstream csv;
  csv << "component,signs,avoided\n";
  for (size_t i = 0; i < comps.size(); ++i) {
    csv << i << ",\"";
    for (size_t k = 0; k < comps[i].signs.size(); ++k)
      csv << (comps[i].signs[k] > 0 ? "+" : "-");
    csv << "\",\"";
    auto av = avoided_simple_roots(arr, comps[i]);
    for (size_t k = 0; k < av.size(); ++k) {
      if (k) csv << " ";
      csv << sys.simple_names[av[k]];
    }
    csv << "\"\n";
  }
  std::string csvs = csv.str();
  emit(cfg, "chambers", &out, &csvs);
  return 0;
}

int run_tau_gap(const CommonFlags& flags) {
  io::RunConfig cfg = load_config(flags);
  json spec_json = io::load_json_file(flags.spec_path);
  RootSystem sys = cfg.has_group ? cfg.group.root_system() : parse_system_field(spec_json);
  IsotropySpec iso = cfg.isotropy ? *cfg.isotropy
                                  : io::parse_isotropy(spec_json.at("isotropy"), sys);
  WallArrangement arr = build_arrangement(sys, iso);
  auto comps = components(arr);
  int comp_index = spec_json.value("component_index", 0);
  if (comp_index < 0 || comp_index >= static_cast<int>(comps.size()))
    throw std::runtime_error("tau-gap: component_index out of range");
  TauGapData data = make_tau_gap_data(arr, comps[comp_index]);
  json out;
  out["operation"] = "tau-gap";
  out["root_system"] = sys.name();
  out["component_index"] = comp_index;
  json forms = json::array();
  for (size_t i = 0; i < data.facet_forms.size(); ++i) {
    json f;
    f["form"] = io::rational_vector_json(data.facet_forms[i]);
    json dp = json::array();
    for (int ai : data.delta_plus[i]) dp.push_back(sys.simple_names[ai]);
    f["delta_plus"] = dp;
    forms.push_back(f);
  }
  out["facets"] = forms;
  json values = json::array();
  std::ostringstream csv;
  csv << "vector_index,tau_gap,in_component\n";
  if (spec_json.contains("vectors")) {
    int i = 0;
    for (const auto& vj : spec_json.at("vectors")) {
      RatVec u = io::parse_rational_vector(vj);
      bool in = false;
      Rational g = tau_gap(sys, data, u, &in);
      json v;
      v["vector"] = io::rational_vector_json(u);
      v["tau_gap"] = io::rational_json(g);
      v["tau_gap_value"] = io::fmt(g.to_double());
      v["in_component"] = in;
      values.push_back(v);
      csv << i++ << "," << io::fmt(g.to_double()) << "," << (in ? 1 : 0) << "\n";
    }
  }
  out["values"] = values;
  if (cfg.has_group && !cfg.generators.empty()) {
    WordBall ball = build_ball(cfg);
    CrosscheckReport rep = sharpness_anosov_crosscheck(ball, arr, data, cfg.scan);
    json cj;
    cj["considered"] = rep.considered;
    cj["outside_component"] = rep.outside;
    cj["sign_agreements"] = rep.sign_agreements;
    cj["sign_disagreements"] = rep.sign_disagreements;
    cj["tau_fit"] = io::envelope_json(rep.tau_fit);
    cj["tau_verdict"] = verdict_name(rep.tau_verdict);
    cj["sharpness_verdict"] = verdict_name(rep.sharpness_verdict);
    cj["verdicts_agree"] = rep.verdicts_agree;
    if (rep.ratio_max > 0) {
      cj["ratio_min"] = io::fmt(rep.ratio_min);
      cj["ratio_max"] = io::fmt(rep.ratio_max);
    }
    out["crosscheck"] = cj;
  }
  std::string csvs = csv.str();
  emit(cfg, "tau_gap", &out, &csvs);
  return 0;
}

int run_divxa(const CommonFlags& flags) {
  io::RunConfig cfg = load_config(flags);
  json spec_json = io::load_json_file(flags.spec_path);
  RootSystem sys = cfg.has_group ? cfg.group.root_system() : parse_system_field(spec_json);
  json out;
  out["operation"] = "divxa";
  out["root_system"] = sys.name();
  json values = json::array();
  std::ostringstream csv;
  csv << "vector_index,div\n";
  int i = 0;
  for (const auto& vj : spec_json.at("vectors")) {
    RatVec a = io::parse_rational_vector(vj);
    Rational d = div_Xa(sys, a);
    json v;
    v["vector"] = io::rational_vector_json(a);
    v["div"] = io::rational_json(d);
    v["div_value"] = io::fmt(d.to_double());
    values.push_back(v);
    csv << i++ << "," << io::fmt(d.to_double()) << "\n";
  }
  out["values"] = values;
  std::string csvs = csv.str();
  emit(cfg, "divxa", &out, &csvs);
  return 0;
}

int run_obstruction(const CommonFlags& flags, const std::string& catalog_path) {
  io::RunConfig cfg;
  cfg.out_dir = flags.out_dir.empty() ? "." : flags.out_dir;
  cfg.format = flags.format.empty() ? "both" : flags.format;
  cfg.echo = json{{"catalog", catalog_path}};
  auto cases = io::load_catalog(catalog_path);
  json out;
  out["operation"] = "obstruction";
  json vjs = json::array();
  std::ostringstream csv;
  csv << "id,g,h,required_vcd,status\n";
  for (const auto& c : cases) {
    RootSystem sys = c.system();
    Verdict v = obstruction_verdict(c);
    vjs.push_back(io::verdict_json(v, c, sys));
    csv << c.id << "," << c.g.name() << "," << c.h.name() << "," << v.required << ","
        << status_name(v.status) << "\n";
  }
  out["verdicts"] = vjs;
  std::string csvs = csv.str();
  emit(cfg, "obstruction", &out, &csvs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan projections, wall arrangements and quotient obstructions"};
  app.require_subcommand(1);

  CommonFlags mu_f, jordan_f, ball_f, sharp_f, anosov_f, cone_f, chambers_f, tau_f, div_f,
      obs_f;
  std::string catalog_path;

  add_common(app.add_subcommand("mu", "Cartan projections of the spec's matrices"), mu_f);
  add_common(app.add_subcommand("jordan", "Jordan projections of the spec's matrices"),
             jordan_f);
  add_common(app.add_subcommand("ball", "enumerate the word ball"), ball_f);
  add_common(app.add_subcommand("sharpness", "sharpness scan over the word ball"), sharp_f);
  add_common(app.add_subcommand("anosov", "per-root linear gap scan"), anosov_f);
  add_common(app.add_subcommand("limit-cone", "limit cone estimate"), cone_f);
  add_common(app.add_subcommand("chambers", "chamber components of the wall arrangement"),
             chambers_f);
  add_common(app.add_subcommand("tau-gap", "weight-level gap evaluator"), tau_f);
  add_common(app.add_subcommand("divxa", "divergence of the chamber vector field"), div_f);
  auto* obs = app.add_subcommand("obstruction", "compact-quotient obstruction verdicts");
  add_common(obs, obs_f, /*spec_required=*/false);
  obs->add_option("--catalog", catalog_path, "case catalog (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("mu")) return run_mu(mu_f, false);
    if (app.got_subcommand("jordan")) return run_mu(jordan_f, true);
    if (app.got_subcommand("ball")) return run_ball(ball_f);
    if (app.got_subcommand("sharpness")) return run_sharpness(sharp_f);
    if (app.got_subcommand("anosov")) return run_anosov(anosov_f);
    if (app.got_subcommand("limit-cone")) return run_limit_cone(cone_f);
    if (app.got_subcommand("chambers")) return run_chambers(chambers_f);
    if (app.got_subcommand("tau-gap")) return run_tau_gap(tau_f);
    if (app.got_subcommand("divxa")) return run_divxa(div_f);
    if (app.got_subcommand("obstruction")) return run_obstruction(obs_f, catalog_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
