// JSON input parsing (group specs, matrices, isotropy specs, run configs,
// obstruction catalogs) and deterministic report serialization.
//
// Matrix format: row-major arrays; entries are numbers, decimal/rational
// strings ("0.25", "3/2"), or [re, im] pairs for complex families.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"  // vendored nlohmann

#include "cartanlab/arrangement.hpp"
#include "cartanlab/cartan.hpp"
#include "cartanlab/certify.hpp"
#include "cartanlab/obstruct.hpp"

namespace cartanlab::io {

using json = nlohmann::ordered_json;

json load_json_file(const std::string& path);

// fixed float formatting: 12 significant digits
std::string fmt(double v);

GroupSpec parse_group_spec(const json& j);
Rational parse_rational(const json& j);
RatVec parse_rational_vector(const json& j);
LeafMatrix parse_leaf_matrix(const GroupSpec& leaf, const json& j);
GroupElement parse_element(const GroupSpec& spec, const json& j, double tolerance);
IsotropySpec parse_isotropy(const json& j, const RootSystem& sys);

// {"family":"B","rank":3,"mult":{"pair":1,"single":2,"double":1}} or an array
// of such objects for a product system
RootSystem parse_root_system(const json& j);

GroupData parse_group_data(const json& j);
BoundRule parse_bound_rule(const json& j);
ObstructionCase parse_obstruction_case(const json& j);
std::vector<ObstructionCase> load_catalog(const std::string& path);

struct RunConfig {
  GroupSpec group;
  bool has_group = false;
  std::vector<GroupElement> generators;
  bool symmetric = false;
  std::optional<IsotropySpec> isotropy;
  int ball_radius = 8;
  BallConfig ball;
  ScanConfig scan;
  double element_tol = 1e-8;
  std::vector<std::string> theta;
  double limit_cone_cutoff = 0;  // 0: half of the largest sample norm
  long seed = 1;
  std::string out_dir = ".";
  std::string format = "both";  // csv | json | both
  json echo;                    // the effective configuration, for reports
};

RunConfig parse_run_config(const std::string& path);

// serialization helpers
json rational_json(const Rational& r);        // [num, den] as strings
json vector_json(const std::vector<double>& v);
json rational_vector_json(const RatVec& v);
json root_system_json(const RootSystem& sys);
json envelope_json(const EnvelopeFit& f);
json scan_config_json(const ScanConfig& c);
json verdict_json(const Verdict& v, const ObstructionCase& c, const RootSystem& sys);

std::string ball_csv(const WordBall& ball, const WallArrangement* arr,
                     const std::vector<int>& theta);
json sharpness_json(const SharpnessReport& rep, const WordBall& ball);
json anosov_json(const AnosovReport& rep, const RootSystem& sys, const WordBall& ball);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace cartanlab::io
