// Word-ball enumeration of finitely generated matrix subgroups and the
// empirical certification layer on top of it: sharpness and word-length gap
// scans, the per-root linear-gap (Anosov) criterion, limit-cone estimates,
// component consistency, and the weight-level tau-gap evaluator.
//
// A finite ball can never prove an asymptotic inequality; CERTIFIED_ON_BALL
// is a finite-radius certificate whose stability window is a configurable
// heuristic, echoed in every report.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartanlab/arrangement.hpp"
#include "cartanlab/cartan.hpp"

namespace cartanlab {

struct GeneratorSet {
  std::vector<GroupElement> generators;
  bool symmetric = false;  // when false, inverses are adjoined
};

struct BallConfig {
  double dedup_tol = 1e-8;
  size_t max_elements = 200000;
};

struct BallEntry {
  GroupElement g;
  int length = 0;
  std::vector<int> word;  // indices into the symmetrized generator list
  CartanVector mu;
};

struct WordBall {
  GroupSpec spec;
  std::vector<GroupElement> gens;  // symmetrized, as enumerated
  std::vector<BallEntry> entries;  // sorted by length, then entry coordinates
  int radius = 0;
  double kappa = 0;  // max generator |mu|
};

WordBall enumerate_ball(const GroupSpec& spec, const GeneratorSet& gens, int radius,
                        const BallConfig& config = {});

// (S1 x {1}) u ({1} x S2) as a generating set of the product, so that word
// lengths add across the factors.
GeneratorSet product_generators(const GroupSpec& product_spec, const GeneratorSet& s1,
                                const GeneratorSet& s2);

enum class ScanVerdict { CertifiedOnBall, Violation, Inconclusive };

std::string verdict_name(ScanVerdict v);

struct ScanConfig {
  double zero_tol = 1e-9;        // distances/gaps below this count as zero
  double violation_norm_floor = 0.5;  // |mu| floor for sharpness violations
  int violation_length_floor = 2;    // |gamma| floor for gap violations
  double certify_floor = 1e-3;   // fitted slope must exceed this
  double stability_tol = 0.25;   // relative drift across the outer radius window
  double intercept_cap = 0.0;    // cap on the fitted intercept
};

struct EnvelopeFit {
  bool defined = false;
  double slope = 0;
  double intercept = 0;
};

// max-slope lower envelope d >= slope * x - intercept through the samples,
// with the intercept capped; slope = min_i (d_i + cap) / x_i over x_i > 0
EnvelopeFit fit_envelope(const std::vector<std::pair<double, double>>& samples,
                         double intercept_cap);

struct SharpnessSample {
  int length;
  double mu_norm;
  double dist;
};

struct SharpnessReport {
  std::vector<SharpnessSample> samples;      // one per ball entry
  EnvelopeFit norm_fit;                      // d >= c |mu| - c'
  EnvelopeFit length_fit;                    // d >= C |gamma| - C'
  ScanVerdict verdict = ScanVerdict::Inconclusive;
  std::vector<int> violation_witnesses;      // entry indices
  // properness growth diagnostic: how many elements sit within each distance
  // threshold of the wall set (eighths of the largest observed distance)
  std::vector<std::pair<double, int>> growth_counts;
  ScanConfig config;
};

SharpnessReport sharpness_scan(const WordBall& ball, const WallArrangement& arr,
                               const ScanConfig& config = {});

struct AnosovRootReport {
  int root_index;
  EnvelopeFit fit;  // gap >= C |gamma| - C'
  ScanVerdict verdict;
  std::vector<int> violation_witnesses;
};

struct AnosovReport {
  std::vector<AnosovRootReport> roots;
  ScanVerdict verdict = ScanVerdict::Inconclusive;  // worst across theta
  ScanConfig config;
};

AnosovReport anosov_scan(const WordBall& ball, const std::vector<int>& theta,
                         const ScanConfig& config = {});

enum class ProjectionKind { Cartan, Jordan };

struct LimitConeEstimate {
  std::vector<std::vector<double>> directions;  // unit vectors, deduplicated
  double cutoff = 0;
  // min over directions of the wall distance on the unit sphere, when an
  // arrangement is supplied
  std::optional<double> separation_margin;
};

LimitConeEstimate limit_cone(const WordBall& ball, double cutoff,
                             const WallArrangement* arr = nullptr,
                             ProjectionKind kind = ProjectionKind::Cartan,
                             double dedup_tol = 1e-9);

struct ComponentReport {
  bool pass = false;
  int orbit_a = -1, orbit_b = -1;          // the chosen iota orbit {C, iota(C)}
  std::vector<int> counts;                 // hits per component
  std::vector<int> exceptions;             // entry indices outside the orbit
  int on_wall = 0;                         // entries too close to a wall to assign
  int below_floor = 0;
};

ComponentReport component_consistency(const WordBall& ball, const WallArrangement& arr,
                                      const std::vector<Component>& comps,
                                      const IotaAction& act, double norm_floor = 0.5,
                                      double wall_tol = 1e-9);

// Weight-level data of the tensor representation attached to a chamber
// component: facet forms, their positively-paired simple roots, and the
// dominant pieces chi+ / chi- with chi+ - chi- = phi.
struct TauGapData {
  std::vector<RatVec> facet_forms;
  std::vector<std::vector<int>> delta_plus;
  std::vector<RatVec> chi_plus, chi_minus;
  std::vector<int> component_signs;  // for membership checks
  RatVec interior_point;
};

TauGapData make_tau_gap_data(const WallArrangement& arr, const Component& comp);

// min over facet forms phi of min(<phi,u>, min over alpha in Delta_phi+ of
// <alpha,u>). Exact for rational input. in_chamber (optional) reports whether
// u actually lies in the component, which the identity requires.
Rational tau_gap(const RootSystem& sys, const TauGapData& data, const RatVec& u,
                 bool* in_component = nullptr);
double tau_gap(const RootSystem& sys, const TauGapData& data, const std::vector<double>& u,
               bool* in_component = nullptr, double tol = 1e-12);

struct CrosscheckReport {
  int considered = 0;       // samples inside C (after opposition reduction)
  int outside = 0;          // samples in neither C nor iota(C)
  int sign_agreements = 0;  // tau_gap > 0 iff wall distance > 0
  int sign_disagreements = 0;
  double ratio_min = 0, ratio_max = 0;  // tau_gap / distance over positive pairs
  EnvelopeFit tau_fit;                  // tau_gap >= C |gamma| - C'
  ScanVerdict tau_verdict = ScanVerdict::Inconclusive;
  ScanVerdict sharpness_verdict = ScanVerdict::Inconclusive;
  bool verdicts_agree = false;
};

CrosscheckReport sharpness_anosov_crosscheck(const WordBall& ball, const WallArrangement& arr,
                                             const TauGapData& data,
                                             const ScanConfig& config = {});

}  // namespace cartanlab
