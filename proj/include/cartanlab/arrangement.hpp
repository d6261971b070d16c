// Wall arrangements in the closed Weyl chamber: the W-orbit of a Cartan
// subspace (or a prescribed union of chamber walls), chamber components of
// the complement, the opposition-involution action on components, avoided
// simple roots, facet forms and the integerization of rational forms.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartanlab/rational.hpp"
#include "cartanlab/rootsys.hpp"

namespace cartanlab {

struct IsotropySpec {
  enum class Kind { WallUnion, Hyperplane, Subspace };
  Kind kind = Kind::WallUnion;
  std::vector<std::string> theta;  // WallUnion: simple root names
  RatVec form_coords;              // Hyperplane: covector in ambient coordinates
  std::vector<RatVec> basis;       // Subspace: spanning vectors inside a

  static IsotropySpec wall_union(std::vector<std::string> names);
  static IsotropySpec hyperplane(RatVec form);
  static IsotropySpec subspace(std::vector<RatVec> basis);
};

struct Wall {
  std::vector<RatVec> basis;   // basis of the subspace (inside a)
  RatMat projector;            // exact orthogonal projector onto the subspace
  std::optional<RatVec> form;  // primitive covector when the wall is codim-1 in a
};

struct WallArrangement {
  RootSystem system;
  IsotropySpec source;
  std::vector<Wall> walls;     // deduplicated, deterministic order
  bool hyperplane_walls = true;
  bool iota_stable = true;
  RatMat iota;
};

WallArrangement build_arrangement(const RootSystem& sys, const IsotropySpec& spec,
                                  size_t weyl_cap = 1000000);

// Distance from u (expected in the closed chamber, within tolerance) to the
// union of walls. Throws if u is outside the chamber beyond tolerance;
// callers must Weyl-reduce first.
double dist_to_muH(const WallArrangement& arr, const std::vector<double>& u,
                   double chamber_tol = 1e-9);
// Exact squared distance for rational input (same chamber requirement).
Rational dist2_to_muH(const WallArrangement& arr, const RatVec& u);

struct Component {
  std::vector<int> signs;          // +1/-1 per wall (walls with a form)
  RatVec interior_point;           // exact rational point with strict signs
  std::vector<int> facet_walls;    // wall indices whose kernel meets the closure
  std::vector<RatVec> facet_forms; // the correspondingly signed forms, positive on C
};

// Connected components of (closed chamber) minus walls. Requires codim-1
// walls; arrangements of smaller walls yield the single full component.
std::vector<Component> components(const WallArrangement& arr);

struct IotaAction {
  std::vector<int> image;  // component index -> component index
  std::vector<int> fixed;  // indices with image[i] == i
};

IotaAction iota_action(const WallArrangement& arr, const std::vector<Component>& comps);

// Simple roots alpha with C intersect Ker(alpha) empty (decided by exact LP).
std::vector<int> avoided_simple_roots(const WallArrangement& arr, const Component& comp);

struct WallSplit {
  std::vector<double> b;  // component orthogonal to the minimizing translate
  std::vector<double> a;  // component inside the minimizing translate
  int weyl_index = -1;    // index into weyl_group(sys) of the minimizer
  double dist = 0;        // == |b|
};

// Orthogonal split of v against the distance-minimizing Weyl translate of the
// given subspace; ties resolved by the lexicographically smallest Weyl matrix.
WallSplit split_wall_distance(const RootSystem& sys, const std::vector<RatVec>& subspace_basis,
                              const std::vector<double>& v, double tie_tol = 1e-12);

// Least positive integer k such that every Weyl image of k * phi0 has integer
// coordinates in the fundamental-weight basis. phi0 given by its
// fundamental-weight coefficients.
BigInt integerize(const RootSystem& sys, const RatVec& omega_coeffs);

}  // namespace cartanlab
