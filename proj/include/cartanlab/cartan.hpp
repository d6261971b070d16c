// Cartan and Jordan projections of explicit matrices in SL(n,R), SL(n,C),
// SL(n,H) (realized as complex 2n x 2n), SO(p,q) with p >= q, and finite
// direct products of these.
#pragma once

#include <string>
#include <vector>

#include "cartanlab/linalg.hpp"
#include "cartanlab/rootsys.hpp"

namespace cartanlab {

struct GroupSpec {
  enum class Kind { SL_R, SL_C, SL_H, SO, Product };
  Kind kind = Kind::SL_R;
  int n = 0;     // SL families
  int p = 0, q = 0;  // SO(p,q), p >= q >= 1
  std::vector<GroupSpec> factors;

  static GroupSpec sl(int n, char field = 'R');
  static GroupSpec so(int p, int q);
  static GroupSpec product(std::vector<GroupSpec> factors);

  bool is_product() const { return kind == Kind::Product; }
  // leaves in order, for products
  std::vector<const GroupSpec*> leaves() const;
  // stored matrix dimension of one leaf (complex dim for SL_C/SL_H)
  int matrix_dim() const;
  bool complex_storage() const { return kind == Kind::SL_C || kind == Kind::SL_H; }
  // rank of the restricted root system contributed by this (leaf) spec
  int rank() const;

  RootSystem root_system() const;
  std::string name() const;
};

// One leaf matrix; complex_flag tells which member is meaningful.
struct LeafMatrix {
  bool complex_flag = false;
  Mat real;
  CMat cplx;

  static LeafMatrix of(Mat m) { return {false, std::move(m), {}}; }
  static LeafMatrix of(CMat m) { return {true, {}, std::move(m)}; }
};

struct GroupElement {
  std::vector<LeafMatrix> blocks;  // one per leaf
  double tolerance = 1e-8;         // validation tolerance it passed under
};

// Validates the defining relations (|det - 1|, and g^T J g = J for SO(p,q),
// and the quaternionic structure for SL(n,H)); throws std::domain_error with
// the residual on failure.
GroupElement validate_element(const GroupSpec& spec, std::vector<LeafMatrix> blocks,
                              double tolerance = 1e-8);
GroupElement validate_element(const GroupSpec& spec, Mat m, double tolerance = 1e-8);
GroupElement validate_element(const GroupSpec& spec, CMat m, double tolerance = 1e-8);

struct CartanVector {
  std::vector<double> coords;
  double norm() const;
};

double norm(const std::vector<double>& v);

// Cartan projection: sorted log singular values in the coordinates of the
// spec's root system (componentwise for products).
CartanVector mu(const GroupSpec& spec, const GroupElement& g);

// Jordan projection: sorted logs of eigenvalue moduli. Throws
// EigenvalueFailure when the eigensolver fails (fall back to mu of powers).
CartanVector jordan(const GroupSpec& spec, const GroupElement& g);

// mu(g^-1 g'), the vector-valued distance between the orbit points.
CartanVector vec_distance(const GroupSpec& spec, const GroupElement& g,
                          const GroupElement& g_prime);

GroupElement group_inverse(const GroupSpec& spec, const GroupElement& g);
GroupElement group_product(const GroupSpec& spec, const GroupElement& a,
                           const GroupElement& b);
GroupElement group_identity(const GroupSpec& spec);

// Exact Cartan projection of g^(2^k) via integer Gram characteristic
// polynomials; immune to the precision collapse of forming the power in
// floating point. Realified matrix dimension must not exceed `dim_cap`.
CartanVector mu_power(const GroupSpec& spec, const GroupElement& g, int log2_exponent,
                      int dim_cap = 12);

// Jordan projection estimated as mu(g^(2^k)) / 2^k with the exact engine;
// residual_out (optional) receives |estimate_k - estimate_{k-1}|.
CartanVector jordan_power_estimate(const GroupSpec& spec, const GroupElement& g,
                                   int log2_exponent, double* residual_out = nullptr);

// J = diag(1_p, -1_q), the defining form of SO(p,q).
Mat so_defining_form(int p, int q);

}  // namespace cartanlab
