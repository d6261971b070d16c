// Restricted root systems with multiplicities in fixed coordinate
// realizations, their Weyl groups, opposition involutions, fundamental
// weights and dominance order. All arithmetic here is exact rational.
//
// Realizations:
//   A_r   trace-zero hyperplane of R^{r+1}, alpha_i = e_i - e_{i+1}
//   B_r   R^r, alpha_i = e_i - e_{i+1}, alpha_r = e_r
//   C_r   R^r, alpha_i = e_i - e_{i+1}, alpha_r = 2 e_r
//   D_r   R^r (r >= 3), alpha_r = e_{r-1} + e_r
//   BC_r  simple roots of B_r; positive roots of B_r plus the doubles 2 e_i
// Products concatenate coordinates.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartanlab/rational.hpp"

namespace cartanlab {

enum class Family { A, B, C, D, BC };

std::string family_name(Family f);

// Multiplicities by root shape. `pair` covers e_i - e_j (and e_i + e_j for
// B/C/D/BC), `single` covers e_i, `doubled` covers 2 e_i.
struct MultiplicityProfile {
  long pair = 1;
  long single = 1;
  long doubled = 1;
};

struct PositiveRoot {
  RatVec coords;  // covector in ambient coordinates
  long mult = 1;
};

struct RootSystem {
  struct Factor {
    Family family;
    int rank;
    int coord_offset;  // first ambient coordinate of this factor
    int coord_dim;
  };

  std::vector<Factor> factors;
  int ambient_dim = 0;
  int rank = 0;
  std::vector<RatVec> simple_roots;         // covectors, indexed over all factors
  std::vector<std::string> simple_names;    // "alpha1", ...
  std::vector<PositiveRoot> positive_roots;
  std::vector<RatVec> a_equations;  // forms vanishing on a (sum-zero per A factor)

  bool is_simple() const { return factors.size() == 1; }
  std::string name() const;

  // Index of a simple root by name ("alpha3"); throws on unknown name.
  int simple_index(const std::string& name) const;

  // Projects a covector onto span(a) (mod the a_equations), so that wall
  // kernels and inner products have canonical representatives.
  RatVec project_to_a(const RatVec& form) const;

  // A rational interior chamber point x with alpha_i(x) = 1 for all i.
  RatVec chamber_interior_point() const;
};

RootSystem build_root_system(Family family, int rank,
                             const MultiplicityProfile& mult = {});
RootSystem product(const RootSystem& a, const RootSystem& b);

// Reflection matrices of the simple roots, acting on ambient coordinates.
RatMat simple_reflection_matrix(const RootSystem& sys, int alpha_index);

struct Weight {
  RatVec coords;
};

// Eq-style simple reflection on covectors: phi - 2 (phi,alpha)/(alpha,alpha) alpha.
Weight simple_reflection(const RootSystem& sys, int alpha_index, const Weight& phi);

// Full Weyl group as exact orthogonal matrices, deduplicated, sorted
// lexicographically (deterministic). Throws if the closure exceeds `cap`.
std::vector<RatMat> weyl_group(const RootSystem& sys, size_t cap = 1000000);

// The opposition involution iota = -w0 as a matrix on ambient coordinates.
// Verifies that iota permutes the simple roots.
RatMat opposition_involution(const RootSystem& sys);
RatMat opposition_involution(const RootSystem& sys, const std::vector<RatMat>& weyl);

// Fundamental weights, indexed like the simple roots, expressed in ambient
// coordinates inside span(simple roots).
std::vector<Weight> fundamental_weights(const RootSystem& sys);

// nu <= nu' in dominance order: nu' - nu a nonnegative combination of simple
// roots (and lying in their span).
bool dominance_leq(const RootSystem& sys, const Weight& nu, const Weight& nu_prime);

enum class ChamberPosition { Interior, Boundary, Outside };

struct ChamberMembership {
  ChamberPosition position;
  std::vector<int> vanishing_simple_roots;  // faces met, for Boundary
};

ChamberMembership chamber_membership(const RootSystem& sys, const RatVec& v);

// Coefficients of phi in the fundamental-weight basis: t_alpha = <phi, alpha_vee>.
RatVec omega_coefficients(const RootSystem& sys, const RatVec& form);

// Sum over all roots (positive and negative, with multiplicity) of
// min(alpha(a), 0); always <= 0, and < 0 iff some root is nonzero on a.
Rational div_Xa(const RootSystem& sys, const RatVec& a);
double div_Xa(const RootSystem& sys, const std::vector<double>& a);

// Applies simple reflections until v lies in the closed chamber; returns the
// chamber representative (exact).
RatVec weyl_reduce(const RootSystem& sys, RatVec v);
std::vector<double> weyl_reduce(const RootSystem& sys, std::vector<double> v);

}  // namespace cartanlab
