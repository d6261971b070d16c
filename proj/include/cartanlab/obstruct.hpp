// Dimension bookkeeping for classical (and the needed exceptional) real
// groups, boundary-dimension bounds for Anosov subgroups, and the automated
// compact-quotient obstruction verdicts built on the wall-arrangement
// pipeline.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/arrangement.hpp"
#include "cartanlab/rootsys.hpp"

namespace cartanlab {

// Symbolic group descriptor for dimension data. Families:
//   SL (field R/C/H, n), SO / Spin / O (p,q), SU (p,q), Sp (p,q),
//   SpR (2l real symplectic), SpC (2l complex symplectic), SOstar (2n),
//   U (p,q), G2(2), F4(-20), E6(-26), E6(-14), compact, product
struct GroupData {
  std::string family;
  char field = 'R';
  int n = 0;
  int p = 0, q = 0;
  int ell = 0;
  std::vector<GroupData> factors;

  std::string name() const;
};

// dim(G/K); compact factors contribute 0, products add.
long dim_symmetric_space(const GroupData& g);
// dim G and dim K for the cataloged noncompact families (consistency checks).
long dim_group(const GroupData& g);
long dim_maximal_compact(const GroupData& g);

// real rank of the cataloged families
int real_rank(const GroupData& g);

// rank + sum of root multiplicities; equals dim_symmetric_space for every
// cataloged family (exact integer identity).
long rank_plus_multiplicity_sum(const GroupData& g);

// Restricted root system with the multiplicity preset of the family; throws
// for dimension-only families (exceptional groups, U, compact).
RootSystem restricted_root_system(const GroupData& g);

// dim(G/K) - dim(H/K_H): the cohomological dimension a cocompact lattice-like
// subgroup must attain. Throws if negative.
long required_vcd(const GroupData& g, const GroupData& h);

// Bounds on vcd for groups admitting an equivariant boundary embedding, kept
// as (boundary dimension bound) + 1.
struct BoundRule {
  enum class Kind {
    MidspaceFibration,  // Gr_l(K^{2l}) fibration: vcd <= l dim(K) + 1
    FormFlag,           // isotropic flags of a form: vcd <= (dim_K V - r) dim(K)
    ParabolicPair,      // pair of flag varieties: vcd <= (root-space count) + 1
  };
  Kind kind = Kind::FormFlag;
  int half_dim = 0;   // MidspaceFibration: l
  char field = 'R';   // MidspaceFibration / FormFlag
  int dim_V = 0;      // FormFlag: dim over the field
  int form_rank = 0;  // FormFlag: real rank r
  std::vector<std::string> theta, theta_prime;  // ParabolicPair, simple root names
};

long boundary_dim_bound(const BoundRule& rule, const RootSystem* sys = nullptr);
long anosov_vcd_bound(const BoundRule& rule, const RootSystem* sys = nullptr);

struct ObstructionCase {
  std::string id;
  std::string description;
  GroupData g, h;
  IsotropySpec isotropy;
  // which bound applies when the membership forces a gap along a given
  // simple root; data, never invented by the engine
  std::map<std::string, BoundRule> rules;
  // explicit restricted root system, for families the dimension catalog
  // cannot realize itself (products at low rank, exceptional groups)
  std::optional<RootSystem> system_override;

  RootSystem system() const {
    return system_override ? *system_override : restricted_root_system(g);
  }
};

struct OrbitTrace {
  std::vector<int> orbit;            // component indices {C} or {C, iota(C)}
  std::vector<int> avoided;          // simple roots avoided by the whole orbit
  std::vector<std::string> applied;  // root names with a configured rule
  std::optional<long> best_bound;    // largest applicable vcd bound
  bool obstructed = false;           // best_bound < required
};

struct Verdict {
  enum class Status { NoCompactQuotients, NotObstructedByThisMethod };
  Status status = Status::NotObstructedByThisMethod;
  long required = 0;
  std::vector<OrbitTrace> trace;  // one per admissible iota-orbit
  int component_count = 0;
  std::string note;
};

std::string status_name(Verdict::Status s);

Verdict obstruction_verdict(const ObstructionCase& c);

}  // namespace cartanlab
