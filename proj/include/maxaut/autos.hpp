#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxaut/pcgroup.hpp"

namespace maxaut {

struct CountOptions {
  std::uint64_t max_order = 3125;  // largest |G| for pair enumeration
  int jobs = 1;
};

struct AutReport {
  std::optional<GroupParams> params;
  std::int64_t p = 0;
  int n = 0;
  BigInt order;
  BigInt generating_pair_count;
  BigInt relation_satisfying_count;  // = |Aut(G)|
  BigInt hall_bound_value;
  bool is_maximally_automorphic = false;
  double seconds = 0.0;
};

// Burnside criterion: (g,h) generates iff the exponent matrix of (g,h) on
// (x,y) is invertible mod p.
bool is_generating_pair(const PcPresentation& P, const Element& g,
                        const Element& h);

// Von Dyck check of rel's defining relations on the pair (g,h) living in
// alg's group.  The derived images z1 = [g,h], u1 = [z1,g], v1 = [z1,h] are
// computed first and every tail is evaluated on those images, not on the
// original z, u, v.  With rel == alg and (g,h) generating, success means
// x -> g, y -> h extends to an automorphism.
bool satisfies_defining_relations(const PcPresentation& rel,
                                  const PcPresentation& alg, const Element& g,
                                  const Element& h);

inline bool satisfies_defining_relations(const PcPresentation& P,
                                         const Element& g, const Element& h) {
  return satisfies_defining_relations(P, P, g, h);
}

// Exact |Aut(G)| by enumerating all ordered pairs, filtering generating
// pairs, then checking the relations.  Deterministic for any job count.
AutReport automorphism_count(const PcPresentation& P,
                             const CountOptions& opt = {},
                             const std::optional<GroupParams>& params = {});

bool is_maximally_automorphic(const PcPresentation& P,
                              const CountOptions& opt = {});

// The three standard generator substitutions and their induced action on
// z, u, v:
//   swap    x -> y,   y -> x    gives z -> z^-1, u -> v^-1, v -> u^-1
//   invert  x -> x^-1, y -> y   gives z -> z^-1 u, u -> u, v -> v^-1
//   shear   x -> x,   y -> y x  gives z -> z u,   u -> u, v -> u v
struct Table1Row {
  std::string name;
  Element g, h;
  bool relations_hold = false;
  Element z_img, u_img, v_img;
  Element z_expected, u_expected, v_expected;
  bool match = false;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  bool pass = false;
};

Table1Report table1_check(const PcPresentation& P);

// G/G_3 (delete u and v) must land on the expected class-two or abelian
// family member and be maximally automorphic itself.
struct QuotientReport {
  GroupParams parent;
  Family expected_family = Family::AbelianHomocyclic;
  GroupParams quotient_params;
  PcPresentation quotient;
  bool presentation_matches = false;
  AutReport aut;
  bool pass = false;
};

QuotientReport quotient_check(const GroupParams& params,
                              const CountOptions& opt = {});

// For two verified maximally automorphic groups of the same order, A and B
// are isomorphic iff the designated generators of one satisfy the other's
// defining relations (an epimorphism between equal finite orders is an
// isomorphism, and maximal automorphicity makes the standard pair
// sufficient).  Throws PreconditionViolated unless both reports verify
// maximality and p and the orders agree.
bool maxaut_isomorphic(const PcPresentation& A, const AutReport& ra,
                       const PcPresentation& B, const AutReport& rb);

}  // namespace maxaut
