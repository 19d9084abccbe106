#pragma once

#include <cstdint>
#include <vector>

#include "maxaut/pcgroup.hpp"

namespace maxaut {

struct SubgroupSet {
  PcPresentation pres;
  std::vector<Element> members;        // sorted by enumeration index
  std::vector<std::uint64_t> indices;  // parallel to members
  std::vector<Element> generators;

  std::size_t size() const { return members.size(); }
  bool contains(const Element& g) const;
};

// BFS closure under multiplication; Lagrange-checked against |G|.
SubgroupSet subgroup_closure(const PcPresentation& P,
                             std::vector<Element> gens,
                             std::uint64_t max_order = 3125);

// G_1 = G, G_{s+1} = <[g,t] : g in G_s, t in {x,y}>, until trivial.
// The trivial term is included, so a class-c group yields c+1 entries.
std::vector<SubgroupSet> lower_central_series(const PcPresentation& P,
                                              std::uint64_t max_order = 3125);

// Cyclic orders of an abelian subgroup, non-increasing (empty for trivial).
// Recovered from the counts N_k = #{g : g^{p^k} = e}.
using AbelianType = std::vector<std::int64_t>;
AbelianType abelian_type(const SubgroupSet& S);  // throws NotAbelian

// Type of G/G' from coset representatives x^i y^j, orders taken modulo G'.
AbelianType abelianization_type(const PcPresentation& P);

// <x^p, y^p, z, u, v>; index p^2 for these two-generator groups.
SubgroupSet frattini_subgroup(const PcPresentation& P,
                              std::uint64_t max_order = 3125);

// Computed vs expected invariant triple (G_3, G', G/G') for a strict
// class-three family member.
struct Table2Report {
  GroupParams params;
  AbelianType g3, gprime, ab;
  AbelianType g3_expected, gprime_expected, ab_expected;
  bool match = false;
};

Table2Report verify_table2(const GroupParams& params,
                           std::uint64_t max_order = 3125);

}  // namespace maxaut
