#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "maxaut/bigint.hpp"
#include "maxaut/params.hpp"

namespace maxaut {

// Presentation-free cross-check machinery.  Everything here works on raw
// multiplication tables so it shares no arithmetic with the normal-form
// engine beyond the one-off tabulation in to_cayley.
struct CayleyGroup {
  std::size_t n = 0;
  std::vector<std::uint32_t> table;  // row-major n*n
  std::uint32_t e = 0;
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> gens;        // designated generators
  std::vector<std::int64_t> elem_order;   // order of each element

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table[a * n + b];
  }
  std::uint32_t pow(std::uint32_t g, std::uint64_t t) const;
};

// Validates the table: Latin square, two-sided identity, inverses,
// generator closure, and full N^3 associativity for n <= 512.
CayleyGroup make_cayley(std::size_t n, std::vector<std::uint32_t> table,
                        std::vector<std::uint32_t> gens);

// Tabulates the engine's multiplication.  Budget default 512, raise to
// 2187 at most; beyond that throws ResourceBudgetExceeded.
CayleyGroup to_cayley(const PcPresentation& P, std::uint64_t max_order = 512);

// Counts images (g1,...,gd) of the designated generators whose breadth-
// first word-image propagation closes into a bijective homomorphism.
BigInt brute_automorphisms(const CayleyGroup& C);

bool brute_isomorphic(const CayleyGroup& A, const CayleyGroup& B);

// All p+1 maximal subgroups (index-p preimages over the Frattini
// quotient), pairwise isomorphism-tested.
struct MiReport {
  bool all_isomorphic = false;
  std::size_t frattini_size = 0;
  std::vector<std::size_t> sizes;
};

MiReport mi_check(const CayleyGroup& C, std::int64_t p);

void dump_table(const CayleyGroup& C, std::ostream& os);

}  // namespace maxaut
