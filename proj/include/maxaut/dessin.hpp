#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "maxaut/pcgroup.hpp"

namespace maxaut {

// (order of x, order of y, order of xy): the type of the regular bipartite
// map carried by the group.
using DessinType = std::array<std::int64_t, 3>;

DessinType dessin_type(const PcPresentation& P);

// Euler genus of a regular dessin with N edges and type (l,m,n):
//   g = 1 + (N - N/l - N/m - N/n) / 2.
// Throws NotRegularData when an entry does not divide N, the numerator is
// odd, or the genus comes out negative.
std::int64_t euler_genus(std::uint64_t order, const DessinType& type);

// Rotation data on edge set = group elements: sigma_b(g) = g*x,
// sigma_w(g) = g*y, phi(g) = g*(xy)^-1, so phi . sigma_w . sigma_b = id.
struct CombinatorialMap {
  std::uint64_t n_edges = 0;
  std::vector<std::uint32_t> sigma_b, sigma_w, phi;
};

struct DessinReport {
  BigInt order;
  DessinType type{1, 1, 1};
  std::int64_t genus = 0;
  std::uint64_t black_vertices = 0, white_vertices = 0, edges = 0, faces = 0;
};

// Builds the rotation maps, verifies uniform cycle lengths and the
// composition identity, counts vertices and faces from cycles, and checks
// V - E + F = 2 - 2g against euler_genus.
std::pair<CombinatorialMap, DessinReport> combinatorial_map(
    const PcPresentation& P, std::uint64_t max_order = 3125);

// Computed order/type/genus vs the closed forms for a strict class-three
// family member.
struct Table3Report {
  GroupParams params;
  BigInt order_expected, order_computed;
  DessinType type_expected{1, 1, 1}, type_computed{1, 1, 1};
  BigInt genus_expected;
  std::int64_t genus_computed = 0;
  bool match = false;
};

Table3Report verify_table3(const GroupParams& params,
                           std::uint64_t max_order = 3125);

BigInt expected_table3_genus(const GroupParams& params);
DessinType expected_table3_type(const GroupParams& params);

// format "json": {n, sigma_b, sigma_w, phi}; format "dot": bipartite
// multigraph with one edge per group element.  Throws UnknownFormat.
std::string export_map(const CombinatorialMap& map, const std::string& format);

}  // namespace maxaut
