#include "maxaut/dessin.hpp"

#include <sstream>

#include "maxaut/arith.hpp"
#include "maxaut/errors.hpp"

namespace maxaut {

DessinType dessin_type(const PcPresentation& P) {
  Element x = gen_x(P), y = gen_y(P);
  return {element_order(P, x), element_order(P, y),
          element_order(P, multiply(P, x, y))};
}

std::int64_t euler_genus(std::uint64_t order, const DessinType& type) {
  if (order == 0) throw InvalidArgs("euler_genus: empty edge set");
  std::int64_t N = static_cast<std::int64_t>(order);
  std::int64_t sum = N;
  for (std::int64_t t : type) {
    if (t < 1 || N % t != 0)
      throw NotRegularData("euler_genus: type entry does not divide the order");
    sum = checked_sub(sum, N / t);
  }
  if (floor_mod(sum, 2) != 0)
    throw NotRegularData("euler_genus: odd Euler characteristic defect");
  std::int64_t g = 1 + sum / 2;
  if (g < 0) throw NotRegularData("euler_genus: negative genus");
  return g;
}

namespace {

// cycle count; throws unless all cycles share one length
std::uint64_t count_uniform_cycles(const std::vector<std::uint32_t>& perm,
                                   const char* what) {
  std::vector<bool> seen(perm.size(), false);
  std::uint64_t cycles = 0;
  std::uint64_t len0 = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    std::uint32_t w = static_cast<std::uint32_t>(s);
    while (!seen[w]) {
      seen[w] = true;
      w = perm[w];
      ++len;
    }
    if (len0 == 0) len0 = len;
    if (len != len0)
      throw Error(std::string("combinatorial_map: non-uniform cycles in ") +
                  what);
    ++cycles;
  }
  return cycles;
}

}  // namespace

std::pair<CombinatorialMap, DessinReport> combinatorial_map(
    const PcPresentation& P, std::uint64_t max_order) {
  std::uint64_t N = group_order_u64(P);
  if (N > max_order)
    throw ResourceBudgetExceeded(
        "combinatorial_map: group order exceeds the enumeration budget");

  const Element x = gen_x(P), y = gen_y(P);
  const Element xy_inv = inverse(P, multiply(P, x, y));

  CombinatorialMap map;
  map.n_edges = N;
  map.sigma_b.resize(N);
  map.sigma_w.resize(N);
  map.phi.resize(N);
  for (std::uint64_t t = 0; t < N; ++t) {
    Element g = element_at(P, t);
    map.sigma_b[t] = static_cast<std::uint32_t>(index_of(P, multiply(P, g, x)));
    map.sigma_w[t] = static_cast<std::uint32_t>(index_of(P, multiply(P, g, y)));
    map.phi[t] = static_cast<std::uint32_t>(index_of(P, multiply(P, g, xy_inv)));
  }

  // phi . sigma_w . sigma_b = id (right multiplication by x, y, (xy)^-1)
  for (std::uint64_t t = 0; t < N; ++t)
    if (map.phi[map.sigma_w[map.sigma_b[t]]] != t)
      throw Error("combinatorial_map: rotation composition violated");

  DessinReport rep;
  rep.order = N;
  rep.type = dessin_type(P);
  rep.edges = N;
  rep.black_vertices = count_uniform_cycles(map.sigma_b, "sigma_b");
  rep.white_vertices = count_uniform_cycles(map.sigma_w, "sigma_w");
  rep.faces = count_uniform_cycles(map.phi, "phi");

  // V - E + F = 2 - 2g, computed from the cycles
  std::int64_t euler = static_cast<std::int64_t>(rep.black_vertices) +
                       static_cast<std::int64_t>(rep.white_vertices) -
                       static_cast<std::int64_t>(rep.edges) +
                       static_cast<std::int64_t>(rep.faces);
  if (floor_mod(euler, 2) != 0)
    throw Error("combinatorial_map: odd Euler characteristic");
  rep.genus = (2 - euler) / 2;
  if (rep.genus != euler_genus(N, rep.type))
    throw Error("combinatorial_map: cycle genus disagrees with euler_genus");
  return {std::move(map), rep};
}

DessinType expected_table3_type(const GroupParams& params) {
  const std::int64_t p = params.p, a = params.a;
  switch (params.family) {
    case Family::Class3I:
    case Family::Class3II:
    case Family::Class3III:
      return {checked_pow(p, a), checked_pow(p, a), checked_pow(p, a)};
    case Family::Class3IV:
      return {checked_pow(2, a + 1), checked_pow(2, a + 1),
              checked_pow(2, a + 1)};
    case Family::Class3V:
    case Family::Class3VI:
      return {checked_pow(2, a), checked_pow(2, a), checked_pow(2, a)};
    default:
      throw PreconditionViolated(
          "expected_table3_type: class-three families only");
  }
}

BigInt expected_table3_genus(const GroupParams& params) {
  const std::int64_t a = params.a;
  const std::int64_t b = params.b.value_or(0);
  const std::int64_t c = params.c.value_or(0);
  const BigInt p = params.p;
  switch (params.family) {
    case Family::Class3I:
      return big_pow(3, a + b + 2 * c + 1) * (big_pow(3, a - 1) - 1) / 2 + 1;
    case Family::Class3II:
      return big_pow(p, a + b + 2 * c) * (big_pow(p, a) - 3) / 2 + 1;
    case Family::Class3III:
      return big_pow(2, a + b + 2 * c - 1) * (big_pow(2, a) - 3) + 1;
    case Family::Class3IV:
      return big_pow(2, a + b + 2 * c - 2) * (big_pow(2, a + 1) - 3) + 1;
    case Family::Class3V:
    case Family::Class3VI:
      return big_pow(2, 2 * a + 2 * c - 4) * (big_pow(2, a) - 3) + 1;
    default:
      throw PreconditionViolated(
          "expected_table3_genus: class-three families only");
  }
}

Table3Report verify_table3(const GroupParams& params, std::uint64_t max_order) {
  if (!family_is_class3(params.family))
    throw PreconditionViolated("verify_table3: class-three families only");
  if (!params.strict)
    throw PreconditionViolated("verify_table3: strict parameters only");

  Table3Report rep;
  rep.params = params;
  rep.order_expected = expected_order(params);
  rep.type_expected = expected_table3_type(params);
  rep.genus_expected = expected_table3_genus(params);

  PcPresentation P = build_presentation(params);
  std::uint64_t N = group_order_u64(P);
  rep.order_computed = N;
  auto [map, dr] = combinatorial_map(P, max_order);
  rep.type_computed = dr.type;
  rep.genus_computed = dr.genus;

  rep.match = rep.order_computed == rep.order_expected &&
              rep.type_computed == rep.type_expected &&
              BigInt(rep.genus_computed) == rep.genus_expected;
  return rep;
}

std::string export_map(const CombinatorialMap& map, const std::string& format) {
  if (format == "json") {
    std::ostringstream os;
    auto arr = [&](const std::vector<std::uint32_t>& v) {
      os << '[';
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (t) os << ',';
        os << v[t];
      }
      os << ']';
    };
    os << "{\"n\":" << map.n_edges << ",\"sigma_b\":";
    arr(map.sigma_b);
    os << ",\"sigma_w\":";
    arr(map.sigma_w);
    os << ",\"phi\":";
    arr(map.phi);
    os << "}";
    return os.str();
  }
  if (format == "dot") {
    // vertex = cycle; scan order gives deterministic ids
    auto cycle_ids = [](const std::vector<std::uint32_t>& perm,
                        std::vector<std::uint32_t>& id) {
      std::uint32_t next = 0;
      id.assign(perm.size(), 0xffffffffu);
      for (std::size_t s = 0; s < perm.size(); ++s) {
        if (id[s] != 0xffffffffu) continue;
        std::uint32_t w = static_cast<std::uint32_t>(s);
        while (id[w] == 0xffffffffu) {
          id[w] = next;
          w = perm[w];
        }
        ++next;
      }
      return next;
    };
    std::vector<std::uint32_t> bid, wid;
    std::uint32_t nb = cycle_ids(map.sigma_b, bid);
    std::uint32_t nw = cycle_ids(map.sigma_w, wid);

    std::ostringstream os;
    os << "graph dessin {\n";
    for (std::uint32_t t = 0; t < nb; ++t)
      os << "  b" << t << " [shape=circle style=filled fillcolor=black "
            "label=\"\"];\n";
    for (std::uint32_t t = 0; t < nw; ++t)
      os << "  w" << t << " [shape=circle style=filled fillcolor=white "
            "label=\"\"];\n";
    for (std::size_t g = 0; g < map.sigma_b.size(); ++g)
      os << "  b" << bid[g] << " -- w" << wid[g] << ";\n";
    os << "}\n";
    return os.str();
  }
  throw UnknownFormat("export_map: format must be json or dot");
}

}  // namespace maxaut
