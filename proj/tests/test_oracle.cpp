#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "maxaut/autos.hpp"
#include "maxaut/errors.hpp"
#include "maxaut/oracle.hpp"

using namespace maxaut;

namespace {

GroupParams params_of(Family f, std::int64_t p, std::int64_t a,
                      std::optional<std::int64_t> b,
                      std::optional<std::int64_t> c, bool strict = true) {
  return validate_params(f, p, a, b, c, strict);
}

PcPresentation pres_checked(const GroupParams& q) {
  PcPresentation P = build_presentation(q);
  ConsistencyOptions copt;
  check_consistency(P, copt);
  return P;
}

}  // namespace

TEST_CASE("to_cayley tabulates the engine") {
  PcPresentation Q8 = pres_checked(params_of(Family::Class2III, 2, 2, {}, {}));
  CayleyGroup C = to_cayley(Q8);
  CHECK(C.n == 8);
  CHECK(C.gens.size() == 2);
  CHECK(C.elem_order[C.e] == 1);
  // x and y are the designated generators and have order 4 in Q8.
  CHECK(C.elem_order[C.gens[0]] == 4);
  CHECK(C.elem_order[C.gens[1]] == 4);
  // exactly one involution (the central z)
  CHECK(std::count(C.elem_order.begin(), C.elem_order.end(), 2) == 1);
  // identity row and column
  for (std::uint32_t g = 0; g < 8; ++g) {
    CHECK(C.mul(C.e, g) == g);
    CHECK(C.mul(g, C.e) == g);
    CHECK(C.mul(g, C.inv[g]) == C.e);
  }
  CHECK(C.pow(C.gens[0], 4) == C.e);
  CHECK(C.pow(C.gens[0], 2) != C.e);
}

TEST_CASE("to_cayley budgets") {
  PcPresentation big = pres_checked(params_of(Family::Class3I, 3, 2, 1, 1));
  CHECK_THROWS_AS(to_cayley(big, 512), ResourceBudgetExceeded);
  CHECK_THROWS_AS(to_cayley(big, 3000), InvalidArgs);  // hard cap is 2187
  CHECK(to_cayley(big, 2187).n == 2187);
}

TEST_CASE("make_cayley validates its input") {
  PcPresentation Q8 = pres_checked(params_of(Family::Class2III, 2, 2, {}, {}));
  CayleyGroup C = to_cayley(Q8);

  // Round trip through the raw table reconstructs the same group data.
  CayleyGroup C2 = make_cayley(C.n, C.table, C.gens);
  CHECK(C2.e == C.e);
  CHECK(C2.inv == C.inv);
  CHECK(C2.elem_order == C.elem_order);

  CHECK_THROWS_AS(make_cayley(3, C.table, C.gens), InvalidArgs);

  auto broken = C.table;
  broken[3] = broken[4];  // duplicate entry in row 0
  CHECK_THROWS_AS(make_cayley(C.n, broken, C.gens), Error);

  // z (an involution) and e do not generate Q8.
  std::uint32_t z = 0;
  for (std::uint32_t g = 0; g < C.n; ++g)
    if (C.elem_order[g] == 2) z = g;
  CHECK_THROWS_AS(make_cayley(C.n, C.table, {C.e, z}), Error);
  CHECK_THROWS_AS(make_cayley(C.n, C.table, {42, 0}), InvalidArgs);

  // The smallest non-associative loop: a Latin square with a two-sided
  // identity that is not a group.
  std::vector<std::uint32_t> loop5 = {
      0, 1, 2, 3, 4,
      1, 0, 3, 4, 2,
      2, 3, 4, 0, 1,
      3, 4, 1, 2, 0,
      4, 2, 0, 1, 3,
  };
  CHECK_THROWS_AS(make_cayley(5, loop5, {1}), Error);
}

TEST_CASE("brute-force automorphism counts of classical groups") {
  auto count = [](const GroupParams& q) {
    return brute_automorphisms(to_cayley(pres_checked(q)));
  };
  // Aut(Q8) = S4
  CHECK(count(params_of(Family::Class2III, 2, 2, {}, {})) == BigInt(24));
  // Aut(D4) = D4
  CHECK(count(params_of(Family::Class2II, 2, 1, 1, {}, false)) == BigInt(8));
  // Aut(Cp x Cp) = GL(2,p)
  CHECK(count(params_of(Family::AbelianHomocyclic, 2, 1, {}, {})) == BigInt(6));
  CHECK(count(params_of(Family::AbelianHomocyclic, 3, 1, {}, {})) ==
        BigInt(48));
  CHECK(count(params_of(Family::AbelianHomocyclic, 5, 1, {}, {})) ==
        BigInt(480));
}

TEST_CASE("engine count agrees with the brute force on every small member") {
  const std::vector<GroupParams> members = {
      params_of(Family::AbelianHomocyclic, 2, 2, {}, {}),
      params_of(Family::AbelianHomocyclic, 7, 1, {}, {}),
      params_of(Family::Class2I, 3, 1, 1, {}),
      params_of(Family::Class2I, 5, 1, 1, {}),
      params_of(Family::Class2II, 2, 2, 1, {}),
      params_of(Family::Class2II, 2, 1, 1, {}, false),
      params_of(Family::Class2III, 2, 2, {}, {}),
      params_of(Family::Class2III, 2, 3, {}, {}),
      params_of(Family::Class3III, 2, 2, 1, 1),
      params_of(Family::Class3IV, 2, 2, 1, 1),
      params_of(Family::Class3V, 2, 3, {}, 1),
      params_of(Family::Class3VI, 2, 3, {}, 1),
      params_of(Family::Class3II, 3, 1, 1, 1, false),
  };
  for (const auto& q : members) {
    CAPTURE(std::string(family_name(q.family)));
    PcPresentation P = pres_checked(q);
    AutReport engine = automorphism_count(P, {}, q);
    BigInt brute = brute_automorphisms(to_cayley(P));
    CHECK(engine.relation_satisfying_count == brute);
  }
}

TEST_CASE("brute-force isomorphism decisions") {
  auto cayley_of = [](const GroupParams& q) {
    return to_cayley(pres_checked(q));
  };
  CayleyGroup q8 = cayley_of(params_of(Family::Class2III, 2, 2, {}, {}));
  CayleyGroup d4 = cayley_of(params_of(Family::Class2II, 2, 1, 1, {}, false));
  CHECK(brute_isomorphic(q8, q8));
  CHECK(brute_isomorphic(d4, d4));
  CHECK_FALSE(brute_isomorphic(q8, d4));  // same order, not isomorphic
  CHECK_FALSE(brute_isomorphic(d4, q8));

  CayleyGroup c4 = cayley_of(params_of(Family::AbelianHomocyclic, 2, 1, {}, {}));
  CHECK_FALSE(brute_isomorphic(q8, c4));  // different orders

  CayleyGroup f3 = cayley_of(params_of(Family::Class3III, 2, 2, 1, 1));
  CayleyGroup f4 = cayley_of(params_of(Family::Class3IV, 2, 2, 1, 1));
  CHECK(brute_isomorphic(f3, f3));
  CHECK_FALSE(brute_isomorphic(f3, f4));
  CHECK_FALSE(brute_isomorphic(f4, f3));

  CayleyGroup f5 = cayley_of(params_of(Family::Class3V, 2, 3, {}, 1));
  CayleyGroup f6 = cayley_of(params_of(Family::Class3VI, 2, 3, {}, 1));
  CHECK(brute_isomorphic(f5, f5));
  CHECK_FALSE(brute_isomorphic(f5, f6));
}

TEST_CASE("maximal subgroup isomorphism checks") {
  auto cayley_of = [](const GroupParams& q) {
    return to_cayley(pres_checked(q));
  };
  MiReport q8 = mi_check(cayley_of(params_of(Family::Class2III, 2, 2, {}, {})), 2);
  CHECK(q8.all_isomorphic);
  CHECK(q8.frattini_size == 2);
  CHECK(q8.sizes == std::vector<std::size_t>{4, 4, 4});

  // D4 has maximal subgroups C4, C2 x C2, C2 x C2.
  MiReport d4 =
      mi_check(cayley_of(params_of(Family::Class2II, 2, 1, 1, {}, false)), 2);
  CHECK_FALSE(d4.all_isomorphic);
  CHECK(d4.sizes == std::vector<std::size_t>{4, 4, 4});

  MiReport c9 =
      mi_check(cayley_of(params_of(Family::AbelianHomocyclic, 3, 1, {}, {})), 3);
  CHECK(c9.all_isomorphic);
  CHECK(c9.frattini_size == 1);
  CHECK(c9.sizes == std::vector<std::size_t>{3, 3, 3, 3});

  MiReport f3 =
      mi_check(cayley_of(params_of(Family::Class3III, 2, 2, 1, 1)), 2);
  CHECK(f3.all_isomorphic);
  CHECK(f3.frattini_size == 32);
  CHECK(f3.sizes == std::vector<std::size_t>{64, 64, 64});

  CHECK_THROWS_AS(
      mi_check(cayley_of(params_of(Family::Class2III, 2, 2, {}, {})), 3),
      Error);  // wrong p: Frattini index is not 3^2
}

TEST_CASE("dump_table emits the plain numeric format") {
  PcPresentation C2sq =
      pres_checked(params_of(Family::AbelianHomocyclic, 2, 1, {}, {}));
  CayleyGroup C = to_cayley(C2sq);
  std::ostringstream os;
  dump_table(C, os);
  CHECK(os.str() ==
        "4\n"
        "0 1 2 3\n"
        "1 0 3 2\n"
        "2 3 0 1\n"
        "3 2 1 0\n");
}
