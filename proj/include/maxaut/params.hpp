#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "maxaut/bigint.hpp"

namespace maxaut {

// The catalog of two-generator p-groups handled here: the homocyclic
// abelian groups, three families of nilpotency class two and six of class
// three.  Every non-abelian member is described on generators x, y with
// z = [x,y], u = [z,x], v = [z,y].
enum class Family {
  AbelianHomocyclic,
  Class2I,
  Class2II,
  Class2III,
  Class3I,
  Class3II,
  Class3III,
  Class3IV,
  Class3V,
  Class3VI,
};

inline constexpr std::array<Family, 10> kAllFamilies = {
    Family::AbelianHomocyclic, Family::Class2I,   Family::Class2II,
    Family::Class2III,         Family::Class3I,   Family::Class3II,
    Family::Class3III,         Family::Class3IV,  Family::Class3V,
    Family::Class3VI,
};

inline constexpr std::array<Family, 6> kClass3Families = {
    Family::Class3I,  Family::Class3II, Family::Class3III,
    Family::Class3IV, Family::Class3V,  Family::Class3VI,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws InvalidArgs

bool family_uses_b(Family f);
bool family_uses_c(Family f);
bool family_is_class3(Family f);
bool family_is_class2(Family f);

struct GroupParams {
  Family family = Family::AbelianHomocyclic;
  std::int64_t p = 2;
  std::int64_t a = 1;
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> c;
  bool strict = true;

  bool operator==(const GroupParams&) const = default;
};

// Checks primality, presence and positivity of the used parameters and the
// global bound p^(max exponent + 1) <= 2^31.  In strict mode the family
// side conditions are enforced as well; permissive mode skips those so
// that nearby non-maximal presentations can be built as negative controls.
// Unused b/c are cleared in the returned struct.
GroupParams validate_params(Family family, std::int64_t p, std::int64_t a,
                            std::optional<std::int64_t> b,
                            std::optional<std::int64_t> c, bool strict);

// Power-commutator data for the normal form x^i y^j z^k u^m v^n with
// 0 <= i < bounds[0], ..., 0 <= n < bounds[4].
//
//   x^bounds[0] = z^tail_x[0] u^tail_x[1] v^tail_x[2]
//   y^bounds[1] = z^tail_y[0] u^tail_y[1] v^tail_y[2]
//   z^bounds[2] = u^tail_z[0] v^tail_z[1]
//   u^bounds[3] = v^bounds[4] = 1
//
// u and v are central; [z,x] = u, [z,y] = v; z, u, v commute pairwise.
struct PcPresentation {
  std::int64_t p = 2;
  std::array<std::int64_t, 5> bounds{1, 1, 1, 1, 1};
  std::array<std::int64_t, 3> tail_x{0, 0, 0};
  std::array<std::int64_t, 3> tail_y{0, 0, 0};
  std::array<std::int64_t, 2> tail_z{0, 0};
  int n_total = 0;  // log_p of the order
  bool consistent = false;

  bool same_relations(const PcPresentation& o) const {
    return p == o.p && bounds == o.bounds && tail_x == o.tail_x &&
           tail_y == o.tail_y && tail_z == o.tail_z;
  }
};

PcPresentation build_presentation(const GroupParams& params);

// Product of the exponent bounds, as an exact integer.
BigInt expected_order(const GroupParams& params);

// Hall's upper bound for |Aut(G)| of a d-generator group of order p^n:
//   U(p; n, d) = p^{d(n-d)} * prod_{t=0}^{d-1} (p^d - p^t).
BigInt hall_bound(std::int64_t p, std::int64_t n, std::int64_t d);

}  // namespace maxaut
