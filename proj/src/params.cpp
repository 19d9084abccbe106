#include "maxaut/params.hpp"

#include <sstream>

#include "maxaut/arith.hpp"
#include "maxaut/errors.hpp"

namespace maxaut {

namespace {

// Largest exponent base allowed anywhere in the normal-form arithmetic:
// the collection law multiplies binomials of exponents, so p^(e+1) <= 2^31
// keeps every intermediate inside checked int64 range.
constexpr std::int64_t kMaxBoundBase = std::int64_t{1} << 31;

[[noreturn]] void violated(const std::string& msg) {
  throw ConditionViolated(msg);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::AbelianHomocyclic: return "abelian-homocyclic";
    case Family::Class2I: return "class2-i";
    case Family::Class2II: return "class2-ii";
    case Family::Class2III: return "class2-iii";
    case Family::Class3I: return "class3-i";
    case Family::Class3II: return "class3-ii";
    case Family::Class3III: return "class3-iii";
    case Family::Class3IV: return "class3-iv";
    case Family::Class3V: return "class3-v";
    case Family::Class3VI: return "class3-vi";
  }
  throw InvalidArgs("unknown family enum value");
}

Family family_from_name(const std::string& name) {
  for (Family f : kAllFamilies)
    if (name == family_name(f)) return f;
  throw InvalidArgs("unknown family name: " + name);
}

bool family_uses_b(Family f) {
  switch (f) {
    case Family::Class2I:
    case Family::Class2II:
    case Family::Class3I:
    case Family::Class3II:
    case Family::Class3III:
    case Family::Class3IV:
      return true;
    default:
      return false;
  }
}

bool family_uses_c(Family f) {
  switch (f) {
    case Family::Class3I:
    case Family::Class3II:
    case Family::Class3III:
    case Family::Class3IV:
    case Family::Class3V:
    case Family::Class3VI:
      return true;
    default:
      return false;
  }
}

bool family_is_class3(Family f) { return family_uses_c(f); }

bool family_is_class2(Family f) {
  return f == Family::Class2I || f == Family::Class2II ||
         f == Family::Class2III;
}

GroupParams validate_params(Family family, std::int64_t p, std::int64_t a,
                            std::optional<std::int64_t> b,
                            std::optional<std::int64_t> c, bool strict) {
  if (!is_prime(p)) {
    std::ostringstream os;
    os << "p = " << p << " is not prime";
    throw NotPrime(os.str());
  }
  if (a < 1) violated("a must be >= 1");
  if (family_uses_b(family) && !b)
    throw MissingParameter(std::string(family_name(family)) + " requires b");
  if (family_uses_c(family) && !c)
    throw MissingParameter(std::string(family_name(family)) + " requires c");

  GroupParams out;
  out.family = family;
  out.p = p;
  out.a = a;
  out.strict = strict;
  if (family_uses_b(family)) out.b = b;
  if (family_uses_c(family)) out.c = c;

  if (out.b && *out.b < 1) violated("b must be >= 1");
  if (out.c && *out.c < 1) violated("c must be >= 1");

  // Representability floor, needed even permissively: these families put
  // p^(a-2) into a tail exponent.
  if ((family == Family::Class2III || family == Family::Class3V ||
       family == Family::Class3VI) &&
      a < 2)
    violated(std::string(family_name(family)) + " requires a >= 2");

  std::int64_t emax = a;
  if (out.b) emax = std::max(emax, *out.b);
  if (out.c) emax = std::max(emax, *out.c);
  // p^(emax+1) <= 2^31, checked without overflow
  std::int64_t cap = kMaxBoundBase;
  for (std::int64_t t = 0; t <= emax; ++t) {
    cap /= p;
    if (cap == 0) violated("parameters exceed the arithmetic bound p^(a+1) <= 2^31");
  }

  if (!strict) return out;

  const std::int64_t bb = out.b.value_or(0), cc = out.c.value_or(0);
  switch (family) {
    case Family::AbelianHomocyclic:
      break;
    case Family::Class2I:
      if (p == 2) violated("class2-i requires p odd");
      if (!(1 <= bb && bb <= a)) violated("class2-i requires 1 <= b <= a");
      break;
    case Family::Class2II:
      if (p != 2) violated("class2-ii requires p = 2");
      if (!(1 <= bb && bb <= a - 1)) violated("class2-ii requires 1 <= b <= a-1");
      break;
    case Family::Class2III:
      if (p != 2) violated("class2-iii requires p = 2");
      if (!(a >= 2)) violated("class2-iii requires a >= 2");
      break;
    case Family::Class3I:
      if (p != 3) violated("class3-i requires p = 3");
      if (!((1 <= cc && cc < bb && bb == a) ||
            (1 <= cc && cc <= bb && bb <= a - 1)))
        violated("class3-i requires 1 <= c < b = a or 1 <= c <= b <= a-1");
      break;
    case Family::Class3II:
      if (p <= 3) violated("class3-ii requires p > 3");
      if (!(1 <= cc && cc <= bb && bb <= a))
        violated("class3-ii requires 1 <= c <= b <= a");
      break;
    case Family::Class3III:
      if (p != 2) violated("class3-iii requires p = 2");
      if (!(1 <= cc && cc <= bb && bb <= a - 1))
        violated("class3-iii requires 1 <= c <= b <= a-1");
      break;
    case Family::Class3IV:
      if (p != 2) violated("class3-iv requires p = 2");
      if (!(1 <= cc && cc <= bb && bb <= a - 1))
        violated("class3-iv requires 1 <= c <= b <= a-1");
      break;
    case Family::Class3V:
      if (p != 2) violated("class3-v requires p = 2");
      if (!(1 <= cc && cc <= a - 2)) violated("class3-v requires 1 <= c <= a-2");
      break;
    case Family::Class3VI:
      if (p != 2) violated("class3-vi requires p = 2");
      if (!(1 <= cc && cc <= a - 2)) violated("class3-vi requires 1 <= c <= a-2");
      break;
  }
  return out;
}

PcPresentation build_presentation(const GroupParams& params) {
  const std::int64_t p = params.p;
  const std::int64_t a = params.a;
  const std::int64_t b = params.b.value_or(0);
  const std::int64_t c = params.c.value_or(0);
  auto pw = [&](std::int64_t e) { return checked_pow(p, e); };

  PcPresentation P;
  P.p = p;
  switch (params.family) {
    case Family::AbelianHomocyclic:
      P.bounds = {pw(a), pw(a), 1, 1, 1};
      break;
    case Family::Class2I:
    case Family::Class2II:
      P.bounds = {pw(a), pw(a), pw(b), 1, 1};
      break;
    case Family::Class2III:
      P.bounds = {pw(a - 1), pw(a - 1), pw(a - 1), 1, 1};
      P.tail_x = {pw(a - 2), 0, 0};
      P.tail_y = {pw(a - 2), 0, 0};
      break;
    case Family::Class3I:
    case Family::Class3II:
    case Family::Class3III:
      P.bounds = {pw(a), pw(a), pw(b), pw(c), pw(c)};
      break;
    case Family::Class3IV:
      P.bounds = {pw(a), pw(a), pw(b), pw(c), pw(c)};
      P.tail_x = {0, pw(c - 1), 0};
      P.tail_y = {0, 0, pw(c - 1)};
      break;
    case Family::Class3V:
      P.bounds = {pw(a - 1), pw(a - 1), pw(a - 1), pw(c), pw(c)};
      P.tail_x = {pw(a - 2), 0, 0};
      P.tail_y = {pw(a - 2), 0, 0};
      break;
    case Family::Class3VI:
      P.bounds = {pw(a - 1), pw(a - 1), pw(a - 1), pw(c), pw(c)};
      P.tail_x = {pw(a - 2), pw(c - 1), 0};
      P.tail_y = {pw(a - 2), 0, pw(c - 1)};
      break;
  }

  int n = 0;
  for (std::int64_t bound : P.bounds) {
    std::int64_t t = bound;
    while (t > 1) {
      t /= p;
      ++n;
    }
  }
  P.n_total = n;
  return P;
}

BigInt expected_order(const GroupParams& params) {
  PcPresentation P = build_presentation(params);
  BigInt r = 1;
  for (std::int64_t bound : P.bounds) r *= bound;
  return r;
}

BigInt hall_bound(std::int64_t p, std::int64_t n, std::int64_t d) {
  if (d < 1) throw InvalidArgs("hall_bound: d must be >= 1");
  if (n < d) throw InvalidArgs("hall_bound: requires n >= d");
  if (!is_prime(p)) throw NotPrime("hall_bound: p must be prime");
  BigInt r = big_pow(p, static_cast<std::uint64_t>(d * (n - d)));
  BigInt pd = big_pow(p, static_cast<std::uint64_t>(d));
  BigInt pt = 1;
  for (std::int64_t t = 0; t < d; ++t) {
    r *= pd - pt;
    pt *= p;
  }
  return r;
}

}  // namespace maxaut
