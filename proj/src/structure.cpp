#include "maxaut/structure.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "maxaut/arith.hpp"
#include "maxaut/errors.hpp"

namespace maxaut {

bool SubgroupSet::contains(const Element& g) const {
  std::uint64_t idx = index_of(pres, g);
  return std::binary_search(indices.begin(), indices.end(), idx);
}

SubgroupSet subgroup_closure(const PcPresentation& P,
                             std::vector<Element> gens,
                             std::uint64_t max_order) {
  std::uint64_t N = group_order_u64(P);
  if (N > max_order)
    throw ResourceBudgetExceeded(
        "subgroup_closure: group order exceeds the enumeration budget");

  std::unordered_set<std::uint64_t> seen;
  std::deque<Element> frontier;
  Element e{};
  seen.insert(index_of(P, e));
  frontier.push_back(e);

  std::vector<Element> muls = gens;
  for (const Element& g : gens) muls.push_back(inverse(P, g));

  std::vector<Element> members;
  members.push_back(e);
  while (!frontier.empty()) {
    Element w = frontier.front();
    frontier.pop_front();
    for (const Element& s : muls) {
      Element t = multiply(P, w, s);
      if (seen.insert(index_of(P, t)).second) {
        members.push_back(t);
        frontier.push_back(t);
      }
    }
  }

  SubgroupSet S;
  S.pres = P;
  S.generators = std::move(gens);
  S.indices.reserve(members.size());
  for (const Element& g : members) S.indices.push_back(index_of(P, g));
  std::sort(S.indices.begin(), S.indices.end());
  S.members.reserve(members.size());
  for (std::uint64_t idx : S.indices) S.members.push_back(element_at(P, idx));
  if (N % S.members.size() != 0)
    throw Error("subgroup_closure: size violates Lagrange");
  return S;
}

std::vector<SubgroupSet> lower_central_series(const PcPresentation& P,
                                              std::uint64_t max_order) {
  std::uint64_t N = group_order_u64(P);
  if (N > max_order)
    throw ResourceBudgetExceeded(
        "lower_central_series: group order exceeds the enumeration budget");

  const Element x = gen_x(P), y = gen_y(P);

  std::vector<SubgroupSet> series;
  {
    SubgroupSet g1;
    g1.pres = P;
    g1.generators = {x, y};
    g1.members.reserve(N);
    g1.indices.reserve(N);
    for (std::uint64_t t = 0; t < N; ++t) {
      g1.indices.push_back(t);
      g1.members.push_back(element_at(P, t));
    }
    series.push_back(std::move(g1));
  }

  while (series.back().size() > 1) {
    const SubgroupSet& cur = series.back();
    std::unordered_set<std::uint64_t> comm_idx;
    std::vector<Element> comms;
    for (const Element& g : cur.members) {
      for (const Element& t : {x, y}) {
        Element c = commutator(P, g, t);
        if (comm_idx.insert(index_of(P, c)).second) comms.push_back(c);
      }
    }
    SubgroupSet next = subgroup_closure(P, std::move(comms), max_order);
    if (next.size() >= cur.size())
      throw Error("lower_central_series: series does not descend");
    series.push_back(std::move(next));
  }
  return series;
}

namespace {

// Cyclic divisors from N_k = #{g : g^{p^k} = e}.  If the type is
// (p^{d_1}, ..., p^{d_r}) then log_p N_k - log_p N_{k-1} counts the d_i >= k;
// the conjugate of that profile is the divisor multiset.
AbelianType type_from_order_counts(const std::vector<std::uint64_t>& nk,
                                   std::int64_t p) {
  std::vector<int> f;  // f[k] = log_p nk[k]
  for (std::uint64_t v : nk) {
    int e = 0;
    std::uint64_t t = v;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (t != 1) throw Error("abelian_type: subgroup size not a p-power");
    f.push_back(e);
  }
  AbelianType type;
  for (std::size_t k = f.size(); k-- > 1;) {
    int ck = f[k] - f[k - 1];
    int ck1 = (k + 1 < f.size()) ? f[k + 1] - f[k] : 0;
    for (int t = 0; t < ck - ck1; ++t)
      type.push_back(checked_pow(p, static_cast<std::int64_t>(k)));
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace

AbelianType abelian_type(const SubgroupSet& S) {
  const PcPresentation& P = S.pres;
  for (std::size_t i = 0; i < S.generators.size(); ++i)
    for (std::size_t j = i + 1; j < S.generators.size(); ++j)
      if (!is_identity(commutator(P, S.generators[i], S.generators[j])))
        throw NotAbelian("abelian_type: generators do not commute");

  if (S.size() == 1) return {};

  std::vector<std::uint64_t> nk;
  nk.push_back(1);  // N_0 = #{g : g = e}
  std::int64_t pk = 1;
  for (;;) {
    pk = checked_mul(pk, P.p);
    std::uint64_t cnt = 0;
    for (const Element& g : S.members)
      if (is_identity(power(P, g, pk))) ++cnt;
    nk.push_back(cnt);
    if (cnt == S.size()) break;
  }
  AbelianType type = type_from_order_counts(nk, P.p);
  std::int64_t prod = 1;
  for (std::int64_t d : type) prod = checked_mul(prod, d);
  if (static_cast<std::uint64_t>(prod) != S.size())
    throw Error("abelian_type: divisor product mismatch");
  return type;
}

AbelianType abelianization_type(const PcPresentation& P) {
  // cosets of G' are exactly the (i,j) pairs; r^{p^k} lies in G' iff its
  // normalized x,y exponents vanish
  std::uint64_t reps =
      static_cast<std::uint64_t>(P.bounds[0]) * P.bounds[1];
  if (reps == 1) return {};
  std::vector<std::uint64_t> nk;
  nk.push_back(1);
  std::int64_t pk = 1;
  for (;;) {
    pk = checked_mul(pk, P.p);
    std::uint64_t cnt = 0;
    for (std::int64_t i = 0; i < P.bounds[0]; ++i)
      for (std::int64_t j = 0; j < P.bounds[1]; ++j) {
        Element r = power(P, normalize(P, {i, j, 0, 0, 0}), pk);
        if (r.i == 0 && r.j == 0) ++cnt;
      }
    nk.push_back(cnt);
    if (cnt == reps) break;
  }
  return type_from_order_counts(nk, P.p);
}

SubgroupSet frattini_subgroup(const PcPresentation& P,
                              std::uint64_t max_order) {
  std::vector<Element> gens = {power(P, gen_x(P), P.p),
                               power(P, gen_y(P), P.p), gen_z(P), gen_u(P),
                               gen_v(P)};
  SubgroupSet S = subgroup_closure(P, std::move(gens), max_order);
  std::uint64_t index = group_order_u64(P) / S.size();
  if (index != static_cast<std::uint64_t>(checked_mul(P.p, P.p)))
    throw Error("frattini_subgroup: index is not p^2");
  return S;
}

namespace {

AbelianType repeat(std::int64_t v, int times) {
  return AbelianType(static_cast<std::size_t>(times), v);
}

}  // namespace

Table2Report verify_table2(const GroupParams& params, std::uint64_t max_order) {
  if (!family_is_class3(params.family))
    throw PreconditionViolated("verify_table2: class-three families only");
  if (!params.strict)
    throw PreconditionViolated("verify_table2: strict parameters only");

  PcPresentation P = build_presentation(params);
  const std::int64_t p = params.p;
  const std::int64_t a = params.a, c = params.c.value_or(0);

  Table2Report rep;
  rep.params = params;

  SubgroupSet g3 = subgroup_closure(P, {gen_u(P), gen_v(P)}, max_order);
  SubgroupSet gprime =
      subgroup_closure(P, {gen_z(P), gen_u(P), gen_v(P)}, max_order);
  rep.g3 = abelian_type(g3);
  rep.gprime = abelian_type(gprime);
  rep.ab = abelianization_type(P);

  rep.g3_expected = repeat(checked_pow(p, c), 2);
  switch (params.family) {
    case Family::Class3I:
    case Family::Class3II:
    case Family::Class3III:
    case Family::Class3IV: {
      std::int64_t b = params.b.value_or(0);
      rep.gprime_expected = {checked_pow(p, b), checked_pow(p, c),
                             checked_pow(p, c)};
      rep.ab_expected = repeat(checked_pow(p, a), 2);
      break;
    }
    case Family::Class3V:
    case Family::Class3VI:
      rep.gprime_expected = {checked_pow(p, a - 1), checked_pow(p, c),
                             checked_pow(p, c)};
      rep.ab_expected = repeat(checked_pow(p, a - 1), 2);
      break;
    default:
      break;
  }
  std::sort(rep.gprime_expected.rbegin(), rep.gprime_expected.rend());

  rep.match = rep.g3 == rep.g3_expected && rep.gprime == rep.gprime_expected &&
              rep.ab == rep.ab_expected;
  return rep;
}

}  // namespace maxaut
