#include "maxaut/oracle.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <unordered_set>

#include "maxaut/errors.hpp"
#include "maxaut/pcgroup.hpp"

namespace maxaut {

std::uint32_t CayleyGroup::pow(std::uint32_t g, std::uint64_t t) const {
  std::uint32_t acc = e, b = g;
  while (t > 0) {
    if (t & 1) acc = mul(acc, b);
    t >>= 1;
    if (t > 0) b = mul(b, b);
  }
  return acc;
}

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

std::vector<std::uint32_t> closure(const CayleyGroup& C,
                                   std::vector<std::uint32_t> seeds) {
  std::vector<bool> seen(C.n, false);
  std::deque<std::uint32_t> frontier;
  seen[C.e] = true;
  frontier.push_back(C.e);
  std::vector<std::uint32_t> members{C.e};
  // finite group: closure under right multiplication by the seeds is the
  // generated subgroup
  while (!frontier.empty()) {
    std::uint32_t w = frontier.front();
    frontier.pop_front();
    for (std::uint32_t s : seeds) {
      std::uint32_t t = C.mul(w, s);
      if (!seen[t]) {
        seen[t] = true;
        members.push_back(t);
        frontier.push_back(t);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Propagates gen[t] -> imgs[t] over the whole table by breadth-first word
// images; returns false on any inconsistent edge.
bool propagate(const CayleyGroup& C, const CayleyGroup& target,
               const std::vector<std::uint32_t>& imgs,
               std::vector<std::uint32_t>& phi,
               std::vector<std::uint32_t>& bfs) {
  phi.assign(C.n, kUnset);
  phi[C.e] = target.e;
  bfs.clear();
  bfs.push_back(C.e);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    std::uint32_t w = bfs[head];
    for (std::size_t t = 0; t < C.gens.size(); ++t) {
      std::uint32_t wn = C.mul(w, C.gens[t]);
      std::uint32_t im = target.mul(phi[w], imgs[t]);
      if (phi[wn] == kUnset) {
        phi[wn] = im;
        bfs.push_back(wn);
      } else if (phi[wn] != im) {
        return false;
      }
    }
  }
  return bfs.size() == C.n;
}

bool is_bijection(const std::vector<std::uint32_t>& phi, std::size_t n) {
  std::vector<bool> hit(n, false);
  for (std::uint32_t v : phi) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

// Minimal generating tuple: greedy over the Frattini quotient, each pick
// grows <picks, Phi> by one dimension.
std::vector<std::uint32_t> minimal_generators(const CayleyGroup& C,
                                              std::int64_t p) {
  std::vector<std::uint32_t> phi_seeds;
  for (std::uint32_t g = 0; g < C.n; ++g)
    phi_seeds.push_back(C.pow(g, static_cast<std::uint64_t>(p)));
  for (std::uint32_t g = 0; g < C.n; ++g)
    for (std::uint32_t h = 0; h < C.n; ++h)
      phi_seeds.push_back(
          C.mul(C.mul(C.inv[g], C.inv[h]), C.mul(g, h)));
  std::sort(phi_seeds.begin(), phi_seeds.end());
  phi_seeds.erase(std::unique(phi_seeds.begin(), phi_seeds.end()),
                  phi_seeds.end());

  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> have = closure(C, phi_seeds);
  while (have.size() < C.n) {
    std::uint32_t pick = kUnset;
    for (std::uint32_t g = 0; g < C.n; ++g)
      if (!std::binary_search(have.begin(), have.end(), g)) {
        pick = g;
        break;
      }
    gens.push_back(pick);
    std::vector<std::uint32_t> seeds = phi_seeds;
    seeds.insert(seeds.end(), gens.begin(), gens.end());
    have = closure(C, seeds);
  }
  return gens;
}

CayleyGroup subgroup_table(const CayleyGroup& C,
                           const std::vector<std::uint32_t>& members,
                           std::int64_t p) {
  std::vector<std::uint32_t> local(C.n, kUnset);
  for (std::size_t t = 0; t < members.size(); ++t)
    local[members[t]] = static_cast<std::uint32_t>(t);
  std::size_t n = members.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t prod = C.mul(members[a], members[b]);
      if (local[prod] == kUnset)
        throw Error("subgroup_table: member set not closed");
      table[a * n + b] = local[prod];
    }
  // generators: minimal set computed inside the subgroup
  CayleyGroup sub;
  sub.n = n;
  sub.table = std::move(table);
  sub.e = local[C.e];
  sub.inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (sub.table[a * n + b] == sub.e) {
        sub.inv[a] = static_cast<std::uint32_t>(b);
        break;
      }
  }
  sub.elem_order.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t w = static_cast<std::uint32_t>(a);
    std::int64_t ord = 1;
    while (w != sub.e) {
      w = sub.table[w * n + a];
      ++ord;
    }
    sub.elem_order[a] = ord;
  }
  sub.gens = minimal_generators(sub, p);
  if (sub.gens.empty())
    sub.gens.push_back(sub.e);  // trivial subgroup corner
  return sub;
}

}  // namespace

CayleyGroup make_cayley(std::size_t n, std::vector<std::uint32_t> table,
                        std::vector<std::uint32_t> gens) {
  if (n == 0 || table.size() != n * n)
    throw InvalidArgs("make_cayley: bad table dimensions");

  CayleyGroup C;
  C.n = n;
  C.table = std::move(table);
  C.gens = std::move(gens);

  // Latin square
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t v = C.table[a * n + b];
      if (v >= n || seen[v]) throw Error("make_cayley: row is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t a = 0; a < n; ++a) {
      std::uint32_t v = C.table[a * n + b];
      if (seen[v]) throw Error("make_cayley: column is not a permutation");
      seen[v] = true;
    }
  }

  // two-sided identity
  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a)
      ok = C.table[e * n + a] == a && C.table[a * n + e] == a;
    if (ok) {
      C.e = e;
      found = true;
    }
  }
  if (!found) throw Error("make_cayley: no two-sided identity");

  // full associativity for small tables
  if (n <= 512) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        std::uint32_t ab = C.mul(a, b);
        for (std::uint32_t c = 0; c < n; ++c)
          if (C.mul(ab, c) != C.mul(a, C.mul(b, c)))
            throw Error("make_cayley: associativity failure");
      }
  }

  C.inv.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool got = false;
    for (std::uint32_t b = 0; b < n; ++b)
      if (C.mul(a, b) == C.e && C.mul(b, a) == C.e) {
        C.inv[a] = b;
        got = true;
        break;
      }
    if (!got) throw Error("make_cayley: missing inverse");
  }

  C.elem_order.assign(n, 1);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t w = a;
    std::int64_t ord = 1;
    while (w != C.e) {
      w = C.mul(w, a);
      ++ord;
      if (ord > static_cast<std::int64_t>(n))
        throw Error("make_cayley: order computation diverged");
    }
    C.elem_order[a] = ord;
  }

  if (!C.gens.empty()) {
    for (std::uint32_t g : C.gens)
      if (g >= n) throw InvalidArgs("make_cayley: generator out of range");
    if (closure(C, C.gens).size() != n)
      throw Error("make_cayley: designated generators do not generate");
  }
  return C;
}

CayleyGroup to_cayley(const PcPresentation& P, std::uint64_t max_order) {
  if (max_order > 2187)
    throw InvalidArgs("to_cayley: budget cap is 2187");
  std::uint64_t N = group_order_u64(P);
  if (N > max_order)
    throw ResourceBudgetExceeded(
        "to_cayley: group order exceeds the table budget");

  std::size_t n = static_cast<std::size_t>(N);
  std::vector<Element> elems;
  elems.reserve(n);
  for (const Element& g : elements(P)) elems.push_back(g);

  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<std::uint32_t>(
          index_of(P, multiply(P, elems[a], elems[b])));

  std::vector<std::uint32_t> gens = {
      static_cast<std::uint32_t>(index_of(P, gen_x(P))),
      static_cast<std::uint32_t>(index_of(P, gen_y(P)))};
  if (gens[0] == gens[1]) gens.pop_back();  // degenerate small cases
  return make_cayley(n, std::move(table), std::move(gens));
}

BigInt brute_automorphisms(const CayleyGroup& C) {
  if (C.gens.empty()) throw InvalidArgs("brute_automorphisms: no generators");
  std::vector<std::uint32_t> phi, bfs;
  std::size_t d = C.gens.size();

  // candidate images must match generator orders
  std::vector<std::vector<std::uint32_t>> pools(d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::uint32_t g = 0; g < C.n; ++g)
      if (C.elem_order[g] == C.elem_order[C.gens[t]]) pools[t].push_back(g);

  BigInt count = 0;
  std::vector<std::uint32_t> imgs(d, 0);
  std::vector<std::size_t> pos(d, 0);
  for (;;) {
    for (std::size_t t = 0; t < d; ++t) imgs[t] = pools[t][pos[t]];
    if (propagate(C, C, imgs, phi, bfs) && is_bijection(phi, C.n)) ++count;
    std::size_t t = d;
    while (t-- > 0) {
      if (++pos[t] < pools[t].size()) break;
      pos[t] = 0;
      if (t == 0) return count;
    }
  }
}

bool brute_isomorphic(const CayleyGroup& A, const CayleyGroup& B) {
  if (A.n != B.n) return false;
  if (A.gens.empty()) throw InvalidArgs("brute_isomorphic: no generators");
  {
    // order profiles must agree
    std::vector<std::int64_t> oa = A.elem_order, ob = B.elem_order;
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return false;
  }

  std::size_t d = A.gens.size();
  std::vector<std::vector<std::uint32_t>> pools(d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::uint32_t g = 0; g < B.n; ++g)
      if (B.elem_order[g] == A.elem_order[A.gens[t]]) pools[t].push_back(g);
  for (const auto& pool : pools)
    if (pool.empty()) return false;

  std::vector<std::uint32_t> phi, bfs;
  std::vector<std::uint32_t> imgs(d, 0);
  std::vector<std::size_t> pos(d, 0);
  for (;;) {
    for (std::size_t t = 0; t < d; ++t) imgs[t] = pools[t][pos[t]];
    if (propagate(A, B, imgs, phi, bfs) && is_bijection(phi, B.n)) return true;
    std::size_t t = d;
    while (t-- > 0) {
      if (++pos[t] < pools[t].size()) break;
      pos[t] = 0;
      if (t == 0) return false;
    }
  }
}

MiReport mi_check(const CayleyGroup& C, std::int64_t p) {
  if (C.gens.size() != 2)
    throw PreconditionViolated("mi_check: needs two designated generators");

  MiReport rep;

  // Frattini subgroup: p-th powers and commutators
  std::vector<std::uint32_t> seeds;
  for (std::uint32_t g = 0; g < C.n; ++g)
    seeds.push_back(C.pow(g, static_cast<std::uint64_t>(p)));
  for (std::uint32_t g = 0; g < C.n; ++g)
    for (std::uint32_t h = 0; h < C.n; ++h)
      seeds.push_back(C.mul(C.mul(C.inv[g], C.inv[h]), C.mul(g, h)));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::vector<std::uint32_t> frat = closure(C, seeds);
  rep.frattini_size = frat.size();
  if (frat.size() * p * p != C.n)
    throw Error("mi_check: Frattini index is not p^2");

  // index-p preimages over the Frattini quotient: <Phi, x y^t> and <Phi, y>
  std::uint32_t x = C.gens[0], y = C.gens[1];
  std::vector<std::vector<std::uint32_t>> maximals;
  for (std::int64_t t = 0; t < p; ++t) {
    std::uint32_t w = C.mul(x, C.pow(y, static_cast<std::uint64_t>(t)));
    std::vector<std::uint32_t> s = frat;
    s.push_back(w);
    maximals.push_back(closure(C, s));
  }
  {
    std::vector<std::uint32_t> s = frat;
    s.push_back(y);
    maximals.push_back(closure(C, s));
  }

  for (const auto& M : maximals) {
    if (M.size() * p != C.n) throw Error("mi_check: maximal subgroup index != p");
    rep.sizes.push_back(M.size());
  }
  for (std::size_t a = 0; a < maximals.size(); ++a)
    for (std::size_t b = a + 1; b < maximals.size(); ++b)
      if (maximals[a] == maximals[b])
        throw Error("mi_check: duplicate maximal subgroup");

  std::vector<CayleyGroup> subs;
  subs.reserve(maximals.size());
  for (const auto& M : maximals) subs.push_back(subgroup_table(C, M, p));

  // isomorphism is transitive, so a consecutive chain settles all pairs
  rep.all_isomorphic = true;
  for (std::size_t a = 0; a + 1 < subs.size() && rep.all_isomorphic; ++a)
    if (!brute_isomorphic(subs[a], subs[a + 1])) rep.all_isomorphic = false;
  return rep;
}

void dump_table(const CayleyGroup& C, std::ostream& os) {
  os << C.n << "\n";
  for (std::size_t a = 0; a < C.n; ++a) {
    for (std::size_t b = 0; b < C.n; ++b) {
      if (b) os << ' ';
      os << C.table[a * C.n + b];
    }
    os << "\n";
  }
}

}  // namespace maxaut
