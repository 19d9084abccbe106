#include "maxaut/pcgroup.hpp"

#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "maxaut/arith.hpp"
#include "maxaut/errors.hpp"

namespace maxaut {

Element normalize(const PcPresentation& P, std::array<std::int64_t, 5> raw) {
  auto& [i, j, k, m, n] = raw;
  std::int64_t q;

  q = floor_div(i, P.bounds[0]);
  i -= q * P.bounds[0];
  if (q != 0) {
    k = checked_add(k, checked_mul(q, P.tail_x[0]));
    m = checked_add(m, checked_mul(q, P.tail_x[1]));
    n = checked_add(n, checked_mul(q, P.tail_x[2]));
  }

  q = floor_div(j, P.bounds[1]);
  j -= q * P.bounds[1];
  if (q != 0) {
    k = checked_add(k, checked_mul(q, P.tail_y[0]));
    m = checked_add(m, checked_mul(q, P.tail_y[1]));
    n = checked_add(n, checked_mul(q, P.tail_y[2]));
  }

  q = floor_div(k, P.bounds[2]);
  k -= q * P.bounds[2];
  if (q != 0) {
    m = checked_add(m, checked_mul(q, P.tail_z[0]));
    n = checked_add(n, checked_mul(q, P.tail_z[1]));
  }

  m = floor_mod(m, P.bounds[3]);
  n = floor_mod(n, P.bounds[4]);
  return Element{i, j, k, m, n};
}

Element multiply(const PcPresentation& P, const Element& g, const Element& h) {
  std::int64_t i = g.i + h.i;
  std::int64_t j = g.j + h.j;
  std::int64_t k = checked_sub(g.k + h.k, checked_mul(h.i, g.j));
  std::int64_t m = checked_add(
      g.m + h.m, checked_sub(checked_mul(g.k, h.i),
                             checked_mul(g.j, choose2(h.i))));
  std::int64_t n = checked_add(
      g.n + h.n,
      checked_sub(checked_mul(g.k, h.j),
                  checked_add(checked_mul(h.i, choose2(g.j)),
                              checked_mul(checked_mul(h.i, g.j), h.j))));
  return normalize(P, {i, j, k, m, n});
}

Element inverse(const PcPresentation& P, const Element& g) {
  // Back-substitution through the collection law, then one normalize.
  std::int64_t i2 = -g.i;
  std::int64_t j2 = -g.j;
  std::int64_t k2 = checked_sub(-g.k, checked_mul(g.i, g.j));
  std::int64_t m2 = checked_add(
      checked_add(-g.m, checked_mul(g.k, g.i)),
      checked_mul(g.j, choose2(i2)));
  std::int64_t n2 = checked_add(
      checked_sub(checked_add(-g.n, checked_mul(g.k, g.j)),
                  checked_mul(g.i, choose2(g.j))),
      checked_mul(checked_mul(g.i, g.j), g.j));
  return normalize(P, {i2, j2, k2, m2, n2});
}

Element power(const PcPresentation& P, Element g, std::int64_t t) {
  if (t < 0) {
    g = inverse(P, g);
    t = -t;
  }
  Element acc{};
  while (t > 0) {
    if (t & 1) acc = multiply(P, acc, g);
    t >>= 1;
    if (t > 0) g = multiply(P, g, g);
  }
  return acc;
}

Element commutator(const PcPresentation& P, const Element& g,
                   const Element& h) {
  Element r = multiply(P, inverse(P, g), inverse(P, h));
  r = multiply(P, r, g);
  return multiply(P, r, h);
}

std::int64_t element_order(const PcPresentation& P, const Element& g) {
  std::int64_t ord = 1;
  Element h = g;
  int guard = P.n_total + 2;
  while (!is_identity(h)) {
    if (--guard < 0)
      throw Error("element_order: no p-power order (inconsistent data?)");
    h = power(P, h, P.p);
    ord = checked_mul(ord, P.p);
  }
  return ord;
}

Element gen_x(const PcPresentation& P) { return normalize(P, {1, 0, 0, 0, 0}); }
Element gen_y(const PcPresentation& P) { return normalize(P, {0, 1, 0, 0, 0}); }
Element gen_z(const PcPresentation& P) { return normalize(P, {0, 0, 1, 0, 0}); }
Element gen_u(const PcPresentation& P) { return normalize(P, {0, 0, 0, 1, 0}); }
Element gen_v(const PcPresentation& P) { return normalize(P, {0, 0, 0, 0, 1}); }

std::uint64_t group_order_u64(const PcPresentation& P) {
  std::int64_t n = 1;
  for (std::int64_t b : P.bounds) n = checked_mul(n, b);
  return static_cast<std::uint64_t>(n);
}

std::uint64_t index_of(const PcPresentation& P, const Element& g) {
  std::uint64_t idx = static_cast<std::uint64_t>(g.i);
  idx = idx * P.bounds[1] + g.j;
  idx = idx * P.bounds[2] + g.k;
  idx = idx * P.bounds[3] + g.m;
  idx = idx * P.bounds[4] + g.n;
  return idx;
}

Element element_at(const PcPresentation& P, std::uint64_t idx) {
  Element g;
  g.n = static_cast<std::int64_t>(idx % P.bounds[4]);
  idx /= P.bounds[4];
  g.m = static_cast<std::int64_t>(idx % P.bounds[3]);
  idx /= P.bounds[3];
  g.k = static_cast<std::int64_t>(idx % P.bounds[2]);
  idx /= P.bounds[2];
  g.j = static_cast<std::int64_t>(idx % P.bounds[1]);
  idx /= P.bounds[1];
  g.i = static_cast<std::int64_t>(idx);
  if (g.i >= P.bounds[0])
    throw InvalidArgs("element_at: index out of range");
  return g;
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  ++idx_;
  if (idx_ >= total_) return *this;
  // odometer step, v fastest
  if (++cur_.n < P_->bounds[4]) return *this;
  cur_.n = 0;
  if (++cur_.m < P_->bounds[3]) return *this;
  cur_.m = 0;
  if (++cur_.k < P_->bounds[2]) return *this;
  cur_.k = 0;
  if (++cur_.j < P_->bounds[1]) return *this;
  cur_.j = 0;
  ++cur_.i;
  return *this;
}

namespace {

bool is_p_power(std::int64_t v, std::int64_t p) {
  if (v < 1) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

struct TripleCheck {
  bool ok = true;
  std::array<Element, 3> witness{};
};

// (g*h)*w vs g*(h*w)
bool assoc_ok(const PcPresentation& P, const Element& g, const Element& h,
              const Element& w) {
  return multiply(P, multiply(P, g, h), w) == multiply(P, g, multiply(P, h, w));
}

}  // namespace

ConsistencyResult check_consistency(PcPresentation& P,
                                    const ConsistencyOptions& opt) {
  ConsistencyResult res;
  P.consistent = false;

  // structural sanity
  for (std::int64_t b : P.bounds)
    if (!is_p_power(b, P.p)) {
      res.detail = "bound is not a power of p";
      return res;
    }
  auto tail_in_range = [&](std::int64_t t, int slot) {
    return 0 <= t && t < P.bounds[slot];
  };
  if (!tail_in_range(P.tail_x[0], 2) || !tail_in_range(P.tail_x[1], 3) ||
      !tail_in_range(P.tail_x[2], 4) || !tail_in_range(P.tail_y[0], 2) ||
      !tail_in_range(P.tail_y[1], 3) || !tail_in_range(P.tail_y[2], 4) ||
      !tail_in_range(P.tail_z[0], 3) || !tail_in_range(P.tail_z[1], 4)) {
    res.detail = "tail exponent outside its bound";
    return res;
  }

  std::uint64_t N = group_order_u64(P);
  if (N > opt.max_order)
    throw ResourceBudgetExceeded(
        "check_consistency: group order exceeds the enumeration budget");

  const Element x = gen_x(P), y = gen_y(P);

  // tails must be central: x^e_x etc. commute with both generators
  for (const Element& t :
       {normalize(P, {0, 0, P.tail_x[0], P.tail_x[1], P.tail_x[2]}),
        normalize(P, {0, 0, P.tail_y[0], P.tail_y[1], P.tail_y[2]}),
        normalize(P, {0, 0, 0, P.tail_z[0], P.tail_z[1]})}) {
    for (const Element& g : {x, y}) {
      if (!is_identity(commutator(P, t, g))) {
        res.detail = "tail element is not central";
        res.witness = {t, g, Element{}};
        return res;
      }
    }
  }

  const std::array<Element, 5> gens = {x, y, gen_z(P), gen_u(P), gen_v(P)};

  auto run_block = [&](std::uint64_t lo, std::uint64_t hi, TripleCheck& out) {
    if (N <= opt.exhaustive_limit) {
      for (std::uint64_t gi = lo; gi < hi && out.ok; ++gi) {
        Element g = element_at(P, gi);
        for (std::uint64_t hi2 = 0; hi2 < N && out.ok; ++hi2) {
          Element h = element_at(P, hi2);
          Element gh = multiply(P, g, h);
          for (std::uint64_t wi = 0; wi < N; ++wi) {
            Element w = element_at(P, wi);
            if (multiply(P, gh, w) != multiply(P, g, multiply(P, h, w))) {
              out.ok = false;
              out.witness = {g, h, w};
              break;
            }
          }
        }
      }
    } else {
      // all pairs against generator triples; with two-sided identity this
      // already forces full associativity, the random triples are a second
      // net on top
      for (std::uint64_t gi = lo; gi < hi && out.ok; ++gi) {
        Element g = element_at(P, gi);
        for (std::uint64_t hi2 = 0; hi2 < N && out.ok; ++hi2) {
          Element h = element_at(P, hi2);
          Element gh = multiply(P, g, h);
          for (const Element& s : gens) {
            if (multiply(P, gh, s) != multiply(P, g, multiply(P, h, s))) {
              out.ok = false;
              out.witness = {g, h, s};
              break;
            }
          }
        }
      }
    }
  };

  int jobs = opt.jobs > 0 ? opt.jobs : 1;
  if (static_cast<std::uint64_t>(jobs) > N) jobs = static_cast<int>(N);
  std::vector<TripleCheck> parts(jobs);
  if (jobs == 1) {
    run_block(0, N, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (N + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      std::uint64_t lo = t * chunk, hi = std::min<std::uint64_t>(N, lo + chunk);
      pool.emplace_back([&, lo, hi, t] { run_block(lo, hi, parts[t]); });
    }
    for (auto& th : pool) th.join();
  }
  for (const TripleCheck& t : parts)
    if (!t.ok) {
      res.detail = "associativity failure";
      res.witness = t.witness;
      return res;
    }

  // random triples (seeded, reproducible)
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, N - 1);
  for (std::uint64_t t = 0; t < opt.random_triples; ++t) {
    Element g = element_at(P, pick(rng));
    Element h = element_at(P, pick(rng));
    Element w = element_at(P, pick(rng));
    if (!assoc_ok(P, g, h, w)) {
      res.detail = "associativity failure (random triple)";
      res.witness = {g, h, w};
      return res;
    }
  }

  // power relations close up: x^e_x equals its tail, etc.
  if (power(P, x, P.bounds[0]) !=
          normalize(P, {0, 0, P.tail_x[0], P.tail_x[1], P.tail_x[2]}) ||
      power(P, y, P.bounds[1]) !=
          normalize(P, {0, 0, P.tail_y[0], P.tail_y[1], P.tail_y[2]}) ||
      power(P, gen_z(P), P.bounds[2]) !=
          normalize(P, {0, 0, 0, P.tail_z[0], P.tail_z[1]}) ||
      !is_identity(power(P, gen_u(P), P.bounds[3])) ||
      !is_identity(power(P, gen_v(P), P.bounds[4]))) {
    res.detail = "power relation mismatch";
    return res;
  }

  // inverses really invert (spot the whole group when small)
  std::uint64_t inv_checks = std::min<std::uint64_t>(N, 4096);
  for (std::uint64_t t = 0; t < inv_checks; ++t) {
    Element g = element_at(P, t);
    if (!is_identity(multiply(P, g, inverse(P, g))) ||
        !is_identity(multiply(P, inverse(P, g), g))) {
      res.detail = "inverse failure";
      res.witness = {g, inverse(P, g), Element{}};
      return res;
    }
  }

  res.ok = true;
  P.consistent = true;
  return res;
}

}  // namespace maxaut
