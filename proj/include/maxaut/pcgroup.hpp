#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "maxaut/params.hpp"

namespace maxaut {

// Normal form x^i y^j z^k u^m v^n.  Components are always reduced into the
// presentation's bounds; raw tuples enter only through normalize().
struct Element {
  std::int64_t i = 0, j = 0, k = 0, m = 0, n = 0;
  bool operator==(const Element&) const = default;
};

inline bool is_identity(const Element& g) { return g == Element{}; }

// Reduces a raw exponent tuple, absorbing quotients of the power relations:
// i mod e_x feeds quotient*tail_x into (k,m,n), then j with tail_y, then
// k with tail_z into (m,n), then m and n are reduced.  Exact because every
// tail is central and lies strictly lower in the x,y > z > u,v hierarchy.
Element normalize(const PcPresentation& P, std::array<std::int64_t, 5> raw);

// Collection in closed form.  With g = (i1,j1,k1,m1,n1), h = (i2,j2,k2,m2,n2):
//   i = i1+i2
//   j = j1+j2
//   k = k1+k2 - i2*j1
//   m = m1+m2 + k1*i2 - j1*C(i2,2)
//   n = n1+n2 + k1*j2 - i2*C(j1,2) - i2*j1*j2
// over the integers, then normalized.  Derived by pushing x^i2 left through
// y^j1 z^k1 and y^j2 through the corrected z run, using z^t x = x z^t u^t,
// z^t y = y z^t v^t and y^j x^i = x^i y^j z^{-ij} u^{-j C(i,2)} v^{-i C(j,2)};
// independently checked against the letter-rewriting oracle in the tests.
Element multiply(const PcPresentation& P, const Element& g, const Element& h);

Element inverse(const PcPresentation& P, const Element& g);

// g^t for any integer t (square and multiply; negative t inverts first).
Element power(const PcPresentation& P, Element g, std::int64_t t);

// [g,h] = g^-1 h^-1 g h.
Element commutator(const PcPresentation& P, const Element& g, const Element& h);

// Least power of p annihilating g, found by successive p-th powers.
std::int64_t element_order(const PcPresentation& P, const Element& g);

// The designated generators, reduced for the given presentation.
Element gen_x(const PcPresentation& P);
Element gen_y(const PcPresentation& P);
Element gen_z(const PcPresentation& P);
Element gen_u(const PcPresentation& P);
Element gen_v(const PcPresentation& P);

// Order as uint64; throws ArithmeticOverflow if it does not fit.
std::uint64_t group_order_u64(const PcPresentation& P);

// Lexicographic enumeration of all normal forms: index 0 is the identity,
// the v exponent varies fastest.
std::uint64_t index_of(const PcPresentation& P, const Element& g);
Element element_at(const PcPresentation& P, std::uint64_t idx);

class ElementRange {
 public:
  class iterator {
   public:
    iterator(const PcPresentation* P, std::uint64_t idx, std::uint64_t total)
        : P_(P), idx_(idx), total_(total) {
      if (idx_ < total_) cur_ = element_at(*P_, idx_);
    }
    const Element& operator*() const { return cur_; }
    iterator& operator++();
    bool operator!=(const iterator& o) const { return idx_ != o.idx_; }

   private:
    const PcPresentation* P_;
    std::uint64_t idx_, total_;
    Element cur_;
  };

  explicit ElementRange(const PcPresentation& P)
      : P_(&P), total_(group_order_u64(P)) {}
  iterator begin() const { return iterator(P_, 0, total_); }
  iterator end() const { return iterator(P_, total_, total_); }
  std::uint64_t size() const { return total_; }

 private:
  const PcPresentation* P_;
  std::uint64_t total_;
};

inline ElementRange elements(const PcPresentation& P) { return ElementRange(P); }

struct ConsistencyOptions {
  std::uint64_t exhaustive_limit = 512;  // full N^3 associativity up to here
  std::uint64_t random_triples = 100000;
  std::uint64_t max_order = 3125;  // enumeration budget
  int jobs = 1;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

struct ConsistencyResult {
  bool ok = false;
  std::array<Element, 3> witness{};  // failing (g,h,w) when !ok
  std::string detail;
};

// Structural checks (bounds are powers of p, tails in range), tail
// centrality, power-relation closure and associativity: exhaustively for
// |G| <= exhaustive_limit, otherwise (g,h) x generator triples for all
// pairs plus seeded random triples.  Sets P.consistent.
ConsistencyResult check_consistency(PcPresentation& P,
                                    const ConsistencyOptions& opt = {});

}  // namespace maxaut
