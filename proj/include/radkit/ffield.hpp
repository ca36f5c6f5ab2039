#pragma once

// Small finite fields F_(p^d) on top of the mod-p polynomial layer, just
// enough for the F_p branch: finding roots of unity, multiplicative orders,
// and the order of 1 + zeta_(2^w) in an algebraic closure of F_p.

#include "radkit/factor.hpp"

namespace radkit {

struct FqField {
  uint64_t p;
  fp::FpPoly modulus;  // monic irreducible of degree d

  long degree() const { return modulus.degree(); }
  Int order() const { return pow_int(Int((unsigned long)p), degree()) - 1; }
};

namespace ffdetail {

inline fp::FpPoly x_poly(uint64_t p) {
  fp::FpPoly x;
  x.p = p;
  x.c = {0, 1};
  return x;
}

inline bool is_irreducible(const fp::FpPoly& f) {
  // x^(p^d) = x mod f, and x^(p^(d/q)) - x coprime to f for prime q | d
  long d = f.degree();
  uint64_t p = f.p;
  fp::FpPoly x = x_poly(p);
  fp::FpPoly xp = fp::powmod(x, pow_int(Int((unsigned long)p), d), f);
  if (!fp::sub(xp, x).is_zero()) return false;
  for (const auto& [q, e] : factorize(Int(d)).factors) {
    long dd = d / q.get_si();
    fp::FpPoly xq = fp::powmod(x, pow_int(Int((unsigned long)p), dd), f);
    if (fp::gcd(fp::sub(xq, x), f).degree() != 0) return false;
  }
  return true;
}

}  // namespace ffdetail

// deterministic search for a monic irreducible of degree d over F_p
inline FqField fq_field(uint64_t p, long d) {
  if (d < 1) throw domain_error("fq_field: degree must be positive");
  if (d == 1) {
    fp::FpPoly f;
    f.p = p;
    f.c = {0, 1};  // x
    return FqField{p, f};
  }
  Int space = pow_int(Int((unsigned long)p), d);
  for (Int tail = 1; tail < space; ++tail) {
    fp::FpPoly f;
    f.p = p;
    f.c.assign(d + 1, 0);
    f.c[d] = 1;
    Int t = tail;
    for (long i = 0; i < d && t > 0; ++i) {
      f.c[i] = fmod(t, Int((unsigned long)p)).get_ui();
      t = fdiv(t, Int((unsigned long)p));
    }
    if (f.c[0] == 0) continue;
    if (ffdetail::is_irreducible(f)) return FqField{p, f};
  }
  throw resource_error("fq_field: search failed");
}

using FqElem = fp::FpPoly;  // reduced mod the field modulus

inline FqElem fq_mul(const FqField& F, const FqElem& a, const FqElem& b) {
  return fp::divmod(fp::mul(a, b), F.modulus).second;
}

inline FqElem fq_pow(const FqField& F, const FqElem& a, const Int& e) {
  return fp::powmod(a, e, F.modulus);
}

inline bool fq_is_one(const FqElem& a) { return a.degree() == 0 && a.c[0] == 1; }

inline FqElem fq_one(const FqField& F) {
  FqElem e;
  e.p = F.p;
  e.c = {1};
  return e;
}

// multiplicative order via the factored group order
inline Int fq_order(const FqField& F, const FqElem& a) {
  if (a.is_zero()) throw domain_error("fq_order: zero element");
  Int n = F.order();
  Int ord = n;
  for (const auto& [q, e] : factorize(n).factors) {
    for (unsigned i = 0; i < e; ++i) {
      Int cand = exact_div(ord, q);
      if (fq_is_one(fq_pow(F, a, cand)))
        ord = cand;
      else
        break;
    }
  }
  return ord;
}

// an element of exact multiplicative order n (requires n | p^d - 1)
inline FqElem fq_element_of_order(const FqField& F, const Int& n) {
  Int group = F.order();
  if (!divides(n, group)) throw domain_error("fq_element_of_order: bad order");
  // find a generator by scanning small elements in base-p order
  for (Int trial = 2; trial < group + 2; ++trial) {
    FqElem cand;
    cand.p = F.p;
    Int t = trial;
    while (t > 0) {
      cand.c.push_back(fmod(t, Int((unsigned long)F.p)).get_ui());
      t = fdiv(t, Int((unsigned long)F.p));
    }
    cand.strip();
    if (cand.is_zero() || long(cand.c.size()) > F.degree()) continue;
    if (fq_order(F, cand) == group)
      return fq_pow(F, cand, exact_div(group, n));
  }
  throw resource_error("fq_element_of_order: no generator found");
}

// order of 1 + zeta_n in an algebraic closure of F_p (n coprime to p):
// works in F_(p^d) with d = ord_n(p)
inline Int ff_order_one_plus_zeta(const Int& p, const Int& n) {
  if (p == 2 && fmod(n, 2) == 0) throw domain_error("ff_order_one_plus_zeta: p | n");
  Int d = (n == 1) ? Int(1) : multiplicative_order(fmod(p, n), n);
  FqField F = fq_field(p.get_ui(), d.get_si());
  FqElem z = fq_element_of_order(F, n);
  FqElem one = fq_one(F);
  FqElem v = fp::add(one, z);
  if (v.is_zero()) throw domain_error("ff_order_one_plus_zeta: 1 + zeta = 0");
  return fq_order(F, v);
}

}  // namespace radkit
