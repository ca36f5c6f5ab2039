#pragma once

// Complete factorization in Q[x]: squarefree decomposition (Yun), modular
// factorization (distinct-degree + Cantor-Zassenhaus), quadratic Hensel
// lifting and Zassenhaus subset recombination. Desk-scale by design: degree
// capped by the caller (default 64) and at most 12 modular factors before a
// different prime is tried.

#include <cstdint>
#include <random>
#include <vector>

#include "radkit/poly.hpp"

namespace radkit {

namespace fp {

// dense polynomials over F_p, p odd < 2^31
struct FpPoly {
  uint64_t p = 0;
  std::vector<uint64_t> c;

  void strip() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return long(c.size()) - 1; }
};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return uint64_t((__uint128_t)a * b % p);
}

inline uint64_t powmod_u(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod_u(a, p - 2, p); }

inline FpPoly reduce(const ZPoly& f, uint64_t p) {
  FpPoly r;
  r.p = p;
  r.c.resize(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = fmod(f.c[i], Int((unsigned long)p)).get_ui();
  r.strip();
  return r;
}

inline FpPoly add(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint64_t x = i < a.c.size() ? a.c[i] : 0, y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = (x + y) % a.p;
  }
  r.strip();
  return r;
}

inline FpPoly sub(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint64_t x = i < a.c.size() ? a.c[i] : 0, y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = (x + a.p - y) % a.p;
  }
  r.strip();
  return r;
}

inline FpPoly mul(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + (__uint128_t)a.c[i] * b.c[j]) % a.p;
  }
  r.strip();
  return r;
}

inline FpPoly scale(const FpPoly& a, uint64_t s) {
  FpPoly r = a;
  for (auto& v : r.c) v = mulmod(v, s, a.p);
  r.strip();
  return r;
}

inline std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r = a;
  q.p = r.p = a.p;
  if (b.is_zero()) throw domain_error("FpPoly division by zero");
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.degree() - b.degree() + 1, 0);
  uint64_t inv = invmod(b.c.back(), a.p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    long k = r.degree() - b.degree();
    uint64_t f = mulmod(r.c.back(), inv, a.p);
    q.c[k] = f;
    for (long i = 0; i <= b.degree(); ++i) {
      uint64_t sub_v = mulmod(f, b.c[i], a.p);
      r.c[k + i] = (r.c[k + i] + a.p - sub_v) % a.p;
    }
    r.strip();
  }
  q.strip();
  return {q, r};
}

inline FpPoly monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, invmod(a.c.back(), a.p));
}

inline FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return monic(a);
}

inline FpPoly powmod(FpPoly base, Int e, const FpPoly& mod) {
  FpPoly r;
  r.p = base.p;
  r.c = {1};
  base = divmod(base, mod).second;
  while (e > 0) {
    if (fmod(e, 2) == 1) r = divmod(mul(r, base), mod).second;
    base = divmod(mul(base, base), mod).second;
    e = fdiv(e, 2);
  }
  return r;
}

inline FpPoly derivative(const FpPoly& a) {
  FpPoly r;
  r.p = a.p;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulmod(a.c[i], i % a.p, a.p);
  r.strip();
  return r;
}

// equal-degree splitting, Cantor-Zassenhaus; f monic squarefree, all
// irreducible factors of degree d
inline void equal_degree_split(const FpPoly& f, long d, std::mt19937_64& rng,
                               std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const uint64_t p = f.p;
  Int exponent = (pow_int(Int((unsigned long)p), d) - 1) / 2;
  while (true) {
    FpPoly a;
    a.p = p;
    a.c.resize(f.degree());
    for (auto& v : a.c) v = rng() % p;
    a.strip();
    if (a.degree() < 1) continue;
    FpPoly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first, d, rng, out);
      return;
    }
    FpPoly b = powmod(a, exponent, f);
    if (b.is_zero()) continue;
    b.c[0] = (b.c[0] + p - 1) % p;  // b - 1
    b.strip();
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

// full factorization of a monic squarefree f over F_p
inline std::vector<FpPoly> factor_squarefree(const FpPoly& f0) {
  std::mt19937_64 rng(0xC0FFEEULL);
  std::vector<FpPoly> out;
  FpPoly f = monic(f0);
  const uint64_t p = f.p;
  FpPoly x;
  x.p = p;
  x.c = {0, 1};
  FpPoly h = x;
  long d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.push_back(f);
      break;
    }
    h = powmod(h, Int((unsigned long)p), f);
    FpPoly g = gcd(sub(h, x), f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
  return out;
}

}  // namespace fp

// ---- arithmetic mod m (m = p^k, arbitrary precision) ----

namespace zm {

using MPoly = std::vector<Int>;  // low-to-high, reduced into [0, m)

inline void strip(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline MPoly reduce(const ZPoly& f, const Int& m) {
  MPoly r(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r[i] = fmod(f.c[i], m);
  strip(r);
  return r;
}

inline MPoly add(const MPoly& a, const MPoly& b, const Int& m) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    Int x = i < a.size() ? a[i] : Int(0), y = i < b.size() ? b[i] : Int(0);
    r[i] = fmod(x + y, m);
  }
  strip(r);
  return r;
}

inline MPoly sub(const MPoly& a, const MPoly& b, const Int& m) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    Int x = i < a.size() ? a[i] : Int(0), y = i < b.size() ? b[i] : Int(0);
    r[i] = fmod(x - y, m);
  }
  strip(r);
  return r;
}

inline MPoly mul(const MPoly& a, const MPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& v : r) v = fmod(v, m);
  strip(r);
  return r;
}

// division by a monic divisor
inline std::pair<MPoly, MPoly> divmod_monic(const MPoly& a, const MPoly& b,
                                            const Int& m) {
  MPoly r = a, q;
  long db = long(b.size()) - 1;
  if (long(r.size()) - 1 < db) return {q, r};
  q.assign(r.size() - b.size() + 1, 0);
  for (long k = long(r.size()) - 1; k >= db; --k) {
    Int f = r[k];
    if (f == 0) continue;
    q[k - db] = f;
    for (long i = 0; i <= db; ++i) r[k - db + i] = fmod(r[k - db + i] - f * b[i], m);
  }
  strip(q);
  strip(r);
  return {q, r};
}

}  // namespace zm

namespace detail {

// extended euclid over F_p for polynomials: s*a + t*b = 1 (a, b coprime)
inline std::pair<fp::FpPoly, fp::FpPoly> fp_bezout(const fp::FpPoly& a,
                                                   const fp::FpPoly& b) {
  using namespace fp;
  FpPoly r0 = a, r1 = b;
  FpPoly s0, s1, t0, t1;
  s0.p = s1.p = t0.p = t1.p = a.p;
  s0.c = {1};
  t1.c = {1};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    FpPoly s2 = sub(s0, mul(q, s1));
    FpPoly t2 = sub(t0, mul(q, t1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  // r0 = gcd, must be a nonzero constant
  if (r0.degree() != 0) throw domain_error("fp_bezout: inputs not coprime");
  uint64_t inv = invmod(r0.c[0], a.p);
  return {scale(s0, inv), scale(t0, inv)};
}

struct LiftedPair {
  zm::MPoly g, h, s, t;
  Int m;
};

// quadratic Hensel: from f = g*h (mod p) with Bezout s*g + t*h = 1 (mod p),
// both monic, to the same data mod >= target
inline LiftedPair hensel_pair(const zm::MPoly& f, fp::FpPoly g0, fp::FpPoly h0,
                              const Int& p, const Int& target) {
  using namespace zm;
  auto [s0, t0] = fp_bezout(g0, h0);
  auto to_mpoly = [](const fp::FpPoly& a) {
    MPoly r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = Int((unsigned long)a.c[i]);
    return r;
  };
  LiftedPair cur{to_mpoly(g0), to_mpoly(h0), to_mpoly(s0), to_mpoly(t0), p};
  while (cur.m < target) {
    Int m2 = cur.m * cur.m;
    MPoly fm = f;
    for (auto& v : fm) v = fmod(v, m2);
    zm::strip(fm);
    MPoly e = sub(fm, mul(cur.g, cur.h, m2), m2);
    auto [q, r] = divmod_monic(mul(cur.s, e, m2), cur.h, m2);
    MPoly g2 = add(add(cur.g, mul(cur.t, e, m2), m2), mul(q, cur.g, m2), m2);
    MPoly h2 = add(cur.h, r, m2);
    MPoly one{Int(1)};
    MPoly b = sub(add(mul(cur.s, g2, m2), mul(cur.t, h2, m2), m2), one, m2);
    auto [c, d] = divmod_monic(mul(cur.s, b, m2), h2, m2);
    MPoly s2 = sub(cur.s, d, m2);
    MPoly t2 = sub(sub(cur.t, mul(cur.t, b, m2), m2), mul(c, g2, m2), m2);
    cur = LiftedPair{g2, h2, s2, t2, m2};
  }
  return cur;
}

// lift all monic modular factors of a monic (mod p^k) polynomial
inline void hensel_tree(const zm::MPoly& f, const std::vector<fp::FpPoly>& facs,
                        size_t lo, size_t hi, const Int& p, const Int& target,
                        std::vector<zm::MPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(f);
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  fp::FpPoly g0, h0;
  g0.p = h0.p = facs[lo].p;
  g0.c = {1};
  h0.c = {1};
  for (size_t i = lo; i < mid; ++i) g0 = fp::mul(g0, facs[i]);
  for (size_t i = mid; i < hi; ++i) h0 = fp::mul(h0, facs[i]);
  LiftedPair lifted = hensel_pair(f, g0, h0, p, target);
  hensel_tree(lifted.g, facs, lo, mid, p, target, out);
  hensel_tree(lifted.h, facs, mid, hi, p, target, out);
}

inline Int mignotte_bound(const ZPoly& f) {
  Int norm2 = 0;
  for (const Int& v : f.c) norm2 += v * v;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  return (root * abs(f.lc())) << (unsigned long)(f.degree() + 1);
}

inline ZPoly symmetric_reduce(const zm::MPoly& a, const Int& m) {
  ZPoly r;
  r.c.resize(a.size());
  Int half = m / 2;
  for (size_t i = 0; i < a.size(); ++i) r.c[i] = a[i] > half ? Int(a[i] - m) : a[i];
  r.strip();
  return r;
}

inline ZPoly zprimitive(const ZPoly& a) {
  if (a.is_zero()) return a;
  Int c = zcontent(a);
  if (a.lc() < 0) c = -c;
  return zdiv_scalar(a, c);
}

// exact integer polynomial division test
inline std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  Poly qa = from_z(a), qb = from_z(b);
  auto [q, r] = divmod(qa, qb);
  if (!r.is_zero()) return std::nullopt;
  for (const Rat& v : q.c)
    if (!is_integer(v)) return std::nullopt;
  ZPoly out;
  out.c.resize(q.c.size());
  for (size_t i = 0; i < q.c.size(); ++i) out.c[i] = num(q.c[i]);
  return out;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (f.degree() == 1) return {f};
  // choose a prime: f squarefree mod p, p not dividing lc; min factor count
  ZPoly fder;
  fder.c.resize(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) fder.c[i - 1] = f.c[i] * long(i);
  fder.strip();

  struct Cand {
    uint64_t p;
    std::vector<fp::FpPoly> facs;
  };
  std::optional<Cand> best;
  int valid_seen = 0;
  for (uint32_t p : small_primes()) {
    if (p == 2) continue;
    if (p > 20000) break;
    if (divides(Int(p), f.lc())) continue;
    fp::FpPoly fp_f = fp::reduce(f, p);
    fp::FpPoly fp_d = fp::reduce(fder, p);
    if (fp::gcd(fp_f, fp_d).degree() != 0) continue;  // not squarefree mod p
    auto facs = fp::factor_squarefree(fp_f);
    if (!best || facs.size() < best->facs.size()) best = Cand{p, std::move(facs)};
    ++valid_seen;
    if (best->facs.size() == 1) break;
    if (valid_seen >= 6 && best->facs.size() <= 12) break;
    if (valid_seen >= 40) break;
  }
  if (!best) throw resource_error("zassenhaus: no usable prime found");
  if (best->facs.size() == 1) return {f};
  if (best->facs.size() > 12)
    throw resource_error("zassenhaus: too many modular factors");

  const Int p(best->p);
  // lift beyond twice the Mignotte bound
  Int bound = 2 * mignotte_bound(f) + 1;
  Int target = p;
  while (target < bound) target *= target;

  // make f monic mod p^k via lc inverse
  Int lc_inv;
  if (mpz_invert(lc_inv.get_mpz_t(), f.lc().get_mpz_t(), target.get_mpz_t()) == 0)
    throw domain_error("zassenhaus: lc not invertible");
  zm::MPoly fm = zm::reduce(f, target);
  for (auto& v : fm) v = fmod(v * lc_inv, target);
  zm::strip(fm);

  std::vector<zm::MPoly> lifted;
  hensel_tree(fm, best->facs, 0, best->facs.size(), p, target, lifted);

  // subset recombination
  std::vector<ZPoly> result;
  std::vector<zm::MPoly> rem = lifted;
  ZPoly fcur = f;
  bool restart = true;
  while (restart) {
    restart = false;
    size_t n = rem.size();
    for (size_t card = 1; card <= n && !restart; ++card) {
      for (uint64_t mask = 1; mask < (uint64_t(1) << n) && !restart; ++mask) {
        if (__builtin_popcountll(mask) != int(card)) continue;
        long deg_sum = 0;
        for (size_t i = 0; i < n; ++i)
          if (mask & (uint64_t(1) << i)) deg_sum += long(rem[i].size()) - 1;
        if (2 * deg_sum > fcur.degree()) continue;
        zm::MPoly prod{fmod(fcur.lc(), target)};
        for (size_t i = 0; i < n; ++i)
          if (mask & (uint64_t(1) << i)) prod = zm::mul(prod, rem[i], target);
        ZPoly cand = zprimitive(symmetric_reduce(prod, target));
        if (cand.degree() < 1) continue;
        auto quot = zdivide(fcur, cand);
        if (quot) {
          result.push_back(cand);
          fcur = zprimitive(*quot);
          std::vector<zm::MPoly> keep;
          for (size_t i = 0; i < n; ++i)
            if (!(mask & (uint64_t(1) << i))) keep.push_back(rem[i]);
          rem = std::move(keep);
          restart = true;
        }
      }
    }
  }
  if (fcur.degree() >= 1) result.push_back(fcur);
  return result;
}

}  // namespace detail

// Complete irreducible factorization over Q. Returns monic irreducible
// factors with multiplicities; the rational content is dropped.
inline std::vector<std::pair<Poly, unsigned>> factor_over_q(const Poly& f,
                                                            long max_degree = 64) {
  if (f.is_zero()) throw domain_error("factor_over_q: zero polynomial");
  if (f.degree() > max_degree)
    throw resource_error("factor_over_q: degree bound exceeded");
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() == 0) return out;

  // strip powers of x
  Poly g = f;
  unsigned xmult = 0;
  while (g.coeff(0) == 0) {
    g.c.erase(g.c.begin());
    ++xmult;
  }
  if (xmult > 0) out.push_back({Poly::x(), xmult});
  if (g.degree() == 0) return out;

  // Yun squarefree decomposition over Q
  Poly d = derivative(g);
  Poly u = gcd(g, d);
  Poly v = divmod(g, u).first;
  Poly w = divmod(d, u).first;
  unsigned k = 1;
  while (v.degree() > 0) {
    Poly z = w - derivative(v);
    Poly h = gcd(v, z);
    if (h.degree() > 0) {
      auto [zp, s] = to_primitive_z(h);
      for (const ZPoly& irr : detail::zassenhaus(zp))
        out.push_back({from_z(irr).monic(), k});
    }
    v = divmod(v, h).first;
    w = divmod(z, h).first;
    ++k;
  }
  return out;
}

}  // namespace radkit
