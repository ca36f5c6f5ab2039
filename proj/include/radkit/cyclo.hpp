#pragma once

// Exact arithmetic in Q(zeta_N): elements are coefficient vectors of length
// phi(N) on the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced modulo the
// N-th cyclotomic polynomial.

#include <mutex>
#include <map>

#include "radkit/poly.hpp"

namespace radkit {

namespace detail {

// substitute x -> x^k
inline ZPoly zstretch(const ZPoly& f, unsigned long k) {
  if (f.is_zero()) return f;
  ZPoly r;
  r.c.assign(size_t(f.degree()) * k + 1, 0);
  for (size_t i = 0; i < f.c.size(); ++i) r.c[i * k] = f.c[i];
  return r;
}

// exact division by a monic integer polynomial
inline ZPoly zdiv_monic(ZPoly a, const ZPoly& b) {
  ZPoly q;
  long db = b.degree();
  if (a.degree() < db) return q;
  q.c.assign(a.degree() - db + 1, 0);
  for (long k = a.degree() - db; k >= 0; --k) {
    Int f = a.coeff(db + k);
    if (f != 0) {
      q.c[k] = f;
      for (long i = 0; i <= db; ++i) a.c[k + i] -= f * b.c[i];
    }
  }
  a.strip();
  if (!a.is_zero()) throw domain_error("zdiv_monic: division not exact");
  q.strip();
  return q;
}

}  // namespace detail

// N-th cyclotomic polynomial over Z, built prime by prime:
// Phi_[pm](x) = Phi_m(x^p)/Phi_m(x) for p not dividing m, and the radical
// part is finally stretched by n / rad(n).
inline const ZPoly& cyclotomic_poly(unsigned long n) {
  if (n == 0) throw domain_error("cyclotomic_poly: n must be positive");
  if (n > 100000) throw resource_error("cyclotomic_poly: conductor bound exceeded");
  static std::map<unsigned long, ZPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  ZPoly f;
  f.c = {Int(-1), Int(1)};  // x - 1
  unsigned long radical = 1, m = n;
  for (const auto& [p, e] : factorize(Int(n)).factors) {
    unsigned long pu = p.get_ui();
    radical *= pu;
    f = detail::zdiv_monic(detail::zstretch(f, pu), f);
  }
  (void)m;
  if (n / radical > 1) f = detail::zstretch(f, n / radical);
  return cache.emplace(n, std::move(f)).first->second;
}

struct CycloElement {
  unsigned long conductor = 1;  // N
  std::vector<Rat> coeffs;      // length phi(N)

  bool operator==(const CycloElement& o) const {
    return conductor == o.conductor && coeffs == o.coeffs;
  }

  bool is_zero() const {
    for (const Rat& v : coeffs)
      if (v != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) return false;
    return true;
  }
};

inline unsigned long cyclo_dim(unsigned long n) {
  return euler_phi(Int(n)).get_ui();
}

inline CycloElement cyclo_zero(unsigned long n) {
  return CycloElement{n, std::vector<Rat>(cyclo_dim(n), Rat(0))};
}

inline CycloElement cyclo_rational(unsigned long n, const Rat& r) {
  CycloElement e = cyclo_zero(n);
  e.coeffs[0] = r;
  return e;
}

// reduce a polynomial in zeta_N modulo Phi_N
inline CycloElement cyclo_from_poly(unsigned long n, const Poly& f) {
  const ZPoly& phi = cyclotomic_poly(n);
  Poly rem = divmod(f, from_z(phi)).second;
  CycloElement e = cyclo_zero(n);
  for (size_t i = 0; i < rem.c.size(); ++i) e.coeffs[i] = rem.c[i];
  return e;
}

// zeta_N^k
inline CycloElement cyclo_zeta_pow(unsigned long n, long k) {
  long kk = ((k % long(n)) + long(n)) % long(n);
  std::vector<Rat> v(size_t(kk) + 1, Rat(0));
  v[kk] = 1;
  return cyclo_from_poly(n, Poly(std::move(v)));
}

inline Poly cyclo_to_poly(const CycloElement& a) {
  return Poly(std::vector<Rat>(a.coeffs.begin(), a.coeffs.end()));
}

inline CycloElement cyclo_add(const CycloElement& a, const CycloElement& b) {
  if (a.conductor != b.conductor) throw domain_error("cyclo_add: conductor mismatch");
  CycloElement r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

inline CycloElement cyclo_sub(const CycloElement& a, const CycloElement& b) {
  if (a.conductor != b.conductor) throw domain_error("cyclo_sub: conductor mismatch");
  CycloElement r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

inline CycloElement cyclo_neg(const CycloElement& a) {
  CycloElement r = a;
  for (auto& v : r.coeffs) v = -v;
  return r;
}

inline CycloElement cyclo_scale(const CycloElement& a, const Rat& s) {
  CycloElement r = a;
  for (auto& v : r.coeffs) v *= s;
  return r;
}

inline CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) {
  if (a.conductor != b.conductor) throw domain_error("cyclo_mul: conductor mismatch");
  return cyclo_from_poly(a.conductor, cyclo_to_poly(a) * cyclo_to_poly(b));
}

inline CycloElement cyclo_pow(CycloElement base, unsigned long e) {
  CycloElement acc = cyclo_rational(base.conductor, Rat(1));
  while (e) {
    if (e & 1) acc = cyclo_mul(acc, base);
    base = cyclo_mul(base, base);
    e >>= 1;
  }
  return acc;
}

// embed Q(zeta_d) into Q(zeta_n), d | n: zeta_d = zeta_n^(n/d)
inline CycloElement cyclo_embed(const CycloElement& a, unsigned long n) {
  if (n % a.conductor != 0) throw domain_error("cyclo_embed: not a multiple");
  if (n == a.conductor) return a;
  unsigned long k = n / a.conductor;
  Poly f = cyclo_to_poly(a);
  std::vector<Rat> v;
  if (!f.is_zero()) {
    v.assign(size_t(f.degree()) * k + 1, Rat(0));
    for (size_t i = 0; i < f.c.size(); ++i) v[i * k] = f.c[i];
  }
  return cyclo_from_poly(n, Poly(std::move(v)));
}

inline bool cyclo_verify_identity(const CycloElement& lhs, const CycloElement& rhs) {
  unsigned long n = lcm(Int(lhs.conductor), Int(rhs.conductor)).get_ui();
  return cyclo_embed(lhs, n) == cyclo_embed(rhs, n);
}

// certified complex enclosure at zeta_N = e^(2 pi i / N)
inline CItv cyclo_eval(const CycloElement& a, unsigned bits) {
  auto [c, s] = cos_sin_2pi(make_rat(1, Int(a.conductor)), bits);
  CItv z(c, s), acc(0);
  for (size_t i = a.coeffs.size(); i-- > 0;) {
    acc = cmul(acc, z, bits);
    acc = cadd(acc, CItv(DItv::from_rat(a.coeffs[i], bits), DItv(0)), bits);
  }
  return acc;
}

}  // namespace radkit
