#pragma once

// Dense exact univariate polynomials over Q, with the integer-level
// machinery (primitive parts, pseudo-division, subresultant PRS) that keeps
// gcds and resultants free of fraction blowup.

#include <vector>

#include "radkit/arith.hpp"
#include "radkit/interval.hpp"

namespace radkit {

// coefficients low-to-high; empty vector is the zero polynomial,
// otherwise the leading coefficient is nonzero
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { strip(); }
  static Poly constant(const Rat& v) { return v == 0 ? Poly() : Poly({v}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  // x^n - a
  static Poly binomial(unsigned n, const Rat& a) {
    std::vector<Rat> v(n + 1, Rat(0));
    v[0] = -a;
    v[n] = 1;
    return Poly(std::move(v));
  }

  void strip() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  long degree() const { return long(c.size()) - 1; }
  const Rat& lc() const { return c.back(); }

  Rat coeff(size_t i) const { return i < c.size() ? c[i] : Rat(0); }

  bool operator==(const Poly& o) const { return c == o.c; }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  CItv eval(const CItv& x, unsigned prec) const {
    CItv acc(0);
    for (size_t i = c.size(); i-- > 0;) {
      acc = cmul(acc, x, prec);
      acc = cadd(acc, CItv(DItv::from_rat(c[i], prec), DItv(0)), prec);
    }
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    Rat inv = Rat(1) / lc();
    for (auto& v : r.c) v *= inv;
    return r;
  }
};

inline Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

inline Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(v));
}

inline Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

inline Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
  }
  return Poly(std::move(v));
}

inline Poly operator*(const Poly& a, const Rat& s) {
  Poly r = a;
  for (auto& v : r.c) v *= s;
  r.strip();
  return r;
}

// quotient and remainder over Q
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw domain_error("poly division by zero");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly(), rem};
  std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
  Rat lb = Rat(1) / b.lc();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    long k = rem.degree() - b.degree();
    Rat f = rem.lc() * lb;
    q[k] = f;
    for (long i = 0; i <= b.degree(); ++i) rem.c[k + i] -= f * b.c[i];
    rem.strip();
  }
  return {Poly(std::move(q)), rem};
}

inline Poly derivative(const Poly& a) {
  if (a.c.size() <= 1) return Poly();
  std::vector<Rat> v(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) v[i - 1] = a.c[i] * Rat(long(i));
  return Poly(std::move(v));
}

// ---- integer-level layer ----

struct ZPoly {
  std::vector<Int> c;

  void strip() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return long(c.size()) - 1; }
  const Int& lc() const { return c.back(); }
  Int coeff(size_t i) const { return i < c.size() ? c[i] : Int(0); }
};

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

inline Int zcontent(const ZPoly& a) {
  Int g = 0;
  for (const Int& v : a.c) g = gcd(g, v);
  return g;
}

inline ZPoly zdiv_scalar(const ZPoly& a, const Int& s) {
  ZPoly r = a;
  for (Int& v : r.c) v = exact_div(v, s);
  return r;
}

// Clear denominators: returns primitive integer polynomial P and scalar s
// with a = (s) * P, s rational.
inline std::pair<ZPoly, Rat> to_primitive_z(const Poly& a) {
  if (a.is_zero()) return {ZPoly{}, Rat(0)};
  Int d = 1;
  for (const Rat& v : a.c) d = lcm(d, den(v));
  ZPoly z;
  z.c.resize(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i)
    z.c[i] = num(a.c[i]) * exact_div(d, den(a.c[i]));
  Int cont = zcontent(z);
  if (z.lc() < 0) cont = -cont;
  z = zdiv_scalar(z, cont);
  return {z, make_rat(cont, d)};
}

inline Poly from_z(const ZPoly& z) {
  std::vector<Rat> v(z.c.size());
  for (size_t i = 0; i < z.c.size(); ++i) v[i] = Rat(z.c[i]);
  return Poly(std::move(v));
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r exactly
inline ZPoly zprem(ZPoly a, const ZPoly& b) {
  long d = a.degree() - b.degree();
  if (d < 0) return a;
  const Int lb = b.lc();
  long e = d + 1;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    long k = a.degree() - b.degree();
    Int t = a.lc();
    for (Int& v : a.c) v *= lb;
    for (long i = 0; i <= b.degree(); ++i) a.c[k + i] -= t * b.c[i];
    a.strip();
    --e;
  }
  if (e > 0) {
    Int m = pow_int(lb, e);
    for (Int& v : a.c) v *= m;
  }
  return a;
}

// gcd of primitive integer polynomials via the subresultant PRS
inline ZPoly zgcd(ZPoly a, ZPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  Int g = 1, h = 1;
  while (true) {
    long delta = a.degree() - b.degree();
    ZPoly r = zprem(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b.c = {Int(1)};
      break;
    }
    a = b;
    Int divisor = g * pow_int(h, delta);
    b = zdiv_scalar(r, divisor);
    g = a.lc();
    if (delta > 0) {
      Int gh = pow_int(g, delta);
      h = (delta == 1) ? gh : exact_div(gh, pow_int(h, delta - 1));
    }
  }
  Int cont = zcontent(b);
  if (b.lc() < 0) cont = -cont;
  return zdiv_scalar(b, cont);
}

inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto [za, sa] = to_primitive_z(a);
  auto [zb, sb] = to_primitive_z(b);
  return from_z(zgcd(za, zb)).monic();
}

// resultant of integer polynomials, subresultant PRS (Cohen Alg. 3.3.7)
inline Int zresultant(ZPoly a, ZPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    return Int(s) * pow_int(b.lc(), a.degree());
  }
  Int g = 1, h = 1;
  while (true) {
    long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    ZPoly r = zprem(a, b);
    a = b;
    if (r.is_zero()) return 0;
    Int divisor = g * pow_int(h, delta);
    b = zdiv_scalar(r, divisor);
    g = a.lc();
    if (delta > 0) {
      Int gd = pow_int(g, delta);
      h = (delta == 1) ? gd : exact_div(gd, pow_int(h, delta - 1));
    }
    if (b.degree() == 0) break;
  }
  // deg b == 0: result is lc(b)^deg(a) / h^(deg(a)-1)
  Int numr = pow_int(b.lc(), a.degree());
  Int res = (a.degree() > 1) ? exact_div(numr, pow_int(h, a.degree() - 1)) : numr;
  return Int(s) * res;
}

inline Rat resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  auto [za, sa] = to_primitive_z(a);
  auto [zb, sb] = to_primitive_z(b);
  // Res(sa*A, sb*B) = sa^deg(B) * sb^deg(A) * Res(A, B)
  Rat scale = pow_rat(sa, b.degree()) * pow_rat(sb, a.degree());
  return scale * Rat(zresultant(za, zb));
}

// ---- Sturm sequences ----

// number of real roots of the squarefree part of f (counts distinct roots)
inline std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain;
  Poly sf = divmod(f, gcd(f, derivative(f))).first;  // squarefree part
  chain.push_back(sf);
  chain.push_back(derivative(sf));
  while (!chain.back().is_zero()) {
    auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

namespace detail {
inline int sign_at_inf(const Poly& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = sgn(p.lc());
  if (!plus && (p.degree() & 1)) s = -s;
  return s;
}
}  // namespace detail

inline long count_real_roots(const Poly& f) {
  if (f.is_zero()) throw domain_error("count_real_roots: zero polynomial");
  if (f.degree() == 0) return 0;
  auto chain = sturm_chain(f);
  auto variations = [&](bool plus) {
    long v = 0;
    int prev = 0;
    for (const Poly& p : chain) {
      int s = detail::sign_at_inf(p, plus);
      if (s != 0) {
        if (prev != 0 && s != prev) ++v;
        prev = s;
      }
    }
    return v;
  };
  return variations(false) - variations(true);
}

}  // namespace radkit
