#pragma once

// Simple extensions Q[y]/(f) with exact arithmetic, factorization of
// polynomials over them by Trager's norm method, and Galois/abelian checks
// for the radical extensions the kernel cares about.

#include "radkit/cyclo.hpp"
#include "radkit/factor.hpp"
#include "radkit/minpoly.hpp"

namespace radkit {

// s*a + t*b = g, g monic gcd
inline std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Rat(1)), s1;
  Poly t0, t1 = Poly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = Rat(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// number field Q[y]/(modulus)
struct ExtensionField {
  Poly modulus;  // monic, irreducible

  explicit ExtensionField(Poly f, bool certify = true) : modulus(f.monic()) {
    if (modulus.degree() < 1) throw domain_error("ExtensionField: trivial modulus");
    if (certify) {
      auto facs = factor_over_q(modulus);
      if (facs.size() != 1 || facs[0].second != 1)
        throw domain_error("ExtensionField: modulus is reducible");
    }
  }

  long degree() const { return modulus.degree(); }

  Poly reduce(const Poly& v) const { return divmod(v, modulus).second; }

  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

  Poly inv(const Poly& a) const {
    if (a.is_zero()) throw domain_error("ExtensionField: inverse of zero");
    auto [g, s, t] = poly_xgcd(a, modulus);
    if (g.degree() != 0) throw domain_error("ExtensionField: not invertible");
    return reduce(s);
  }
};

// element paired with its field, the spec's ExtensionElement
struct ExtensionElement {
  const ExtensionField* field;
  Poly value;
};

// polynomials over E, coefficients reduced mod the modulus
struct ExtPoly {
  std::vector<Poly> c;

  void strip() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return long(c.size()) - 1; }
};

inline ExtPoly ext_from_rational_poly(const Poly& f) {
  ExtPoly r;
  r.c.resize(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = Poly::constant(f.c[i]);
  return r;
}

inline ExtPoly ext_add(const ExtensionField& E, const ExtPoly& a, const ExtPoly& b) {
  ExtPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    Poly x = i < a.c.size() ? a.c[i] : Poly();
    Poly y = i < b.c.size() ? b.c[i] : Poly();
    r.c[i] = E.reduce(x + y);
  }
  r.strip();
  return r;
}

inline ExtPoly ext_mul(const ExtensionField& E, const ExtPoly& a, const ExtPoly& b) {
  ExtPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Poly());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  for (auto& v : r.c) v = E.reduce(v);
  r.strip();
  return r;
}

inline std::pair<ExtPoly, ExtPoly> ext_divmod(const ExtensionField& E,
                                              const ExtPoly& a, const ExtPoly& b) {
  if (b.is_zero()) throw domain_error("ext_divmod: division by zero");
  ExtPoly q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  Poly lb_inv = E.inv(b.c.back());
  q.c.assign(a.degree() - b.degree() + 1, Poly());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    long k = r.degree() - b.degree();
    Poly f = E.mul(r.c.back(), lb_inv);
    q.c[k] = f;
    for (long i = 0; i <= b.degree(); ++i)
      r.c[k + i] = E.reduce(r.c[k + i] - f * b.c[i]);
    r.strip();
  }
  q.strip();
  return {q, r};
}

inline ExtPoly ext_monic(const ExtensionField& E, const ExtPoly& a) {
  if (a.is_zero()) return a;
  ExtPoly r = a;
  Poly inv = E.inv(a.c.back());
  for (auto& v : r.c) v = E.mul(v, inv);
  return r;
}

inline ExtPoly ext_gcd(const ExtensionField& E, ExtPoly a, ExtPoly b) {
  while (!b.is_zero()) {
    auto r = ext_divmod(E, a, b).second;
    a = b;
    b = r;
  }
  return ext_monic(E, a);
}

inline ExtPoly ext_derivative(const ExtensionField& E, const ExtPoly& a) {
  ExtPoly r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = E.reduce(a.c[i] * Rat(long(i)));
  r.strip();
  return r;
}

namespace detail {

// Res_y(modulus(y), f(x - s*y)) by evaluation/interpolation in x
inline Poly trager_norm(const ExtensionField& E, const ExtPoly& f, long s) {
  long d = E.degree() * f.degree();
  std::vector<Rat> xs, vs;
  long x0 = -(d / 2);
  for (long i = 0; i <= d; ++i) {
    Rat x(x0 + i);
    // g(y) = sum_i coeff_i(y) * (x - s*y)^i
    Poly g;
    Poly lin({x, Rat(-s)});
    for (size_t k = f.c.size(); k-- > 0;) g = g * lin + f.c[k];
    xs.push_back(x);
    vs.push_back(resultant(E.modulus, g));
  }
  return interpolate(xs, vs);
}

// substitute x -> x + s*theta into a rational polynomial, landing in E[x]
inline ExtPoly ext_shift_into(const ExtensionField& E, const Poly& h, long s) {
  ExtPoly acc;
  ExtPoly lin;  // x + s*theta
  lin.c.resize(2);
  lin.c[0] = E.reduce(Poly({Rat(0), Rat(s)}));  // s*y
  lin.c[1] = Poly::constant(Rat(1));
  lin.strip();
  for (size_t i = h.c.size(); i-- > 0;) {
    acc = ext_mul(E, acc, lin);
    ExtPoly cst;
    cst.c = {Poly::constant(h.c[i])};
    cst.strip();
    acc = ext_add(E, acc, cst);
  }
  return acc;
}

}  // namespace detail

namespace detail {

// Trager core: factor a Q-irreducible monic polynomial over E
inline std::vector<ExtPoly> trager_factor_irreducible(const ExtensionField& E,
                                                      const Poly& f,
                                                      long max_norm_degree) {
  if (f.degree() * E.degree() > max_norm_degree)
    throw resource_error("factor_over_extension: norm degree bound exceeded");
  ExtPoly fe = ext_from_rational_poly(f);
  if (f.degree() == 1) return {fe};
  for (long s = 0; s < 40; ++s) {
    Poly norm = trager_norm(E, fe, s);
    if (gcd(norm, derivative(norm)).degree() != 0) continue;  // shift again
    auto nfacs = factor_over_q(norm, std::max<long>(64, norm.degree()));
    std::vector<ExtPoly> out;
    for (const auto& [ni, mult_unused] : nfacs) {
      ExtPoly shifted = ext_shift_into(E, ni, s);
      ExtPoly gi = ext_gcd(E, fe, shifted);
      if (gi.degree() >= 1) out.push_back(gi);
    }
    return out;
  }
  throw resource_error("factor_over_extension: no squarefree shift found");
}

}  // namespace detail

// Irreducible factors over E of a rational polynomial f (with multiplicity),
// by Trager's norm method applied to each Q-irreducible part.
// Resource bound per part: deg(part) * [E:Q] <= max_norm_degree.
inline std::vector<std::pair<ExtPoly, unsigned>> factor_over_extension(
    const ExtensionField& E, const Poly& f, long max_norm_degree = 64) {
  if (f.is_zero()) throw domain_error("factor_over_extension: zero polynomial");
  std::vector<std::pair<ExtPoly, unsigned>> out;
  if (f.degree() == 0) return out;
  for (const auto& [fi, mult] : factor_over_q(f, std::max<long>(64, f.degree()))) {
    for (ExtPoly& gi : detail::trager_factor_irreducible(E, fi, max_norm_degree))
      out.push_back({std::move(gi), mult});
  }
  return out;
}

// f splits into linear factors over Q[x]/(f)?
inline bool is_galois(const Poly& f, long max_norm_degree = 64) {
  if (f.degree() < 1) throw domain_error("is_galois: constant polynomial");
  if (f.degree() == 1) return true;
  ExtensionField E(f);
  auto facs = factor_over_extension(E, f, max_norm_degree);
  for (const auto& [fi, mult] : facs)
    if (fi.degree() != 1) return false;
  return true;
}

// Automorphism of Q(zeta_n, beta) with beta^n = a, presented on generators:
// zeta -> zeta^k, beta -> zeta^j * beta.
struct RadicalAutomorphism {
  unsigned long k, j;
};

struct AbelianCheck {
  bool abelian = false;
  bool galois = false;
  long field_degree = 0;
  std::vector<RadicalAutomorphism> automorphisms;
};

// Exact abelianity check for Q(zeta_n, a^(1/n))/Q. The splitting field of
// x^n - a is built as the tower Q(zeta_n)[y]/h with h an irreducible Trager
// factor; automorphism candidates act on the two generators and are accepted
// when the defining relations are preserved exactly.
inline AbelianCheck abelian_check(const Rat& a, unsigned long n,
                                  long max_norm_degree = 64) {
  if (a == 0) throw domain_error("abelian_check: a must be nonzero");
  if (n == 0) throw domain_error("abelian_check: n must be positive");
  AbelianCheck res;
  if (n == 1) {
    res.abelian = res.galois = true;
    res.field_degree = 1;
    res.automorphisms.push_back({0, 0});
    return res;
  }
  unsigned long phi_n = cyclo_dim(n);
  if (long(n * phi_n) > max_norm_degree)
    throw resource_error("abelian_check: working degree bound exceeded");

  ExtensionField F(from_z(cyclotomic_poly(n)), /*certify=*/false);
  auto facs = factor_over_extension(F, Poly::binomial(n, a), max_norm_degree);
  // any irreducible factor gives the same splitting field
  ExtPoly h = ext_monic(F, facs.front().first);
  long d = h.degree();
  res.field_degree = d * long(phi_n);

  // zeta^j as an F-element
  auto zeta_pow = [&](unsigned long j) {
    std::vector<Rat> v(size_t(j) + 1, Rat(0));
    v[j] = 1;
    return F.reduce(Poly(std::move(v)));
  };

  // sigma on F: substitute zeta^k for zeta
  auto map_coeff = [&](const Poly& c, unsigned long k) {
    Poly z = zeta_pow(k);
    Poly acc, zpow = Poly::constant(Rat(1));
    for (size_t i = 0; i < c.c.size(); ++i) {
      acc = acc + zpow * c.c[i];
      zpow = F.mul(zpow, z);
    }
    return F.reduce(acc);
  };

  for (unsigned long k = 0; k < n; ++k) {
    if (gcd(Int(k), Int(n)) != 1) continue;
    for (unsigned long j = 0; j < n; ++j) {
      // candidate sigma: zeta -> zeta^k, beta -> zeta^j beta.
      // valid iff h^sigma(zeta^j * y) = 0 mod h
      ExtPoly img;
      img.c.assign(h.c.size(), Poly());
      Poly zj = zeta_pow(j);
      Poly zpow = Poly::constant(Rat(1));
      for (size_t i = 0; i < h.c.size(); ++i) {
        img.c[i] = F.mul(map_coeff(h.c[i], k), zpow);
        zpow = F.mul(zpow, zj);
      }
      img.strip();
      ExtPoly rem = ext_divmod(F, img, h).second;
      if (rem.is_zero()) res.automorphisms.push_back({k, j});
    }
  }

  res.galois = long(res.automorphisms.size()) == res.field_degree;
  res.abelian = res.galois;
  for (size_t i = 0; i < res.automorphisms.size() && res.abelian; ++i)
    for (size_t l = i + 1; l < res.automorphisms.size(); ++l) {
      const auto& s1 = res.automorphisms[i];
      const auto& s2 = res.automorphisms[l];
      unsigned long lhs = (s1.k * s2.j + s1.j) % n;
      unsigned long rhs = (s2.k * s1.j + s2.j) % n;
      if (lhs != rhs) {
        res.abelian = false;
        break;
      }
    }
  return res;
}

inline bool is_abelian(const Rat& a, unsigned long n, long max_norm_degree = 64) {
  return abelian_check(a, n, max_norm_degree).abelian;
}

}  // namespace radkit
