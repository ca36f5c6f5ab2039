#pragma once

// Exact integer and rational number theory on top of GMP. Everything here is
// arbitrary precision; there is no floating point in this header.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radkit {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow_mod(const Int& base, const Int& e, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Floor division (GMP's fdiv), so remainders are always in [0, |d|).
inline Int fdiv(const Int& n, const Int& d) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int fmod(const Int& n, const Int& d) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& n, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline size_t bit_length(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

// p-adic valuation of n != 0.
inline unsigned valuation(Int n, const Int& p) {
  unsigned v = 0;
  while (divides(p, n)) {
    n = exact_div(n, p);
    ++v;
  }
  return v;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    const uint32_t limit = 1000000;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

struct Factorization {
  int sign = 1;  // +1 or -1
  std::vector<std::pair<Int, unsigned>> factors;  // primes strictly increasing

  Int value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) v *= pow_int(p, e);
    return v;
  }
};

namespace detail {

inline Int pollard_rho(const Int& n) {
  // Brent's cycle variant; n must be odd composite, not a prime power handled
  // upstream. Deterministic parameter sweep keeps results reproducible.
  for (Int c = 1; ; ++c) {
    Int x = 2, y = 2, d = 1;
    Int ys = y;
    unsigned long power = 1, lam = 0;
    auto step = [&](Int& v) { v = fmod(v * v + c, n); };
    while (d == 1) {
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      Int q = 1;
      const unsigned batch = 64;
      for (unsigned i = 0; i < batch && lam < power && d == 1; ++i) {
        step(y);
        ++lam;
        q = fmod(q * abs(x - y), n);
        if ((i & 15u) == 15u || lam == power) {
          d = gcd(q, n);
        }
      }
      if (d == 1) d = gcd(q, n);
    }
    if (d != n && d != 1) return d;
    // rare failure: retry with next c
  }
}

inline void factor_rec(Int n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  // perfect power shortcut helps rho on squares
  for (unsigned long k = 2; k <= bit_length(n); ++k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<Int, unsigned> base;
      factor_rec(root, base);
      for (const auto& [p, e] : base) out[p] += e * k;
      return;
    }
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(exact_div(n, d), out);
}

}  // namespace detail

// Complete factorization by trial division to 1e6 then Pollard rho.
// Desk-scale kernel: inputs beyond 2^128 are rejected.
inline Factorization factorize(Int n) {
  if (n == 0) throw domain_error("factorize: zero input");
  Factorization f;
  if (n < 0) {
    f.sign = -1;
    n = -n;
  }
  if (bit_length(n) > 128) throw resource_error("factorize: input exceeds 2^128");
  std::map<Int, unsigned> acc;
  for (uint32_t p : small_primes()) {
    if (n == 1) break;
    Int ip = p;
    if (ip * ip > n) break;
    while (divides(ip, n)) {
      acc[ip]++;
      n = exact_div(n, ip);
    }
  }
  if (n > 1) {
    if (is_prime(n)) {
      acc[n]++;
    } else {
      detail::factor_rec(n, acc);
    }
  }
  f.factors.assign(acc.begin(), acc.end());
  return f;
}

inline Int euler_phi(const Int& n) {
  if (n < 1) throw domain_error("euler_phi: n must be positive");
  if (n == 1) return 1;
  Int phi = 1;
  for (const auto& [p, e] : factorize(n).factors) phi *= pow_int(p, e - 1) * (p - 1);
  return phi;
}

// Smallest k >= 1 with a^k = 1 (mod n); requires gcd(a, n) = 1.
inline Int multiplicative_order(const Int& a, const Int& n) {
  if (n < 2) throw domain_error("multiplicative_order: modulus must be >= 2");
  if (gcd(a, n) != 1) throw domain_error("multiplicative_order: gcd(a, n) != 1");
  Int phi = euler_phi(n);
  Int ord = phi;
  for (const auto& [q, e] : factorize(phi).factors) {
    for (unsigned i = 0; i < e; ++i) {
      Int cand = exact_div(ord, q);
      if (pow_mod(a, cand, n) == 1)
        ord = cand;
      else
        break;
    }
  }
  return ord;
}

// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
inline int legendre(const Int& a, const Int& p) {
  if (p == 2 || !is_prime(p)) throw domain_error("legendre: p must be an odd prime");
  Int r = pow_mod(fmod(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// Value of the m-th cyclotomic polynomial at x, via Phi_m(x) = (x^m-1)/prod.
inline Int cyclotomic_value(unsigned long m, const Int& x) {
  if (m == 1) return x - 1;
  Int num = pow_int(x, m) - 1;
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d == 0) num = exact_div(num, cyclotomic_value(d, x));
  }
  return num;
}

// A prime q != p with ord_q(p) = m, from the prime divisors of Phi_m(p).
// Empty exactly for the classical exception (p, m) = (2, 6).
inline std::optional<Int> zsygmondy_witness(const Int& p, unsigned long m) {
  if (!is_prime(p)) throw domain_error("zsygmondy_witness: p must be prime");
  if (m < 3) throw domain_error("zsygmondy_witness: m must be >= 3");
  if (p == 2 && m == 6) return std::nullopt;
  Int target = cyclotomic_value(m, p);
  for (const auto& [q, e] : factorize(target).factors) {
    (void)e;
    if (q == p) continue;
    if (multiplicative_order(fmod(p, q), q) == Int(m)) return q;
  }
  return std::nullopt;
}

// ---- rational helpers ----

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline const Int& num(const Rat& r) { return r.get_num(); }
inline const Int& den(const Rat& r) { return r.get_den(); }
inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Reduce into [0, 1).
inline Rat mod1(const Rat& r) {
  Rat out = r - Rat(fdiv(num(r), den(r)));
  out.canonicalize();
  return out;
}

inline Rat pow_rat(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? r : Rat(1) / r;
  unsigned long k = e > 0 ? e : -e;
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  acc.canonicalize();
  return acc;
}

// Exact rational n-th root if it exists.
inline std::optional<Rat> rational_nth_root(const Rat& r, unsigned long n) {
  if (n == 0) throw domain_error("rational_nth_root: n must be positive");
  if (r == 0) return Rat(0);
  if (r < 0 && n % 2 == 0) return std::nullopt;
  Int nu = abs(num(r)), de = den(r);
  Int rn, rd;
  if (mpz_root(rn.get_mpz_t(), nu.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), de.get_mpz_t(), n) == 0) return std::nullopt;
  Rat root = make_rat(r < 0 ? Int(-rn) : rn, rd);
  return root;
}

}  // namespace radkit
