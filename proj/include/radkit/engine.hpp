#pragma once

// Degree computations for radical groups: the Kneser condition and degree,
// binomial irreducibility, the abelian-radical criterion, entangled
// generators of the cyclotomic intersection, Gauss-sum expansions, per-prime
// degree formulas, the total-degree composition, and subfield enumeration.

#include "radkit/cyclo.hpp"
#include "radkit/ffield.hpp"
#include "radkit/rgroup.hpp"

namespace radkit {

// ---- the lattice of radicals lying in Q(zeta_m)* ----
//
// Generated by K*, zeta_m, sqrt(q*) for odd primes q | m (q* = ±q with
// q* = 1 mod 4), 1+zeta_4 when 4 | m, and sqrt(2) when 8 | m. The conductor
// of a quadratic field divides m exactly when its square root lies in
// Q(zeta_m), and 1+zeta_4 = zeta_8*sqrt(2) generates Q(zeta_4).
inline RatLattice cyclotomic_radical_lattice(const Int& m,
                                             std::vector<Int> primes) {
  if (m < 1) throw domain_error("cyclotomic_radical_lattice: bad conductor");
  if (divides(4, m)) primes = lat::union_primes(primes, {2});
  std::vector<std::vector<Rat>> rows;
  size_t dims = primes.size() + 1;
  auto row_of = [&](const Rat& torsion, const Int& p, const Rat& e) {
    std::vector<Rat> v(dims, Rat(0));
    v[0] = torsion;
    if (p != 0) {
      auto it = std::lower_bound(primes.begin(), primes.end(), p);
      v[1 + (it - primes.begin())] = e;
    }
    return v;
  };
  rows.push_back(row_of(make_rat(1, m), 0, Rat(0)));  // zeta_m
  for (const Int& q : primes) {
    if (q == 2 || !divides(q, m)) continue;
    Rat torsion = fmod(q, 4) == 3 ? make_rat(1, 4) : Rat(0);
    rows.push_back(row_of(torsion, q, make_rat(1, 2)));  // sqrt(q*)
  }
  if (divides(4, m)) rows.push_back(row_of(make_rat(1, 8), 2, make_rat(1, 2)));
  if (divides(8, m)) rows.push_back(row_of(Rat(0), 2, make_rat(1, 2)));
  return lat::build(primes, rows);
}

inline bool radical_in_cyclotomic(const Radical& r, const Int& m) {
  std::vector<Int> support = lat::union_primes(lat::primes_of(r), {2});
  return lat::contains(cyclotomic_radical_lattice(m, support), r);
}

// |Gamma intersect Q(zeta_m)* : K*| by counting cosets inside the lattice
inline Int cosets_in_cyclotomic(const RadicalGroup& g, const Int& m,
                                const Int& bound = 8192) {
  if (g.index() == 1) return 1;
  if (g.index() > bound) throw resource_error("cosets_in_cyclotomic: index too large");
  std::vector<Int> support = lat::union_primes(g.lattice().primes, {2});
  RatLattice cyc = cyclotomic_radical_lattice(m, support);
  lat::Quotient q = g.class_group();
  Int count = 0;
  for (const auto& rep : lat::coset_reps(q, bound)) {
    Radical r = lat::radical_of(rep, g.lattice().primes);
    if (lat::contains(cyc, r)) ++count;
  }
  return count;
}

// ---- Kneser condition ----

struct KneserVerdict {
  bool holds = false;
  std::vector<Int> odd_violations;  // odd primes q with zeta_q in Gamma \ K
  bool special_case = false;        // zeta_4 not in K, 1+-zeta_4 in Gamma
};

inline KneserVerdict kneser_condition(const RadicalGroup& g) {
  KneserVerdict v;
  Int m = g.torsion_order();
  for (const auto& [q, e] : factorize(m).factors)
    if (q != 2) v.odd_violations.push_back(q);  // zeta_q never lies in Q
  v.special_case = g.contains(eta()) || g.contains(one_minus_i());
  v.holds = v.odd_violations.empty() && !v.special_case;
  return v;
}

inline KneserVerdict kneser_condition(const FiniteFieldGroup& g) {
  KneserVerdict v;
  for (const auto& [q, e] : factorize(g.e).factors)
    if (q != 2 && !divides(q, g.p - 1)) v.odd_violations.push_back(q);
  if (g.p != 2 && !divides(4, g.p - 1)) {
    // 1 +- zeta_4 lies in Gamma iff its multiplicative order divides e
    Int ord = ff_order_one_plus_zeta(g.p, 4);
    v.special_case = divides(ord, g.e);
  }
  v.holds = v.odd_violations.empty() && !v.special_case;
  return v;
}

template <typename Group>
inline Int kneser_degree(const Group& g) {
  KneserVerdict v = kneser_condition(g);
  if (!v.holds) {
    std::string why = v.special_case ? "1+-zeta_4 lies in Gamma while zeta_4 is not in K"
                                     : "odd torsion outside the base field: q = " +
                                           v.odd_violations.front().get_str();
    throw domain_error("kneser_degree: condition fails (" + why + ")");
  }
  if constexpr (std::is_same_v<Group, FiniteFieldGroup>)
    return exact_div(g.e, g.p - 1);
  else
    return g.index();
}

// ---- binomial irreducibility over Q (exact criterion) ----

inline bool lang_irreducible(const Rat& a, const Int& n) {
  if (a == 0) throw domain_error("lang_irreducible: a must be nonzero");
  if (n < 2) throw domain_error("lang_irreducible: n must be at least 2");
  for (const auto& [q, e] : factorize(n).factors) {
    if (rational_nth_root(a, q.get_ui()).has_value()) return false;
  }
  if (divides(4, n)) {
    Rat b = -a / 4;
    b.canonicalize();
    if (rational_nth_root(b, 4).has_value()) return false;
  }
  return true;
}

// ---- abelian radical criterion over Q ----

struct SchinzelResult {
  bool abelian = false;
  std::optional<std::pair<Int, Rat>> witness;  // (m, b) with a^m = b^n
};

inline SchinzelResult schinzel_abelian(const Rat& a, const Int& n) {
  if (a == 0) throw domain_error("schinzel_abelian: a must be nonzero");
  if (n < 1) throw domain_error("schinzel_abelian: n must be positive");
  SchinzelResult res;
  // m ranges over divisors of n with zeta_m in Q: m in {1, 2}
  if (auto b = rational_nth_root(a, n.get_ui())) {
    res.abelian = true;
    res.witness = {Int(1), *b};
    return res;
  }
  if (divides(2, n)) {
    Rat a2 = a * a;
    a2.canonicalize();
    if (auto b = rational_nth_root(a2, n.get_ui())) {
      res.abelian = true;
      res.witness = {Int(2), abs(*b)};
      return res;
    }
  }
  return res;
}

// ---- entanglement parameters ----

struct EntanglementParams {
  Int ell;
  std::optional<long> t;  // empty means infinite
  std::optional<long> w;  // empty when undefined (odd ell over Q)
  std::string branch;
};

inline EntanglementParams entanglement_params(const BaseField& base, const Int& ell) {
  if (!is_prime(ell)) throw domain_error("entanglement_params: ell must be prime");
  EntanglementParams p;
  p.ell = ell;
  if (base.rational_base) {
    if (ell == 2) {
      // zeta_8 + zeta_8^-1 = sqrt(2) is irrational, zeta_4 + zeta_4^-1 = 0
      p.t = 2;
      p.w = 2;
      p.branch = "q_two";
    } else {
      // zeta_(ell^t) has conductor ell^t, which divides 4*(squarefree odd)
      // only for t = 1
      p.t = 1;
      p.branch = "q_odd";
    }
    return p;
  }
  if (ell == base.p) throw domain_error("entanglement_params: ell equals char");
  p.t = std::nullopt;  // F_p(zeta_2P) contains all ell-power roots of unity
  if (ell != 2 || divides(4, base.p - 1)) {
    p.w = long(valuation(base.p - 1, ell));
    p.branch = "ff_kummer";
  } else {
    // zeta_(2^w) + zeta_(2^w)^-1 in F_p iff p = +-1 mod 2^w
    p.w = long(valuation(base.p + 1, 2));
    p.branch = "ff_two_special";
  }
  return p;
}

// ---- entangled generators ----

struct EntangledGenerators {
  BaseField base;
  Int ell;
  std::vector<Radical> core;       // finite core generators beyond K*
  bool all_square_roots = false;   // ell = 2 over Q: every sqrt of a rational
  bool everything = false;         // F_p: all ell-primary radicals

  // finite generating set specialized to a prime support
  std::vector<Radical> finite_generators(const std::vector<Int>& primes) const {
    std::vector<Radical> out = core;
    if (all_square_roots)
      for (const Int& p : primes)
        out.push_back(Radical::make(Rat(0), {{p, make_rat(1, 2)}}));
    return out;
  }

  bool member(const Radical& r) const {
    if (everything) return true;
    std::vector<Int> primes = lat::union_primes(lat::primes_of(r), {2});
    RatLattice L = lat::build_from_radicals(primes, finite_generators(primes));
    return lat::contains(L, r);
  }
};

inline EntangledGenerators entangled_generators(const BaseField& base, const Int& ell) {
  if (!is_prime(ell)) throw domain_error("entangled_generators: ell must be prime");
  EntangledGenerators g;
  g.base = base;
  g.ell = ell;
  if (!base.rational_base) {
    if (ell == base.p) throw domain_error("entangled_generators: ell equals char");
    g.everything = true;
    return g;
  }
  if (ell == 2) {
    // <zeta_4, 1+zeta_4, sqrt(Q*)>; t = w keeps 1+zeta_4 in the list
    g.core = {zeta(4), eta()};
    g.all_square_roots = true;
  } else {
    g.core = {zeta(ell)};
  }
  return g;
}

// ---- Gauss sums ----

// sum_(i=1..p-1) (i/p) zeta_p^i; squares to (-1)^((p-1)/2) * p
inline CycloElement gauss_sum(const Int& p) {
  if (p == 2 || !is_prime(p)) throw domain_error("gauss_sum: p must be an odd prime");
  unsigned long pu = p.get_ui();
  std::vector<Rat> coeffs(pu, Rat(0));
  for (unsigned long i = 1; i < pu; ++i) coeffs[i] = Rat(legendre(Int(i), p));
  return cyclo_from_poly(pu, Poly(std::move(coeffs)));
}

// ---- cyclotomic expressions ----

namespace detail {

// certified square root of a prime inside Q(zeta_N): gauss sum with a
// root-of-unity correction chosen by interval arithmetic, then re-verified
inline CycloElement sqrt_prime_in_cyclotomic(const Int& p, unsigned long N) {
  CycloElement cand;
  if (p == 2) {
    cand = cyclo_embed(
        cyclo_add(cyclo_zeta_pow(8, 1), cyclo_zeta_pow(8, 7)), N);
  } else {
    CycloElement g = cyclo_embed(gauss_sum(p), N);
    if (fmod(p, 4) == 3) {
      // g^2 = -p: divide by the principal zeta_4
      CycloElement z4inv = cyclo_zeta_pow(N, -long(N / 4));
      g = cyclo_mul(g, z4inv);
    }
    cand = g;
  }
  // cand^2 = p exactly; fix the sign numerically
  if (!(cyclo_mul(cand, cand) == cyclo_rational(N, Rat(p))))
    throw domain_error("sqrt_prime_in_cyclotomic: square check failed");
  for (unsigned bits = 96; bits <= (1u << 13); bits *= 2) {
    CItv v = cyclo_eval(cand, bits);
    if (v.re.is_positive()) return cand;
    if (v.re.is_negative()) return cyclo_neg(cand);
  }
  throw resource_error("sqrt_prime_in_cyclotomic: sign not separable");
}

}  // namespace detail

// If the radical lies in the group generated by the entangled generators
// (all exponents half-integral), produce its exact expansion in Q(zeta_N)
// and verify it; otherwise empty.
inline std::optional<std::pair<unsigned long, CycloElement>> cyclotomic_expression(
    const Radical& a) {
  for (const auto& [p, e] : a.exponents())
    if (den(e) > 2) return std::nullopt;

  // torsion with a denominator of the form 2*odd folds its sign into the
  // rational part, so conductors are never congruent to 2 mod 4
  Rat u = a.torsion();
  Rat sign_part(1);
  if (fmod(den(u), 4) == 2) {
    u = mod1(u - make_rat(1, 2));
    sign_part = -1;
  }
  // conductor: reduced torsion denominator joined with each sqrt's field
  Int N = den(u);
  for (const auto& [p, e] : a.exponents()) {
    if (den(e) != 2) continue;
    if (p == 2)
      N = lcm(N, Int(8));
    else
      N = lcm(N, fmod(p, 4) == 1 ? p : 4 * p);
  }
  unsigned long Nu = N.get_ui();

  Int torsion_power = num(u) * exact_div(N, den(u));
  CycloElement out = cyclo_zeta_pow(Nu, torsion_power.get_si());
  Rat rational_part = sign_part;
  for (const auto& [p, e] : a.exponents()) {
    Int whole = fdiv(num(e), den(e));
    rational_part *= pow_rat(Rat(p), whole.get_si());
    if (den(e) == 2) {
      out = cyclo_mul(out, detail::sqrt_prime_in_cyclotomic(p, Nu));
    }
  }
  out = cyclo_scale(out, rational_part);

  // exact verification: out^n equals the rational n-th power
  Int n = a.order_over_q();
  Rat target = a.pow(n.get_si()).as_rational().value();
  if (!(cyclo_pow(out, n.get_ui()) == cyclo_rational(Nu, target)))
    throw domain_error("cyclotomic_expression: power verification failed");

  // certified branch match: out and a are n-th roots of the same number;
  // distinct ones are at least 2|a|sin(pi/n) apart
  for (unsigned bits = 128; bits <= (1u << 13); bits *= 2) {
    CItv ev = cyclo_eval(out, bits);
    CItv av = a.numeric_eval(bits);
    CItv diff = csub(ev, av, bits);
    // |diff| upper bound via |re| + |im|
    auto abs_hi = [](const DItv& itv) {
      Dyadic lo = itv.lo, hi = itv.hi;
      Dyadic a1 = lo.mant < 0 ? Dyadic(-lo.mant, lo.exp) : lo;
      Dyadic a2 = hi.mant < 0 ? Dyadic(-hi.mant, hi.exp) : hi;
      return dy::cmp(a1, a2) >= 0 ? a1 : a2;
    };
    Dyadic dist_hi = dy::add(abs_hi(diff.re), abs_hi(diff.im));
    // lower bound for |a|: from the magnitude of av (use max coordinate lo)
    auto abs_lo = [](const DItv& itv) {
      if (itv.lo.mant > 0) return itv.lo;
      if (itv.hi.mant < 0) return Dyadic(-itv.hi.mant, itv.hi.exp);
      return Dyadic(0);
    };
    Dyadic mag_lo = abs_lo(av.re);
    Dyadic im_lo = abs_lo(av.im);
    if (dy::cmp(im_lo, mag_lo) > 0) mag_lo = im_lo;
    if (n == 1) return std::make_pair(Nu, out);
    auto [cosv, sinv] = cos_sin_2pi(make_rat(1, 2 * n), bits);
    (void)cosv;
    // separation >= 2 * |a| * sin(pi/n); |a| >= mag_lo
    Dyadic sep = dy::mul(Dyadic(2), dy::mul(mag_lo, sinv.lo));
    if (sep.mant > 0 && dy::cmp(dist_hi, sep) < 0)
      return std::make_pair(Nu, out);
  }
  throw resource_error("cyclotomic_expression: branch not separable");
}

// ---- per-prime degree formulas ----

struct TheoremDegree {
  Int degree;
  std::string branch;
  long tau = 0, epsilon = 0;
  Int index_ell = 1;
  Int index_entangled = 1;  // |Gamma_(ell,E) : K*| (or over K(zeta_4)*)
};

namespace detail {

inline Int validate_w_set(const std::vector<Int>& W, const Int& ell) {
  Int c = 1;
  for (const Int& q : W) {
    if (q == 2 || q == ell || !is_prime(q))
      throw domain_error("W must consist of odd primes different from ell");
    if (divides(q, c)) throw domain_error("W must be duplicate-free");
    c *= q;
  }
  return c;
}

}  // namespace detail

// odd-prime degree formula over Q: Gamma_ell is ell-primary, W lists the odd
// prime orders of adjoined roots of unity; returns [Q(W, Gamma_ell) : Q]
inline TheoremDegree degree_odd(const RadicalGroup& g_ell,
                                const std::vector<Int>& W, const Int& ell) {
  if (!is_prime(ell) || ell == 2) throw domain_error("degree_odd: ell must be an odd prime");
  Int c = detail::validate_w_set(W, ell);
  Int idx = g_ell.index();
  {
    Int rest = idx;
    while (divides(ell, rest)) rest = exact_div(rest, ell);
    if (rest != 1) throw domain_error("degree_odd: group is not ell-primary");
  }
  TheoremDegree td;
  td.index_ell = idx;
  if (!g_ell.contains(zeta(ell))) {
    td.branch = "zeta_ell_not_in_gamma";
    td.degree = idx * euler_phi(c);
    td.index_entangled = 1;
    return td;
  }
  // tau: largest with zeta_(ell^tau) in Gamma and in Q(zeta_(c*ell));
  // epsilon: same with Q(zeta_ell); over Q conductor divisibility caps both
  long tau = 0;
  for (long j = 1;; ++j) {
    Int lj = pow_int(ell, j);
    if (!divides(lj, c * ell)) break;
    if (!g_ell.contains(zeta(lj))) break;
    tau = j;
  }
  long eps = 0;
  for (long j = 1;; ++j) {
    Int lj = pow_int(ell, j);
    if (!divides(lj, ell)) break;
    if (!g_ell.contains(zeta(lj))) break;
    eps = j;
  }
  td.branch = "zeta_ell_in_gamma";
  td.tau = tau;
  td.epsilon = eps;
  // [Q(zeta_(ell^tau)) : Q(zeta_ell)]
  Int crel = exact_div(euler_phi(pow_int(ell, tau)), euler_phi(ell));
  td.degree = exact_div(idx * euler_phi(c * ell), pow_int(ell, eps) * crel);
  td.index_entangled = pow_int(ell, eps);
  return td;
}

// odd-prime degree formula over F_p
inline TheoremDegree degree_odd_ff(const FiniteFieldGroup& g, const std::vector<Int>& W,
                                   const Int& ell) {
  if (!is_prime(ell) || ell == 2)
    throw domain_error("degree_odd_ff: ell must be an odd prime");
  if (ell == g.p) throw domain_error("degree_odd_ff: ell equals char");
  Int c = detail::validate_w_set(W, ell);
  Int idx = exact_div(g.e, g.p - 1);
  {
    Int rest = idx;
    while (divides(ell, rest)) rest = exact_div(rest, ell);
    if (rest != 1) throw domain_error("degree_odd_ff: group is not ell-primary");
  }
  auto ord = [&](const Int& mod) {
    return mod == 1 ? Int(1) : multiplicative_order(fmod(g.p, mod), mod);
  };
  Int dW = ord(c);
  TheoremDegree td;
  td.index_ell = idx;
  if (divides(ell, g.p - 1)) {
    // zeta_ell in K: Kummer branch, divide by the entangled part
    td.branch = "zeta_ell_in_k";
    Int ent = exact_div(gcd(g.e, pow_int(g.p, dW.get_ui()) - 1), g.p - 1);
    td.index_entangled = ent;
    td.degree = exact_div(idx * dW, ent);
    return td;
  }
  if (!divides(ell, g.e)) {
    td.branch = "zeta_ell_not_in_gamma";
    td.degree = idx * dW;
    td.index_entangled = 1;
    return td;
  }
  long a = long(valuation(g.e, ell));
  Int d_ell = ord(ell);
  Int dWl = lcm(dW, d_ell);
  long tau = std::min<long>(a, valuation(pow_int(g.p, dWl.get_ui()) - 1, ell));
  long eps = std::min<long>(a, valuation(pow_int(g.p, d_ell.get_ui()) - 1, ell));
  td.branch = "zeta_ell_in_gamma";
  td.tau = tau;
  td.epsilon = eps;
  Int crel = exact_div(ord(pow_int(ell, tau)), d_ell);
  td.degree = exact_div(idx * dWl, pow_int(ell, eps) * crel);
  td.index_entangled = pow_int(ell, eps);
  return td;
}

// ell = 2 degree formula over Q, regular and special Kneser branches
inline TheoremDegree degree_two(const RadicalGroup& g2, const std::vector<Int>& W) {
  Int c = detail::validate_w_set(W, 2);  // rejects 2 and non-primes
  Int idx = g2.index();
  {
    Int rest = idx;
    while (divides(Int(2), rest)) rest = exact_div(rest, 2);
    if (rest != 1) throw domain_error("degree_two: group is not 2-primary");
  }
  TheoremDegree td;
  td.index_ell = idx;
  bool special = g2.contains(eta()) || g2.contains(one_minus_i());
  if (!special) {
    td.branch = "two_regular";
    Int ent = cosets_in_cyclotomic(g2, c);
    td.index_entangled = ent;
    td.degree = exact_div(idx * euler_phi(c), ent);
    return td;
  }
  td.branch = "two_special_kneser";
  Int idx4 = index_over_q_i(g2);
  // Gamma_(2,E) = <Gamma_2, Q(zeta_4)*> intersect Q(zeta_(4c)), over Q(zeta_4)*
  std::vector<Int> support = lat::union_primes(g2.lattice().primes, {2});
  std::vector<Radical> top = g2.generators();
  top.push_back(zeta(4));
  top.push_back(eta());
  RatLattice big = lat::build_from_radicals(support, top);
  RatLattice q4 = lat::build_from_radicals(support, {zeta(4), eta()});
  RatLattice cyc = cyclotomic_radical_lattice(4 * c, support);
  lat::Quotient quot = lat::quotient(big, q4);
  Int ent = 0;
  for (const auto& rep : lat::coset_reps(quot, Int(8192))) {
    std::vector<Rat> v = rep;
    if (v.empty()) v.assign(support.size() + 1, Rat(0));
    if (lat::contains(cyc, lat::radical_of(v, support))) ++ent;
  }
  td.index_entangled = ent;
  // [K(Gamma_2):K] = 2*idx4; total = deg * [K(W,zeta_4):K] / (2 * ent)
  td.degree = exact_div(2 * idx4 * euler_phi(4 * c), 2 * ent);
  return td;
}

// ---- total degree ----

struct PrimeFactorReport {
  Int ell;
  Int factor;  // [C(Gamma_ell) : C] over the torsion field C
  std::string branch;
  long tau = 0, epsilon = 0;
  Int index_ell = 1;
  Int index_entangled = 1;
};

struct DegreeReport {
  BaseField base = BaseField::Q();
  Int total = 1;
  Int index = 1;
  Int conductor = 1;          // torsion order m of Gamma
  Int cyclotomic_degree = 1;  // [Q(zeta_m):Q], or the full degree over F_p
  std::string composition;    // "product" over Q, "lcm" over F_p
  std::vector<PrimeFactorReport> per_prime;
  KneserVerdict kneser;
};

// Composition over Q, anchored at the torsion field C = Q(zeta_m):
//   total = phi(m) * prod_ell |Gamma_ell : Gamma_ell intersect C*|.
// Relative to C the Kneser condition always holds (any 1+-zeta_4 entanglement
// forces zeta_4 into the torsion), so each factor is a plain Kneser index.
inline DegreeReport total_degree(const RadicalGroup& g) {
  DegreeReport rep;
  rep.base = g.base();
  rep.index = g.index();
  rep.conductor = g.torsion_order();
  rep.cyclotomic_degree = euler_phi(rep.conductor);
  rep.composition = "product";
  rep.kneser = kneser_condition(g);
  rep.total = rep.cyclotomic_degree;
  if (rep.index > 1) {
    for (const auto& [ell, e] : factorize(rep.index).factors) {
      RadicalGroup gl = g.ell_part(ell);
      PrimeFactorReport pr;
      pr.ell = ell;
      pr.index_ell = gl.index();
      pr.index_entangled = cosets_in_cyclotomic(gl, rep.conductor);
      pr.factor = exact_div(pr.index_ell, pr.index_entangled);
      if (ell == 2) {
        pr.branch = rep.kneser.special_case ? "two_special_kneser" : "two_regular";
      } else {
        bool zl_in = g.contains(zeta(ell));
        pr.branch = zl_in ? "zeta_ell_in_gamma" : "zeta_ell_not_in_gamma";
        if (zl_in) {
          pr.tau = 1;
          pr.epsilon = 1;
        }
      }
      rep.per_prime.push_back(pr);
      rep.total *= pr.factor;
    }
  }
  return rep;
}

inline DegreeReport total_degree(const FiniteFieldGroup& g) {
  DegreeReport rep;
  rep.base = BaseField::Fp(g.p);
  rep.index = exact_div(g.e, g.p - 1);
  rep.conductor = g.e;  // Gamma is exactly mu_e
  rep.total = ff_degree(g);
  rep.cyclotomic_degree = rep.total;
  rep.composition = "lcm";
  rep.kneser = kneser_condition(g);
  if (rep.index > 1) {
    for (const auto& [ell, e] : factorize(rep.index).factors) {
      PrimeFactorReport pr;
      pr.ell = ell;
      pr.index_ell = pow_int(ell, e);
      Int e_ell = (g.p - 1) * pr.index_ell;
      pr.factor = ff_degree(FiniteFieldGroup{g.p, e_ell});
      pr.branch = divides(ell, g.p - 1) ? "zeta_ell_in_k" : "zeta_ell_not_in_k";
      rep.per_prime.push_back(pr);
    }
  }
  return rep;
}

// ---- subfield enumeration (Halter-Koch) ----

struct SubfieldsResult {
  bool applicable = false;
  std::string reason;
  std::vector<std::pair<RadicalGroup, Int>> fields;  // subgroup, degree
};

inline SubfieldsResult subfields(const RadicalGroup& g, const Int& bound = 256) {
  SubfieldsResult res;
  if (g.index() > bound) throw resource_error("subfields: index exceeds bound");
  KneserVerdict kv = kneser_condition(g);
  if (!kv.holds) {
    res.reason = "degree differs from index: Kneser condition fails";
    return res;
  }
  if (divides(4, g.index())) {
    // side condition: need "y in K(Gamma) and (1+zeta_4)y in Gamma implies
    // zeta_4 in K(y) or K(y zeta_4)". If Gamma is real the premise is vacuous
    // (no real multiple of 1+zeta_4 is real).
    bool real = divides(g.torsion_order(), 2);
    for (const Radical& r : g.generators()) real = real && r.is_real();
    if (!real) {
      // conservative candidate probe: y = gamma/(1+zeta_4) over coset reps
      lat::Quotient q = g.class_group();
      bool ok = true;
      for (const auto& rep : lat::coset_reps(q, bound)) {
        std::vector<Rat> v = rep;
        if (v.empty()) v.assign(g.lattice().primes.size() + 1, Rat(0));
        Radical gamma = lat::radical_of(v, g.lattice().primes);
        Radical y = gamma.mul(eta().inv());
        Int dy = total_degree(RadicalGroup::make(g.base(), {y})).total;
        Int dyi = total_degree(RadicalGroup::make(g.base(), {y, zeta(4)})).total;
        Radical yz = y.mul(zeta(4));
        Int dz = total_degree(RadicalGroup::make(g.base(), {yz})).total;
        Int dzi = total_degree(RadicalGroup::make(g.base(), {yz, zeta(4)})).total;
        if (dyi != dy && dzi != dz) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        res.reason = "side condition for 4 | index not certifiable";
        return res;
      }
    }
  }
  res.applicable = true;
  for (const RadicalGroup& sub : g.subgroups_containing_base(bound))
    res.fields.push_back({sub, total_degree(sub).total});
  return res;
}

}  // namespace radkit
