#pragma once

// Minimal polynomials of radical expressions and compositum degrees.
// Everything here is independent of the degree theorems: sums are eliminated
// one radical at a time with resultants, the vanishing factor is selected by
// certified interval evaluation, and primitive-element degrees are validated
// by agreement of two independent random draws plus a divisibility check.

#include <functional>
#include <random>

#include "radkit/factor.hpp"
#include "radkit/radical.hpp"

namespace radkit {

namespace detail {

// Newton interpolation through (x_i, v_i)
inline Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& vs) {
  size_t n = xs.size();
  std::vector<Rat> dd = vs;  // divided differences, built in place
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  Poly acc = Poly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    // acc = acc*(x - x_i) + dd[i]
    Poly shifted({-xs[i], Rat(1)});
    acc = acc * shifted + Poly::constant(dd[i]);
  }
  return acc;
}

// g(x0 - y) as a polynomial in y
inline Poly compose_shift(const Poly& g, const Rat& x0) {
  Poly acc;
  Poly lin({x0, Rat(-1)});  // x0 - y
  for (size_t i = g.c.size(); i-- > 0;) {
    acc = acc * lin + Poly::constant(g.c[i]);
  }
  return acc;
}

// Res_y(f(y), g(x - y)): the monic polynomial whose roots are all sums
// alpha + beta of roots of f and g; computed by evaluation/interpolation.
inline Poly resultant_of_sum(const Poly& f, const Poly& g) {
  long d = f.degree() * g.degree();
  std::vector<Rat> xs, vs;
  long x0 = -(d / 2);
  for (long i = 0; i <= d; ++i) {
    Rat x(x0 + i);
    xs.push_back(x);
    vs.push_back(resultant(f, compose_shift(g, x)));
  }
  return interpolate(xs, vs);
}

// select the unique candidate vanishing at the point
inline Poly select_vanishing(const std::vector<Poly>& candidates,
                             const std::function<CItv(unsigned)>& point) {
  if (candidates.size() == 1) return candidates[0];
  for (unsigned bits = 128; bits <= (1u << 14); bits *= 2) {
    CItv z = point(bits);
    long hit = -1;
    bool ambiguous = false;
    for (size_t i = 0; i < candidates.size(); ++i) {
      CItv v = candidates[i].eval(z, bits);
      if (v.contains_zero()) {
        if (hit >= 0) {
          ambiguous = true;
          break;
        }
        hit = long(i);
      }
    }
    if (!ambiguous && hit >= 0) return candidates[hit];
  }
  throw resource_error("select_vanishing: precision ceiling reached");
}

}  // namespace detail

// minimal polynomial over Q of a single radical value
inline Poly radical_minpoly(const Radical& a, long max_degree = 64) {
  Int n = a.order_over_q();
  if (n > max_degree) throw resource_error("radical_minpoly: degree bound exceeded");
  Rat r = a.pow(n.get_si()).as_rational().value();
  Poly f = Poly::binomial(n.get_ui(), r);
  auto facs = factor_over_q(f, max_degree);
  std::vector<Poly> cands;
  for (const auto& [irr, mult] : facs) cands.push_back(irr);
  return detail::select_vanishing(
      cands, [&](unsigned bits) { return a.numeric_eval(bits); });
}

struct ExprTerm {
  Rat coeff;
  std::vector<Radical> atoms;
};

// fold a term into a single radical; empty on zero coefficient
inline std::optional<Radical> fold_term(const ExprTerm& t) {
  if (t.coeff == 0) return std::nullopt;
  Radical r = root_of_rational(t.coeff, 1);
  for (const Radical& a : t.atoms) r = r.mul(a);
  return r;
}

// minimal polynomial of a sum of products of radicals with rational
// coefficients (the exact complex value, principal branches)
inline Poly expr_minpoly(const std::vector<ExprTerm>& expr, long max_degree = 64) {
  std::vector<Radical> terms;
  std::vector<Radical> distinct_atoms;
  for (const ExprTerm& t : expr) {
    for (const Radical& a : t.atoms) {
      bool seen = false;
      for (const Radical& d : distinct_atoms) seen = seen || d == a;
      if (!seen) distinct_atoms.push_back(a);
    }
    auto r = fold_term(t);
    if (r) terms.push_back(*r);
  }
  if (distinct_atoms.size() > 6)
    throw resource_error("expr_minpoly: more than 6 distinct radical atoms");
  if (terms.empty()) return Poly::x();  // the zero value

  Poly m = radical_minpoly(terms[0], max_degree);
  std::vector<Radical> used{terms[0]};
  for (size_t k = 1; k < terms.size(); ++k) {
    Poly g = radical_minpoly(terms[k], max_degree);
    if (m.degree() * g.degree() > max_degree)
      throw resource_error("expr_minpoly: degree bound exceeded");
    Poly res = detail::resultant_of_sum(m, g);
    auto facs = factor_over_q(res, max_degree);
    std::vector<Poly> cands;
    for (const auto& [irr, mult] : facs) cands.push_back(irr);
    used.push_back(terms[k]);
    std::vector<Radical> snapshot = used;
    m = detail::select_vanishing(cands, [snapshot](unsigned bits) {
      CItv acc(0);
      for (const Radical& r : snapshot) acc = cadd(acc, r.numeric_eval(bits), bits);
      return acc;
    });
  }
  return m;
}

// degree of Q(atoms)/Q by a validated primitive element
inline Int compositum_degree(const std::vector<Radical>& atoms,
                             uint64_t seed = 0x5eedbeef, long max_degree = 64) {
  if (atoms.empty()) return 1;
  std::vector<Radical> nontrivial;
  for (const Radical& a : atoms)
    if (!a.as_rational().has_value()) nontrivial.push_back(a);
  if (nontrivial.empty()) return 1;

  Int bound = 1;
  std::vector<Int> atom_degrees;
  for (const Radical& a : nontrivial) {
    atom_degrees.push_back(radical_minpoly(a, max_degree).degree());
    bound *= atom_degrees.back();
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> wdist(1, 9);
  auto draw_degree = [&]() {
    std::vector<ExprTerm> expr;
    for (const Radical& a : nontrivial) {
      int w = wdist(rng) * (rng() % 2 ? 1 : -1);
      expr.push_back(ExprTerm{Rat(w), {a}});
    }
    return Int(expr_minpoly(expr, max_degree).degree());
  };

  // two agreeing independent draws; the degree must be a multiple of every
  // atom degree and at most their product
  auto plausible = [&](const Int& d) {
    if (d > bound) return false;
    for (const Int& ad : atom_degrees)
      if (!divides(ad, d)) return false;
    return true;
  };
  Int prev = draw_degree();
  for (int attempt = 0; attempt < 12; ++attempt) {
    Int cur = draw_degree();
    if (cur == prev && plausible(cur)) return cur;
    prev = std::max(prev, cur);
  }
  throw resource_error("compositum_degree: draws failed to stabilize");
}

}  // namespace radkit
