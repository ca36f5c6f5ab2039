#pragma once

// Dyadic interval arithmetic with directed rounding. Used only to
// disambiguate root choices: every equality in the kernel is decided
// exactly, intervals just separate finitely many known candidates.

#include <map>
#include <utility>

#include "radkit/arith.hpp"

namespace radkit {

// value = mant * 2^exp
struct Dyadic {
  Int mant = 0;
  long exp = 0;

  Dyadic() = default;
  Dyadic(Int m, long e) : mant(std::move(m)), exp(e) {}
  explicit Dyadic(long v) : mant(v), exp(0) {}

  bool is_zero() const { return mant == 0; }
};

namespace dy {

inline void align(Dyadic& a, Dyadic& b) {
  if (a.exp == b.exp) return;
  if (a.exp > b.exp) {
    a.mant <<= (a.exp - b.exp);
    a.exp = b.exp;
  } else {
    b.mant <<= (b.exp - a.exp);
    b.exp = a.exp;
  }
}

inline int cmp(Dyadic a, Dyadic b) {
  align(a, b);
  return ::cmp(a.mant, b.mant);
}

inline Dyadic add(Dyadic a, Dyadic b) {
  align(a, b);
  return {a.mant + b.mant, a.exp};
}

inline Dyadic sub(Dyadic a, Dyadic b) {
  align(a, b);
  return {a.mant - b.mant, a.exp};
}

inline Dyadic mul(const Dyadic& a, const Dyadic& b) {
  return {a.mant * b.mant, a.exp + b.exp};
}

inline Dyadic neg(const Dyadic& a) { return {-a.mant, a.exp}; }

// Round down/up to at most prec mantissa bits.
inline Dyadic round_dir(const Dyadic& x, unsigned prec, bool up) {
  size_t bits = bit_length(abs(x.mant));
  if (bits <= prec) return x;
  long shift = long(bits - prec);
  Int q;
  if (up)
    mpz_cdiv_q_2exp(q.get_mpz_t(), x.mant.get_mpz_t(), shift);
  else
    mpz_fdiv_q_2exp(q.get_mpz_t(), x.mant.get_mpz_t(), shift);
  return {q, x.exp + shift};
}

}  // namespace dy

// closed interval [lo, hi]
struct DItv {
  Dyadic lo, hi;

  DItv() = default;
  DItv(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit DItv(long v) : lo(Dyadic(v)), hi(Dyadic(v)) {}

  static DItv from_rat(const Rat& r, unsigned prec) {
    // scale to prec bits: floor/ceil of num*2^prec/den
    Int n = num(r), d = den(r);
    Int scaled_lo, scaled_hi;
    Int n2 = n << prec;
    mpz_fdiv_q(scaled_lo.get_mpz_t(), n2.get_mpz_t(), d.get_mpz_t());
    mpz_cdiv_q(scaled_hi.get_mpz_t(), n2.get_mpz_t(), d.get_mpz_t());
    return {Dyadic(scaled_lo, -long(prec)), Dyadic(scaled_hi, -long(prec))};
  }

  bool contains_zero() const { return lo.mant <= 0 && hi.mant >= 0; }
  bool is_positive() const { return lo.mant > 0; }
  bool is_negative() const { return hi.mant < 0; }

  Dyadic width() const { return dy::sub(hi, lo); }
};

inline DItv round_out(const DItv& x, unsigned prec) {
  return {dy::round_dir(x.lo, prec, false), dy::round_dir(x.hi, prec, true)};
}

inline DItv iadd(const DItv& a, const DItv& b, unsigned prec) {
  return round_out({dy::add(a.lo, b.lo), dy::add(a.hi, b.hi)}, prec);
}

inline DItv isub(const DItv& a, const DItv& b, unsigned prec) {
  return round_out({dy::sub(a.lo, b.hi), dy::sub(a.hi, b.lo)}, prec);
}

inline DItv ineg(const DItv& a) { return {dy::neg(a.hi), dy::neg(a.lo)}; }

inline DItv imul(const DItv& a, const DItv& b, unsigned prec) {
  Dyadic c[4] = {dy::mul(a.lo, b.lo), dy::mul(a.lo, b.hi), dy::mul(a.hi, b.lo),
                 dy::mul(a.hi, b.hi)};
  Dyadic lo = c[0], hi = c[0];
  for (int i = 1; i < 4; ++i) {
    if (dy::cmp(c[i], lo) < 0) lo = c[i];
    if (dy::cmp(c[i], hi) > 0) hi = c[i];
  }
  return round_out({lo, hi}, prec);
}

inline DItv iscale(const DItv& a, const Rat& c, unsigned prec) {
  return imul(a, DItv::from_rat(c, prec + 8), prec);
}

inline bool disjoint(const DItv& a, const DItv& b) {
  return dy::cmp(a.hi, b.lo) < 0 || dy::cmp(b.hi, a.lo) < 0;
}

// Certified enclosure of x^(1/n) for rational x > 0, via one integer root.
inline DItv nth_root_itv(const Rat& x, unsigned long n, unsigned prec) {
  if (x <= 0) throw domain_error("nth_root_itv: radicand must be positive");
  unsigned long P = prec + 4;
  // scaled = floor(x * 2^(n*P))
  Int scaled = (num(x) << (n * P)) / den(x);
  Int r;
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), n);
  return round_out({Dyadic(r, -long(P)), Dyadic(r + 2, -long(P))}, prec);
}

// pi as a dyadic interval; Machin's formula with integer fixed point.
inline DItv pi_itv(unsigned prec) {
  static std::map<unsigned, DItv> cache;
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;
  const unsigned long P = prec + 16;
  auto arctan_inv = [&](unsigned long x) {
    // scale 2^P; truncation error bounded by number of terms (each floor
    // drops < 1) plus first omitted term, all pushed into the slop below.
    Int acc = 0;
    Int power = (Int(1) << P) / x;  // x^-(2k+1) scaled, k = 0
    Int x2 = Int(x) * x;
    unsigned long k = 0;
    Int slop = 4;
    while (power != 0) {
      Int term = power / (2 * k + 1);
      if (k % 2 == 0)
        acc += term;
      else
        acc -= term;
      power /= x2;
      ++k;
      slop += 3;  // floor errors in power chain and term division
    }
    return std::pair<Int, Int>(acc, slop);
  };
  auto [a5, s5] = arctan_inv(5);
  auto [a239, s239] = arctan_inv(239);
  Int v = 16 * a5 - 4 * a239;
  Int slop = 16 * s5 + 4 * s239 + 8;
  DItv out = round_out(
      {Dyadic(v - slop, -long(P)), Dyadic(v + slop, -long(P))}, prec);
  cache[prec] = out;
  return out;
}

namespace detail {

// sin/cos of 2*pi*u for u in [0, 1/4], by Taylor series on the interval.
inline std::pair<DItv, DItv> sincos_quarter(const Rat& u, unsigned prec) {
  unsigned wp = prec + 32;
  DItv x = imul(pi_itv(wp), iscale(DItv(2), u, wp), wp);  // x in [0, pi/2]
  DItv x2 = imul(x, x, wp);
  // sin: sum x^(2k+1)/(2k+1)!; cos: sum x^(2k)/(2k)!
  DItv sin_acc(0), cos_acc(0);
  DItv term_s = x;        // x^(2k+1)/(2k+1)!
  DItv term_c = DItv(1);  // x^(2k)/(2k)!
  unsigned k = 0;
  while (true) {
    if (k % 2 == 0) {
      sin_acc = iadd(sin_acc, term_s, wp);
      cos_acc = iadd(cos_acc, term_c, wp);
    } else {
      sin_acc = isub(sin_acc, term_s, wp);
      cos_acc = isub(cos_acc, term_c, wp);
    }
    ++k;
    term_s = imul(term_s, x2, wp);
    term_s = iscale(term_s, make_rat(1, Int(2 * k) * Int(2 * k + 1)), wp);
    term_c = imul(term_c, x2, wp);
    term_c = iscale(term_c, make_rat(1, Int(2 * k) * Int(2 * k - 1)), wp);
    // stop when the next term is below target; |x| <= 2 so the alternating
    // tail is bounded by the first omitted term once terms decrease
    if (2 * k > 8 && dy::cmp(term_s.hi, Dyadic(1, -long(prec) - 16)) < 0 &&
        dy::cmp(term_c.hi, Dyadic(1, -long(prec) - 16)) < 0) {
      break;
    }
    if (k > wp) throw resource_error("sincos did not converge");
  }
  // add omitted-tail slop
  Dyadic slop(1, -long(prec) - 14);
  DItv tail{dy::neg(slop), slop};
  return {round_out(iadd(sin_acc, tail, wp), prec),
          round_out(iadd(cos_acc, tail, wp), prec)};
}

}  // namespace detail

// (cos, sin) of 2*pi*u for rational u, reduced exactly by quadrant symmetry.
inline std::pair<DItv, DItv> cos_sin_2pi(const Rat& u0, unsigned prec) {
  Rat u = mod1(u0);
  // quadrant q = floor(4u); r = u - q/4 in [0, 1/4)
  Int q4 = fdiv(4 * num(u), den(u));
  long q = q4.get_si() % 4;
  Rat r = u - make_rat(q4, 4);
  auto [s, c] = detail::sincos_quarter(r, prec);
  switch (q) {
    case 0: return {c, s};
    case 1: return {ineg(s), c};
    case 2: return {ineg(c), ineg(s)};
    default: return {s, ineg(c)};
  }
}

// complex rectangle
struct CItv {
  DItv re, im;

  CItv() = default;
  CItv(DItv r, DItv i) : re(std::move(r)), im(std::move(i)) {}
  explicit CItv(long v) : re(DItv(v)), im(DItv(0)) {}

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

inline CItv cadd(const CItv& a, const CItv& b, unsigned prec) {
  return {iadd(a.re, b.re, prec), iadd(a.im, b.im, prec)};
}

inline CItv csub(const CItv& a, const CItv& b, unsigned prec) {
  return {isub(a.re, b.re, prec), isub(a.im, b.im, prec)};
}

inline CItv cmul(const CItv& a, const CItv& b, unsigned prec) {
  return {isub(imul(a.re, b.re, prec), imul(a.im, b.im, prec), prec),
          iadd(imul(a.re, b.im, prec), imul(a.im, b.re, prec), prec)};
}

inline CItv cscale(const CItv& a, const Rat& c, unsigned prec) {
  return {iscale(a.re, c, prec), iscale(a.im, c, prec)};
}

inline bool cdisjoint(const CItv& a, const CItv& b) {
  return disjoint(a.re, b.re) || disjoint(a.im, b.im);
}

}  // namespace radkit
