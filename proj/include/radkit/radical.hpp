#pragma once

// Canonical representation of a specific radical value in a fixed algebraic
// closure of Q inside C. A Radical is zeta_M^k * prod p^(e_p) with the
// principal conventions zeta_M = e^(2*pi*i/M) and p^e the positive real
// power; torsion u = k/M is kept in [0, 1), exponents are reduced rationals
// keyed by primes. Two Radicals are equal as complex numbers iff their
// canonical forms coincide.

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "radkit/arith.hpp"
#include "radkit/interval.hpp"

namespace radkit {

struct parse_error : std::runtime_error {
  size_t offset;
  parse_error(const std::string& msg, size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)),
        offset(off) {}
};

class Radical {
 public:
  Radical() = default;

  // Canonicalizing constructor: torsion reduced mod 1, exponents reduced,
  // zero exponents dropped. Keys must be primes.
  static Radical make(const Rat& torsion, const std::map<Int, Rat>& exponents) {
    Radical r;
    r.torsion_ = mod1(torsion);
    for (const auto& [p, e] : exponents) {
      if (p < 2 || !is_prime(p)) throw domain_error("Radical: base must be prime");
      if (e != 0) r.exp_[p] = e;
    }
    return r;
  }

  const Rat& torsion() const { return torsion_; }
  const std::map<Int, Rat>& exponents() const { return exp_; }

  bool operator==(const Radical& o) const {
    return torsion_ == o.torsion_ && exp_ == o.exp_;
  }
  bool operator<(const Radical& o) const {  // arbitrary canonical order
    if (torsion_ != o.torsion_) return torsion_ < o.torsion_;
    return std::lexicographical_compare(
        exp_.begin(), exp_.end(), o.exp_.begin(), o.exp_.end(),
        [](const auto& a, const auto& b) {
          if (a.first != b.first) return a.first < b.first;
          return a.second < b.second;
        });
  }

  bool is_one() const { return torsion_ == 0 && exp_.empty(); }

  Radical mul(const Radical& o) const {
    Radical r;
    r.torsion_ = mod1(torsion_ + o.torsion_);
    r.exp_ = exp_;
    for (const auto& [p, e] : o.exp_) {
      Rat v = r.exp_.count(p) ? Rat(r.exp_[p] + e) : e;
      v.canonicalize();
      if (v == 0)
        r.exp_.erase(p);
      else
        r.exp_[p] = v;
    }
    return r;
  }

  Radical inv() const {
    Radical r;
    r.torsion_ = mod1(-torsion_);
    for (const auto& [p, e] : exp_) r.exp_[p] = -e;
    return r;
  }

  Radical pow(long n) const {
    Radical r;
    r.torsion_ = mod1(torsion_ * n);
    for (const auto& [p, e] : exp_) {
      Rat v = e * n;
      v.canonicalize();
      if (v != 0) r.exp_[p] = v;
    }
    return r;
  }

  // -a, i.e. multiplication by zeta_2
  Radical negate() const {
    Radical r = *this;
    r.torsion_ = mod1(r.torsion_ + make_rat(1, 2));
    return r;
  }

  // The rational value iff all exponents are integers and u in {0, 1/2}.
  std::optional<Rat> as_rational() const {
    if (torsion_ != 0 && torsion_ != make_rat(1, 2)) return std::nullopt;
    Rat v = torsion_ == 0 ? Rat(1) : Rat(-1);
    for (const auto& [p, e] : exp_) {
      if (!is_integer(e)) return std::nullopt;
      v *= pow_rat(Rat(p), num(e).get_si());
    }
    v.canonicalize();
    return v;
  }

  // Smallest n >= 1 with pow(n) rational.
  Int order_over_q() const {
    Int n = 1;
    for (const auto& [p, e] : exp_) n = lcm(n, den(e));
    // n*u must land in {0, 1/2} mod 1: smallest multiplier for u is
    // den(2u)/gcd stuff; combine with n.
    Rat u2 = mod1(torsion_ * 2);
    Int m = den(u2);  // smallest m with m*(2u) integral
    // order for torsion alone: smallest k with k*u in (1/2)Z = den(2u)
    Int k = m;
    return lcm(n, k);
  }

  bool is_real() const {
    return torsion_ == 0 || torsion_ == make_rat(1, 2);
  }

  // Certified complex enclosure under the principal conventions.
  CItv numeric_eval(unsigned bits) const {
    if (bits < 64) throw domain_error("numeric_eval: bits must be >= 64");
    unsigned wp = bits + 16;
    DItv mag(1);
    for (const auto& [p, e] : exp_) {
      // p^e = (p^num)^(1/den), num may be negative
      Rat base = pow_rat(Rat(p), num(e).get_si());
      mag = imul(mag, nth_root_itv(base, den(e).get_ui(), wp), wp);
    }
    auto [c, s] = cos_sin_2pi(torsion_, wp);
    CItv out(imul(mag, c, bits), imul(mag, s, bits));
    return out;
  }

  std::string format() const;

  static Radical parse(const std::string& text);

 private:
  Rat torsion_ = Rat(0);       // u in [0,1)
  std::map<Int, Rat> exp_;     // prime -> reduced nonzero rational
};

inline Radical zeta(const Int& m, const Int& k = 1) {
  return Radical::make(make_rat(k, m), {});
}

// The distinguished 2-entangled radical: over Q, eta = zeta_8 * sqrt(2),
// which equals 1 + zeta_4 on the nose.
inline Radical eta() {
  return Radical::make(make_rat(1, 8), {{2, make_rat(1, 2)}});
}

inline Radical one_plus_i() { return eta(); }

// 1 - zeta_4 = conj(1 + zeta_4) = zeta_8^{-1} * sqrt(2)
inline Radical one_minus_i() {
  return Radical::make(make_rat(7, 8), {{2, make_rat(1, 2)}});
}

// Principal n-th root of a nonzero rational, factored onto prime coordinates.
// rt(-a, n) = zeta_2n * rt(a, n) for a > 0.
inline Radical root_of_rational(const Rat& a, const Int& n) {
  if (n < 1) throw domain_error("root index must be positive");
  if (a == 0) throw domain_error("zero radicand");
  Rat torsion(0);
  std::map<Int, Rat> exps;
  if (a < 0) torsion = make_rat(1, 2 * n);
  for (const auto& [p, e] : factorize(num(a)).factors)
    exps[p] += make_rat(e, n);
  for (const auto& [p, e] : factorize(den(a)).factors)
    exps[p] += make_rat(-Int(e), n);
  for (auto& [p, e] : exps) e.canonicalize();
  return Radical::make(torsion, exps);
}

// ---- grammar ----
//
//   expr := term (('*' | '/') term)*
//   term := 'zeta(' int ')' ['^' int]
//         | 'rt(' rational ',' posint ')' ['^' int]
//         | int
//
// Whitespace is insignificant. format() emits torsion first, primes
// ascending, integer exponents as rt(p,1)^k.

namespace detail {

struct RadicalParser {
  const std::string& s;
  size_t pos = 0;

  explicit RadicalParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw parse_error(std::string("expected '") + c + "'", pos);
  }

  Int parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw parse_error("expected integer", start);
    return Int(s.substr(start, pos - start));
  }

  Rat parse_rational() {
    Int n = parse_int();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      Int d = parse_int();
      if (d == 0) throw parse_error("zero denominator", pos);
      return make_rat(n, d);
    }
    return Rat(n);
  }

  long parse_exponent() {
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      Int e = parse_int();
      if (!e.fits_slong_p()) throw parse_error("exponent too large", pos);
      return e.get_si();
    }
    return 1;
  }

  bool lookahead_word(const char* w) {
    skip_ws();
    size_t n = std::strlen(w);
    return s.compare(pos, n, w) == 0;
  }

  Radical parse_term() {
    skip_ws();
    size_t start = pos;
    if (lookahead_word("zeta")) {
      pos += 4;
      expect('(');
      Int m = parse_int();
      if (m < 1) throw parse_error("zeta order must be positive", start);
      expect(')');
      long e = parse_exponent();
      return zeta(m).pow(e);
    }
    if (lookahead_word("rt")) {
      pos += 2;
      expect('(');
      Rat a = parse_rational();
      expect(',');
      Int n = parse_int();
      if (n < 1) throw parse_error("root index must be positive", start);
      expect(')');
      long e = parse_exponent();
      if (a == 0) throw parse_error("zero radicand", start);
      return root_of_rational(a, n).pow(e);
    }
    // bare rational (integer literal; '/' is handled at expr level)
    Int v = parse_int();
    if (v == 0) throw parse_error("zero is not a radical", start);
    return root_of_rational(Rat(v), 1);
  }

  Radical parse_expr() {
    Radical acc = parse_term();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = acc.mul(parse_term());
      } else if (eat('/')) {
        acc = acc.mul(parse_term().inv());
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace detail

inline Radical Radical::parse(const std::string& text) {
  detail::RadicalParser p(text);
  Radical r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
  return r;
}

inline std::string Radical::format() const {
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  if (torsion_ != 0) {
    out << "zeta(" << den(torsion_).get_str() << ")";
    if (num(torsion_) != 1) out << "^" << num(torsion_).get_str();
    first = false;
  }
  for (const auto& [p, e] : exp_) {
    if (!first) out << "*";
    out << "rt(" << p.get_str() << "," << den(e).get_str() << ")";
    if (num(e) != 1) out << "^" << num(e).get_str();
    first = false;
  }
  return out.str();
}

}  // namespace radkit
