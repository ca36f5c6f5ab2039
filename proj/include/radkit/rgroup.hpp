#pragma once

// Finitely generated radical groups Gamma with K* <= Gamma inside the
// radicals of Qbar, realized as integer lattices over the coordinates
// (torsion slot, one slot per occurring prime), scaled by a common
// denominator N. The K*-relations are <(1/2, 0, ...)> + Z^(1+s): -1 has
// torsion 1/2 and every prime with integer exponent is rational. Index,
// membership, torsion and quotient structure are pure HNF/SNF problems.

#include <set>

#include "radkit/intmat.hpp"
#include "radkit/radical.hpp"

namespace radkit {

struct BaseField {
  bool rational_base = true;
  Int p = 0;  // prime when finite

  static BaseField Q() { return BaseField{true, 0}; }
  static BaseField Fp(const Int& p) {
    if (!is_prime(p)) throw domain_error("BaseField: characteristic must be prime");
    return BaseField{false, p};
  }

  bool operator==(const BaseField& o) const {
    return rational_base == o.rational_base && p == o.p;
  }
};

// ---- rational coordinate lattices ----

// coordinates: index 0 = torsion, index i+1 = exponent of primes[i]
struct RatLattice {
  std::vector<Int> primes;
  Int N;          // scale
  HnfResult hnf;  // full-rank HNF basis of the integer lattice (scale N)

  size_t dims() const { return primes.size() + 1; }
};

namespace lat {

inline std::vector<Rat> coords_of(const Radical& r, const std::vector<Int>& primes) {
  std::vector<Rat> v(primes.size() + 1, Rat(0));
  v[0] = r.torsion();
  for (const auto& [p, e] : r.exponents()) {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p)
      throw domain_error("coords_of: prime outside coordinate support");
    v[1 + (it - primes.begin())] = e;
  }
  return v;
}

inline Radical radical_of(const std::vector<Rat>& v, const std::vector<Int>& primes) {
  std::map<Int, Rat> exps;
  for (size_t i = 0; i < primes.size(); ++i)
    if (v[i + 1] != 0) exps[primes[i]] = v[i + 1];
  return Radical::make(v[0], exps);
}

inline std::vector<Int> union_primes(const std::vector<Int>& a,
                                     const std::vector<Int>& b) {
  std::vector<Int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Int> primes_of(const Radical& r) {
  std::vector<Int> out;
  for (const auto& [p, e] : r.exponents()) out.push_back(p);
  return out;
}

// Build the lattice spanned by the K*-relations and the given rational rows.
inline RatLattice build(const std::vector<Int>& primes,
                        const std::vector<std::vector<Rat>>& rows) {
  RatLattice L;
  L.primes = primes;
  L.N = 2;
  for (const auto& row : rows)
    for (const Rat& x : row) L.N = lcm(L.N, den(x));
  size_t d = L.primes.size() + 1;
  IntMatrix M(d + 1 + rows.size(), d);
  // K* relations: torsion 1/2 and the integer lattice
  M(0, 0) = L.N / 2;
  for (size_t i = 0; i < d; ++i) M(1 + i, i) = L.N;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t j = 0; j < d; ++j) {
      Rat scaled = rows[r][j] * L.N;
      M(d + 1 + r, j) = num(scaled);  // integral by choice of N
    }
  L.hnf = hermite_normal_form(M);
  if (L.hnf.pivot_cols.size() != d)
    throw domain_error("lattice build: rank deficiency");
  return L;
}

inline RatLattice build_from_radicals(const std::vector<Int>& primes,
                                      const std::vector<Radical>& gens) {
  std::vector<std::vector<Rat>> rows;
  for (const Radical& g : gens) rows.push_back(coords_of(g, primes));
  return build(primes, rows);
}

// determinant of the integer lattice = product of HNF pivots
inline Int det(const RatLattice& L) {
  Int d = 1;
  for (size_t i = 0; i < L.hnf.pivot_cols.size(); ++i)
    d *= L.hnf.H(i, L.hnf.pivot_cols[i]);
  return d;
}

// det of the K*-lattice at the same scale: (N/2) * N^s
inline Int det_base(const RatLattice& L) {
  Int d = L.N / 2;
  for (size_t i = 0; i < L.primes.size(); ++i) d *= L.N;
  return d;
}

// [super : sub] for sub <= super on the same support, scale-aware:
// covol(L) = det_int(L) / N^dims
inline Int relative_index(const RatLattice& super, const RatLattice& sub) {
  if (super.primes != sub.primes)
    throw domain_error("relative_index: support mismatch");
  size_t d = super.dims();
  Rat ratio = Rat(det(sub)) / Rat(det(super));
  for (size_t i = 0; i < d; ++i) ratio *= Rat(super.N) / Rat(sub.N);
  ratio.canonicalize();
  if (!is_integer(ratio) || ratio < 1)
    throw domain_error("relative_index: not a sublattice");
  return num(ratio);
}

inline bool contains(const RatLattice& L, const std::vector<Rat>& v) {
  std::vector<Int> w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * L.N;
    if (!is_integer(scaled)) return false;
    w[i] = num(scaled);
  }
  return hnf_solve(L.hnf, std::move(w)).has_value();
}

inline bool contains(const RatLattice& L, const Radical& r) {
  for (const auto& [p, e] : r.exponents()) {
    bool in_support = std::binary_search(L.primes.begin(), L.primes.end(), p);
    if (!in_support && !is_integer(e)) return false;
  }
  // integer exponents at primes outside the support are in K*
  std::map<Int, Rat> kept;
  for (const auto& [p, e] : r.exponents())
    if (std::binary_search(L.primes.begin(), L.primes.end(), p)) kept[p] = e;
  Radical stripped = Radical::make(r.torsion(), kept);
  return contains(L, coords_of(stripped, L.primes));
}

// cyclic decomposition of super/sub for sub <= super (same support)
struct Quotient {
  std::vector<std::vector<Rat>> gens;  // rational coordinate vectors
  std::vector<Int> orders;             // invariant factors > 1
  Int order = 1;
};

inline Quotient quotient(const RatLattice& super, const RatLattice& sub) {
  if (super.primes != sub.primes) throw domain_error("quotient: support mismatch");
  size_t d = super.dims();
  // express each basis row of sub in the basis of super
  IntMatrix X(d, d);
  for (size_t i = 0; i < d; ++i) {
    std::vector<Int> w(d);
    for (size_t j = 0; j < d; ++j) {
      // sub basis at scale sub.N -> rational -> scale super.N
      Rat val = Rat(sub.hnf.H(i, j)) / sub.N * super.N;
      if (!is_integer(val)) throw domain_error("quotient: not a sublattice");
      w[j] = num(val);
    }
    auto x = hnf_solve(super.hnf, std::move(w));
    if (!x) throw domain_error("quotient: not a sublattice");
    for (size_t j = 0; j < d; ++j) X(i, j) = (*x)[j];
  }
  SnfResult snf = smith_normal_form(X);
  Quotient q;
  for (size_t i = 0; i < d; ++i) {
    Int di = snf.D(i, i);
    if (di == 0) throw domain_error("quotient: infinite index");
    q.order *= di;
    if (di == 1) continue;
    // generator = (Vinv * superH) row i, at scale super.N
    std::vector<Rat> g(d, Rat(0));
    for (size_t j = 0; j < d; ++j) {
      Int acc = 0;
      for (size_t k = 0; k < d; ++k) acc += snf.Vinv(i, k) * super.hnf.H(k, j);
      g[j] = make_rat(acc, super.N);
    }
    q.gens.push_back(std::move(g));
    q.orders.push_back(di);
  }
  return q;
}

// all coset representatives of super/sub (order must be modest)
inline std::vector<std::vector<Rat>> coset_reps(const Quotient& q, const Int& bound) {
  if (q.order > bound) throw resource_error("coset_reps: quotient too large");
  std::vector<std::vector<Rat>> reps;
  size_t d = q.gens.empty() ? 0 : q.gens[0].size();
  std::vector<Int> counter(q.gens.size(), 0);
  while (true) {
    std::vector<Rat> v(d, Rat(0));
    for (size_t i = 0; i < q.gens.size(); ++i)
      for (size_t j = 0; j < d; ++j) v[j] += q.gens[i][j] * Rat(counter[i]);
    reps.push_back(v);
    // increment the mixed-radix counter
    size_t pos = 0;
    while (pos < counter.size()) {
      counter[pos] += 1;
      if (counter[pos] < q.orders[pos]) break;
      counter[pos] = 0;
      ++pos;
    }
    if (pos == counter.size()) break;
  }
  if (q.gens.empty()) reps.assign(1, std::vector<Rat>());
  return reps;
}

}  // namespace lat

// ---- radical groups over Q ----

class RadicalGroup {
 public:
  RadicalGroup() = default;

  static RadicalGroup make(const BaseField& base, std::vector<Radical> gens) {
    if (!base.rational_base)
      throw domain_error("RadicalGroup: finite base fields use FiniteFieldGroup");
    RadicalGroup g;
    g.base_ = base;
    g.gens_ = std::move(gens);
    std::vector<Int> primes;
    for (const Radical& r : g.gens_)
      primes = lat::union_primes(primes, lat::primes_of(r));
    g.lattice_ = lat::build_from_radicals(primes, g.gens_);
    g.index_ = exact_div(lat::det_base(g.lattice_), lat::det(g.lattice_));
    return g;
  }

  const BaseField& base() const { return base_; }
  const std::vector<Radical>& generators() const { return gens_; }
  const RatLattice& lattice() const { return lattice_; }
  const Int& index() const { return index_; }

  bool contains(const Radical& r) const { return lat::contains(lattice_, r); }

  // quotient Gamma / K*
  lat::Quotient class_group() const {
    RatLattice base_lat = lat::build(lattice_.primes, {});
    return lat::quotient(lattice_, base_lat);
  }

  // order of the class of r modulo K*, i.e. its order over Q
  static Int class_order(const Radical& r) { return r.order_over_q(); }

  // the full l-Sylow preimage of Gamma/K*
  RadicalGroup ell_part(const Int& ell) const {
    if (!is_prime(ell)) throw domain_error("ell_part: ell must be prime");
    std::vector<Radical> parts;
    for (const Radical& g : gens_) {
      Int m = class_order(g);
      unsigned v = valuation(m, ell);
      Int cofactor = exact_div(m, pow_int(ell, v));
      if (pow_int(ell, v) == 1) continue;
      parts.push_back(g.pow(cofactor.get_si()));
    }
    return make(base_, parts);
  }

  // largest m with zeta_m in Gamma; bounded because every lattice coordinate
  // has denominator dividing N, so zeta_m in Gamma forces m | N
  Int torsion_order() const {
    const Int& N = lattice_.N;
    std::vector<Int> divs;
    for (Int d = 1; d * d <= N; ++d)
      if (divides(d, N)) {
        divs.push_back(d);
        divs.push_back(exact_div(N, d));
      }
    std::sort(divs.begin(), divs.end());
    for (const Int& d : divs) {
      std::vector<Rat> v(lattice_.dims(), Rat(0));
      v[0] = make_rat(d, N);
      if (lat::contains(lattice_, v)) return exact_div(N, d);
    }
    return 1;  // unreachable: d = N gives the trivial torsion
  }

  // all subgroups K* <= Delta <= Gamma
  std::vector<RadicalGroup> subgroups_containing_base(const Int& bound = 256) const {
    if (index_ > bound) throw resource_error("subgroups: index exceeds bound");
    lat::Quotient q = class_group();
    long n = q.order.get_si();
    // element table of the finite abelian quotient
    std::vector<std::vector<Rat>> elems =
        lat::coset_reps(q, bound);
    size_t dim = lattice_.dims();
    for (auto& e : elems)
      if (e.empty()) e.assign(dim, Rat(0));
    // canonical form of an element: reduce into the fundamental domain by
    // normalizing coordinates mod the K* lattice (torsion mod 1/2, exps mod 1)
    auto canon = [&](std::vector<Rat> v) {
      v[0] = mod1(v[0] * 2) / 2;
      for (size_t i = 1; i < v.size(); ++i) v[i] = mod1(v[i]);
      return v;
    };
    std::map<std::vector<Rat>, int> id_of;
    std::vector<std::vector<Rat>> canon_elems;
    for (auto& e : elems) {
      auto c = canon(e);
      if (!id_of.count(c)) {
        int id = int(canon_elems.size());
        id_of[c] = id;
        canon_elems.push_back(c);
      }
    }
    if (long(canon_elems.size()) != n)
      throw domain_error("subgroups: quotient enumeration mismatch");
    auto add = [&](int a, int b) {
      std::vector<Rat> v(dim);
      for (size_t i = 0; i < dim; ++i) v[i] = canon_elems[a][i] + canon_elems[b][i];
      return id_of.at(canon(v));
    };
    // BFS over subgroups by closure
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial{0};
    seen.insert(trivial);
    queue.push_back(trivial);
    std::vector<std::vector<int>> all;
    while (!queue.empty()) {
      auto sub = queue.back();
      queue.pop_back();
      all.push_back(sub);
      std::set<int> in(sub.begin(), sub.end());
      for (int g = 1; g < n; ++g) {
        if (in.count(g)) continue;
        // closure of <sub, g>
        std::set<int> t(sub.begin(), sub.end());
        int cur = g;
        while (!t.count(cur)) {
          std::vector<int> shifted;
          for (int x : sub) shifted.push_back(add(x, cur));
          t.insert(shifted.begin(), shifted.end());
          cur = add(cur, g);
        }
        std::vector<int> key(t.begin(), t.end());
        if (seen.insert(key).second) queue.push_back(key);
      }
    }
    std::vector<RadicalGroup> out;
    for (const auto& sub : all) {
      std::vector<Radical> gens;
      for (int id : sub)
        gens.push_back(lat::radical_of(canon_elems[id], lattice_.primes));
      out.push_back(make(base_, gens));
    }
    std::sort(out.begin(), out.end(), [](const RadicalGroup& a, const RadicalGroup& b) {
      return a.index() < b.index();
    });
    return out;
  }

 private:
  BaseField base_ = BaseField::Q();
  std::vector<Radical> gens_;
  RatLattice lattice_;
  Int index_ = 1;
};

inline RadicalGroup group(const BaseField& base, const std::vector<Radical>& gens) {
  return RadicalGroup::make(base, gens);
}

// |<Gamma, Q(zeta_4)*> : Q(zeta_4)*|, with the radical part of Q(zeta_4)*
// realized as <Q*, zeta_4, 1+zeta_4>
inline Int index_over_q_i(const RadicalGroup& g) {
  std::vector<Int> primes = lat::union_primes(g.lattice().primes, {2});
  std::vector<Radical> top = g.generators();
  top.push_back(zeta(4));
  top.push_back(eta());
  RatLattice big = lat::build_from_radicals(primes, top);
  RatLattice q4 = lat::build_from_radicals(primes, {zeta(4), eta()});
  return lat::relative_index(big, q4);
}

// ---- radical groups over F_p ----

// the unique subgroup of order e of the torsion of an algebraic closure of
// F_p that contains F_p*; index |Gamma : K*| = e/(p-1)
struct FiniteFieldGroup {
  Int p;
  Int e;
};

inline FiniteFieldGroup ff_group(const Int& p, const Int& e) {
  if (!is_prime(p)) throw domain_error("ff_group: p must be prime");
  if (e < 1 || !divides(p - 1, e)) throw domain_error("ff_group: (p-1) must divide e");
  if (divides(p, e)) throw domain_error("ff_group: characteristic divides the order");
  return FiniteFieldGroup{p, e};
}

// [F_p(Gamma) : F_p] = smallest d with e | p^d - 1
inline Int ff_degree(const FiniteFieldGroup& g) {
  if (g.e == 1) return 1;
  return multiplicative_order(fmod(g.p, g.e), g.e);
}

}  // namespace radkit
