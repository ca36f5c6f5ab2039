#pragma once

// Integer matrices with Hermite and Smith normal forms. These drive every
// index, membership and torsion computation on radical groups.
//
// HNF convention (fixed so examples reproduce): row-style, H = U*M with U
// unimodular, pivots positive, pivot columns strictly increasing, entries
// above a pivot reduced into [0, pivot), zero rows at the bottom.

#include <cassert>
#include <vector>

#include "radkit/arith.hpp"

namespace radkit {

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major, size rows*cols

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  Int& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  IntMatrix mul(const IntMatrix& o) const {
    assert(cols == o.rows);
    IntMatrix r(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) {
        const Int& x = (*this)(i, k);
        if (x == 0) continue;
        for (size_t j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }
};

struct HnfResult {
  IntMatrix H;  // H = U * M
  IntMatrix U;  // unimodular
  std::vector<size_t> pivot_cols;  // one per nonzero row of H
};

inline HnfResult hermite_normal_form(const IntMatrix& M) {
  HnfResult res{M, IntMatrix::identity(M.rows), {}};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  size_t r = 0;
  for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
    // eliminate below row r in column c via extended gcd row ops
    size_t piv = r;
    bool found = false;
    for (size_t i = r; i < M.rows; ++i) {
      if (H(i, c) != 0) {
        piv = i;
        found = true;
        break;
      }
    }
    if (!found) continue;
    if (piv != r) {
      for (size_t j = 0; j < M.cols; ++j) std::swap(H(piv, j), H(r, j));
      for (size_t j = 0; j < M.rows; ++j) std::swap(U(piv, j), U(r, j));
    }
    for (size_t i = r + 1; i < M.rows; ++i) {
      if (H(i, c) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 H(r, c).get_mpz_t(), H(i, c).get_mpz_t());
      Int ar = exact_div(H(r, c), g), ai = exact_div(H(i, c), g);
      for (size_t j = 0; j < M.cols; ++j) {
        Int hr = H(r, j), hi = H(i, j);
        H(r, j) = s * hr + t * hi;
        H(i, j) = ar * hi - ai * hr;
      }
      for (size_t j = 0; j < M.rows; ++j) {
        Int ur = U(r, j), ui = U(i, j);
        U(r, j) = s * ur + t * ui;
        U(i, j) = ar * ui - ai * ur;
      }
    }
    if (H(r, c) < 0) {
      for (size_t j = 0; j < M.cols; ++j) H(r, j) = -H(r, j);
      for (size_t j = 0; j < M.rows; ++j) U(r, j) = -U(r, j);
    }
    // reduce entries above the pivot into [0, pivot)
    for (size_t i = 0; i < r; ++i) {
      Int q = fdiv(H(i, c), H(r, c));
      if (q == 0) continue;
      for (size_t j = 0; j < M.cols; ++j) H(i, j) -= q * H(r, j);
      for (size_t j = 0; j < M.rows; ++j) U(i, j) -= q * U(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

struct SnfResult {
  IntMatrix D;     // D = U * M * V, diagonal, d1 | d2 | ...
  IntMatrix U;     // unimodular
  IntMatrix V;     // unimodular
  IntMatrix Vinv;  // V^{-1}, tracked alongside V
};

inline SnfResult smith_normal_form(const IntMatrix& M) {
  SnfResult res{M, IntMatrix::identity(M.rows), IntMatrix::identity(M.cols),
                IntMatrix::identity(M.cols)};
  IntMatrix& D = res.D;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;
  IntMatrix& Vi = res.Vinv;

  const size_t n = std::min(M.rows, M.cols);

  auto row_gcd_step = [&](size_t t, size_t i) {
    // combine rows t and i so D(t,t) becomes gcd, D(i,t) zero.
    // Plain elimination when the pivot already divides the entry, otherwise
    // GMP's degenerate cofactors (|a| = |b| gives s = 0) can cycle forever.
    if (D(t, t) != 0 && divides(D(t, t), D(i, t))) {
      Int q = exact_div(D(i, t), D(t, t));
      for (size_t j = 0; j < D.cols; ++j) D(i, j) -= q * D(t, j);
      for (size_t j = 0; j < D.rows; ++j) U(i, j) -= q * U(t, j);
      return;
    }
    Int g, s, tt;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(),
               D(t, t).get_mpz_t(), D(i, t).get_mpz_t());
    Int ar = exact_div(D(t, t), g), ai = exact_div(D(i, t), g);
    for (size_t j = 0; j < D.cols; ++j) {
      Int dr = D(t, j), di = D(i, j);
      D(t, j) = s * dr + tt * di;
      D(i, j) = ar * di - ai * dr;
    }
    for (size_t j = 0; j < D.rows; ++j) {
      Int ur = U(t, j), ui = U(i, j);
      U(t, j) = s * ur + tt * ui;
      U(i, j) = ar * ui - ai * ur;
    }
  };
  auto col_gcd_step = [&](size_t t, size_t j) {
    if (D(t, t) != 0 && divides(D(t, t), D(t, j))) {
      Int q = exact_div(D(t, j), D(t, t));
      for (size_t i = 0; i < D.rows; ++i) D(i, j) -= q * D(i, t);
      for (size_t i = 0; i < V.rows; ++i) V(i, j) -= q * V(i, t);
      for (size_t k = 0; k < Vi.cols; ++k) Vi(t, k) += q * Vi(j, k);
      return;
    }
    Int g, s, tt;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(),
               D(t, t).get_mpz_t(), D(t, j).get_mpz_t());
    Int ac = exact_div(D(t, t), g), aj = exact_div(D(t, j), g);
    for (size_t i = 0; i < D.rows; ++i) {
      Int dc = D(i, t), dj = D(i, j);
      D(i, t) = s * dc + tt * dj;
      D(i, j) = ac * dj - aj * dc;
    }
    // V := V * E where E applies the same column op; Vinv := E^{-1} * Vinv
    for (size_t i = 0; i < V.rows; ++i) {
      Int vc = V(i, t), vj = V(i, j);
      V(i, t) = s * vc + tt * vj;
      V(i, j) = ac * vj - aj * vc;
    }
    // E has columns (t, j) block [[s, -aj],[tt, ac]]; E^{-1} = [[ac, aj],[-tt, s]]
    for (size_t k = 0; k < Vi.cols; ++k) {
      Int rt = Vi(t, k), rj = Vi(j, k);
      Vi(t, k) = ac * rt + aj * rj;
      Vi(j, k) = -tt * rt + s * rj;
    }
  };

  auto diagonalize_at = [&](size_t t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < D.rows; ++i)
        if (D(i, t) != 0) {
          row_gcd_step(t, i);
          dirty = true;
        }
      for (size_t j = t + 1; j < D.cols; ++j)
        if (D(t, j) != 0) {
          col_gcd_step(t, j);
          dirty = true;
        }
    }
  };

  for (size_t t = 0; t < n; ++t) {
    // move a nonzero entry to (t, t)
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < D.rows && !found; ++i)
      for (size_t j = t; j < D.cols && !found; ++j)
        if (D(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) {
      for (size_t j = 0; j < D.cols; ++j) std::swap(D(pi, j), D(t, j));
      for (size_t j = 0; j < U.cols; ++j) std::swap(U(pi, j), U(t, j));
    }
    if (pj != t) {
      for (size_t i = 0; i < D.rows; ++i) std::swap(D(i, pj), D(i, t));
      for (size_t i = 0; i < V.rows; ++i) std::swap(V(i, pj), V(i, t));
      for (size_t k = 0; k < Vi.cols; ++k) std::swap(Vi(pj, k), Vi(t, k));
    }
    diagonalize_at(t);
  }
  // divisibility chain: fold gcd/lcm along the diagonal until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t + 1 < n; ++t) {
      size_t k = t + 1;
      if (D(t, t) == 0 || D(k, k) == 0) continue;
      if (divides(D(t, t), D(k, k))) continue;
      // add column k to column t, then re-reduce from position t
      for (size_t i = 0; i < D.rows; ++i) D(i, t) += D(i, k);
      for (size_t i = 0; i < V.rows; ++i) V(i, t) += V(i, k);
      for (size_t j2 = 0; j2 < Vi.cols; ++j2) Vi(k, j2) -= Vi(t, j2);
      diagonalize_at(t);
      diagonalize_at(k);
      changed = true;
    }
  }
  // sign normalization
  for (size_t t = 0; t < n; ++t) {
    if (D(t, t) < 0) {
      D(t, t) = -D(t, t);
      for (size_t j = 0; j < U.cols; ++j) U(t, j) = -U(t, j);
    }
  }
  return res;
}

// Solve x * H = w for integer x, where H is a full HNF basis (rows are the
// basis). Returns empty if w is not in the row lattice.
inline std::optional<std::vector<Int>> hnf_solve(const HnfResult& hnf,
                                                 std::vector<Int> w) {
  const IntMatrix& H = hnf.H;
  std::vector<Int> x(H.rows, 0);
  for (size_t r = 0; r < hnf.pivot_cols.size(); ++r) {
    size_t c = hnf.pivot_cols[r];
    if (!divides(H(r, c), w[c])) return std::nullopt;
    Int q = exact_div(w[c], H(r, c));
    x[r] = q;
    if (q != 0)
      for (size_t j = 0; j < H.cols; ++j) w[j] -= q * H(r, j);
  }
  for (const Int& v : w)
    if (v != 0) return std::nullopt;
  return x;
}

}  // namespace radkit
