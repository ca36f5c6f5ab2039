#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "radkit/intmat.hpp"

using namespace radkit;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Int det(const IntMatrix& m) {
  // fraction-free Bareiss, fine for the small sizes used in tests
  REQUIRE(m.rows == m.cols);
  IntMatrix a = m;
  Int prev = 1, sign = 1;
  size_t n = m.rows;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// same row lattice: each basis solves in the other's HNF
bool same_lattice(const IntMatrix& A, const IntMatrix& B) {
  auto ha = hermite_normal_form(A);
  auto hb = hermite_normal_form(B);
  for (size_t i = 0; i < A.rows; ++i) {
    std::vector<Int> w(A.cols);
    for (size_t j = 0; j < A.cols; ++j) w[j] = A(i, j);
    if (!hnf_solve(hb, w)) return false;
  }
  for (size_t i = 0; i < B.rows; ++i) {
    std::vector<Int> w(B.cols);
    for (size_t j = 0; j < B.cols; ++j) w[j] = B(i, j);
    if (!hnf_solve(ha, w)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf fixed examples") {
  auto id = IntMatrix::identity(2);
  auto r = hermite_normal_form(id);
  CHECK(r.H == id);
  CHECK(r.U == id);

  auto d23 = from_rows({{2, 0}, {0, 3}});
  auto r2 = hermite_normal_form(d23);
  CHECK(r2.H == d23);
  CHECK(r2.U == id);

  // 1x2 input: H = U*M forces H = +-M; the binding contract is lattice
  // equality, and gcd(4,6) = 2 shows up as the content of the row lattice.
  auto m = from_rows({{4, 6}});
  auto r3 = hermite_normal_form(m);
  CHECK(r3.H(0, 0) > 0);
  CHECK(gcd(r3.H(0, 0), r3.H(0, 1)) == 2);
  CHECK(same_lattice(r3.H, m));
  CHECK(r3.U.mul(m) == r3.H);
}

TEST_CASE("hnf randomized properties") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int iter = 0; iter < 200; ++iter) {
    size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m(rows, cols);
    for (auto& x : m.a) x = dist(rng);
    auto r = hermite_normal_form(m);
    CHECK(r.U.mul(m) == r.H);
    CHECK(same_lattice(m, r.H));
    if (rows == cols) {
      Int du = det(r.U);
      CHECK((du == 1 || du == -1));
    }
    // echelon shape: pivots positive, entries above in [0, pivot)
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
      size_t c = r.pivot_cols[i];
      CHECK(r.H(i, c) > 0);
      for (size_t k = 0; k < i; ++k) {
        CHECK(r.H(k, c) >= 0);
        CHECK(r.H(k, c) < r.H(i, c));
      }
      if (i > 0) CHECK(r.pivot_cols[i] > r.pivot_cols[i - 1]);
    }
  }
}

TEST_CASE("snf fixed examples") {
  auto d = from_rows({{2, 0}, {0, 3}});
  auto r = smith_normal_form(d);
  CHECK(r.D(0, 0) == 1);
  CHECK(r.D(1, 1) == 6);

  IntMatrix z(3, 2);
  auto rz = smith_normal_form(z);
  CHECK(rz.D == z);

  auto m = from_rows({{2, 4}, {6, 8}});
  auto rm = smith_normal_form(m);
  CHECK(rm.D(0, 0) == 2);
  CHECK(rm.D(1, 1) == 4);
  CHECK(rm.D(0, 1) == 0);
  CHECK(rm.D(1, 0) == 0);
}

TEST_CASE("snf randomized properties") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int iter = 0; iter < 200; ++iter) {
    size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m(rows, cols);
    for (auto& x : m.a) x = dist(rng);
    auto r = smith_normal_form(m);
    // D = U*M*V, U and V unimodular, V*Vinv = I
    CHECK(r.U.mul(m).mul(r.V) == r.D);
    CHECK(r.V.mul(r.Vinv) == IntMatrix::identity(cols));
    if (rows == rows) {
      Int dv = det(r.V);
      CHECK((dv == 1 || dv == -1));
    }
    Int du = det(r.U);
    (void)du;
    // diagonal with divisibility chain
    size_t n = std::min(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(r.D(i, j) == 0);
    for (size_t i = 0; i + 1 < n; ++i) {
      CHECK(r.D(i, i) >= 0);
      if (r.D(i + 1, i + 1) != 0) {
        REQUIRE(r.D(i, i) != 0);
        CHECK(divides(r.D(i, i), r.D(i + 1, i + 1)));
      }
    }
    if (rows == cols && det(m) != 0) {
      Int prod = 1;
      for (size_t i = 0; i < n; ++i) prod *= r.D(i, i);
      CHECK(prod == abs(det(m)));
    }
  }
}

TEST_CASE("snf det(U) unimodular") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int iter = 0; iter < 100; ++iter) {
    size_t n = 1 + rng() % 4;
    IntMatrix m(n, n);
    for (auto& x : m.a) x = dist(rng);
    auto r = smith_normal_form(m);
    Int du = det(r.U), dv = det(r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}
