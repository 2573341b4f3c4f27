#include <random>

#include "doctest.h"
#include "ladder/fp.hpp"
#include "ladder/fp_matrix.hpp"

using namespace ladder;

namespace {

// Independent inverse oracle: extended Euclid.
u32 inv_euclid(u32 a, u32 p) {
  long long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  return norm_mod(t, p);
}

// Determinant mod p by cofactor expansion; fine for the tiny sizes used
// by the minor-rank oracle.
u32 det_mod(const std::vector<std::vector<u32>>& m, u32 p) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0] % p;
  u32 acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<u32>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<u32> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    u32 term = mul_mod(m[0][j], det_mod(sub, p), p);
    acc = (j % 2 == 0) ? add_mod(acc, term, p) : sub_mod(acc, term, p);
  }
  return acc;
}

// Rank as the largest size of a square submatrix with nonzero determinant.
std::size_t minor_rank(const FpMatrix& m) {
  const u32 p = m.modulus();
  std::size_t best = 0;
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<std::size_t> rows_sel, cols_sel;
  // enumerate subsets via bitmasks (matrix is at most 5x5 here)
  for (unsigned rmask = 1; rmask < (1u << m.rows()); ++rmask) {
    for (unsigned cmask = 1; cmask < (1u << m.cols()); ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      std::size_t sz = __builtin_popcount(rmask);
      if (sz <= best || sz > n) continue;
      std::vector<std::vector<u32>> sub;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!(rmask & (1u << r))) continue;
        std::vector<u32> row;
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (cmask & (1u << c)) row.push_back(m.at(r, c));
        sub.push_back(std::move(row));
      }
      if (det_mod(sub, p) != 0) best = sz;
    }
  }
  return best;
}

FpMatrix random_matrix(u32 p, std::size_t r, std::size_t c,
                       std::mt19937_64& rng) {
  FpMatrix m(p, r, c);
  std::uniform_int_distribution<u32> dist(0, p - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("pow_mod basics") {
  CHECK(pow_mod(1, -5, 7) == 1);
  CHECK(pow_mod(3, 6, 7) == 1);  // Fermat
  CHECK(pow_mod(2, -1, 691) == 346);
  CHECK(mul_mod(2, 346, 691) == 1);
  CHECK(pow_mod(5, 0, 7) == 1);
  CHECK_THROWS_AS(pow_mod(0, -3, 11), ZeroToNegativePower);
  CHECK_THROWS_AS(pow_mod(11, -1, 11), ZeroToNegativePower);
}

TEST_CASE("inverses agree with extended Euclid") {
  for (u32 p : {5u, 7u, 691u, 3617u}) {
    for (u32 a = 1; a < std::min(p, 200u); ++a) {
      CHECK(inv_mod(a, p) == inv_euclid(a, p));
    }
  }
}

TEST_CASE("is_prime small values") {
  CHECK(is_prime(2));
  CHECK(is_prime(691));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(693));
  CHECK(next_prime(13) == 17);
}

TEST_CASE("rref on identity and zero") {
  FpMatrix id = FpMatrix::identity(7, 4);
  RrefResult r = rref(id);
  CHECK(r.m == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});

  FpMatrix z(7, 3, 5);
  RrefResult rz = rref(z);
  CHECK(rz.m == z);
  CHECK(rz.pivots.empty());
}

TEST_CASE("rref rank agrees with the determinant-minor oracle") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 30; ++trial) {
    FpMatrix m = random_matrix(5, 5, 5, rng);
    CHECK(rank(m) == minor_rank(m));
  }
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(7);
  for (u32 p : {5u, 13u, 101u}) {
    for (int trial = 0; trial < 10; ++trial) {
      FpMatrix m = random_matrix(p, 6, 9, rng);
      RrefResult once = rref(m);
      RrefResult twice = rref(once.m);
      CHECK(once.m == twice.m);
      CHECK(once.pivots == twice.pivots);
    }
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(FpMatrix::identity(11, 4)).empty());

  auto std_basis = kernel_basis(FpMatrix(11, 2, 3));
  REQUIRE(std_basis.size() == 3);
  CHECK(std_basis[0] == std::vector<u32>{1, 0, 0});
  CHECK(std_basis[1] == std::vector<u32>{0, 1, 0});
  CHECK(std_basis[2] == std::vector<u32>{0, 0, 1});

  FpMatrix m = FpMatrix::from_rows(5, {{1, 1, 0}, {0, 1, 1}});
  auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  // exhaustive oracle over F_5^3
  std::vector<std::vector<u32>> solutions;
  for (u32 x = 0; x < 5; ++x)
    for (u32 y = 0; y < 5; ++y)
      for (u32 z = 0; z < 5; ++z) {
        if ((x + y) % 5 == 0 && (y + z) % 5 == 0)
          solutions.push_back({x, y, z});
      }
  CHECK(solutions.size() == 5);  // a line
  bool found = false;
  for (const auto& s : solutions) found = found || s == kb[0];
  CHECK(found);
}

TEST_CASE("kernel vectors are exact and rank-nullity holds") {
  std::mt19937_64 rng(99);
  for (u32 p : {5u, 7u, 691u}) {
    for (int trial = 0; trial < 8; ++trial) {
      FpMatrix m = random_matrix(p, 7, 5, rng);
      auto kb = kernel_basis(m);
      CHECK(rank(m) + kb.size() == m.cols());
      for (const auto& x : kb) {
        auto y = m.mul_vec(x);
        for (u32 v : y) CHECK(v == 0);
      }
    }
  }
}

TEST_CASE("in_span examples") {
  std::vector<std::vector<u32>> e1 = {{1, 0}};
  auto c0 = in_span(e1, std::vector<u32>{0, 0}, 7);
  REQUIRE(c0.has_value());
  CHECK(*c0 == std::vector<u32>{0});

  auto c3 = in_span(e1, std::vector<u32>{3, 0}, 7);
  REQUIRE(c3.has_value());
  CHECK(*c3 == std::vector<u32>{3});

  std::vector<std::vector<u32>> basis = {{1, 2}, {0, 1}};
  auto c = in_span(basis, std::vector<u32>{2, 0}, 7);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<u32>{2, 3});
  // substitution check: 2*(1,2) + 3*(0,1) = (2, 7) = (2, 0) mod 7
  for (std::size_t i = 0; i < 2; ++i) {
    u32 acc = 0;
    for (std::size_t j = 0; j < basis.size(); ++j)
      acc = add_mod(acc, mul_mod((*c)[j], basis[j][i], 7), 7);
    CHECK(acc == std::vector<u32>({2, 0})[i]);
  }

  CHECK_FALSE(in_span(e1, std::vector<u32>{0, 1}, 7).has_value());
  CHECK_THROWS_AS(in_span(e1, std::vector<u32>{1, 2, 3}, 7),
                  DimensionMismatch);
}

TEST_CASE("in_span coefficients substitute back (randomized)") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<u32> dist(0, 100);
  for (int trial = 0; trial < 25; ++trial) {
    u32 p = 101;
    std::size_t len = 6, n = 3;
    std::vector<std::vector<u32>> basis(n, std::vector<u32>(len));
    for (auto& b : basis)
      for (auto& v : b) v = dist(rng);
    // v = random combination, must be recognized
    std::vector<u32> coeff(n);
    for (auto& x : coeff) x = dist(rng);
    std::vector<u32> v(len, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < len; ++i)
        v[i] = add_mod(v[i], mul_mod(coeff[j], basis[j][i], p), p);
    auto c = in_span(basis, v, p);
    REQUIRE(c.has_value());
    std::vector<u32> back(len, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < len; ++i)
        back[i] = add_mod(back[i], mul_mod((*c)[j], basis[j][i], p), p);
    CHECK(back == v);
  }
}

TEST_CASE("EchelonBasis tracks rank and membership") {
  EchelonBasis eb(13, 4);
  CHECK(eb.add(std::vector<u32>{1, 2, 3, 4}));
  CHECK(eb.add(std::vector<u32>{0, 1, 1, 0}));
  CHECK_FALSE(eb.add(std::vector<u32>{1, 3, 4, 4}));  // sum of the two
  CHECK(eb.rank() == 2);
  CHECK(eb.contains(std::vector<u32>{2, 4, 6, 8}));
  CHECK_FALSE(eb.contains(std::vector<u32>{0, 0, 1, 0}));
}
