#include <map>
#include <random>

#include "doctest.h"
#include "ladder/fp_matrix.hpp"
#include "ladder/steinberg.hpp"

using namespace ladder;

namespace {

// Brute-force double sum over ordered pairs (a, b), a != b:
//   sum a^{i-1} b^{j-1} a^{2-k} f(b a^{-1}),  j = k - i mod p-1.
u32 e_value_brute(std::span<const u32> f, long long i, u32 p, u32 k) {
  u32 ei = norm_mod(i - 1, p - 1);
  u32 ej = norm_mod(static_cast<i64>(k) - i - 1, p - 1);
  u32 ea = norm_mod(2 - static_cast<i64>(k), p - 1);
  u32 acc = 0;
  for (u32 a = 1; a <= p - 1; ++a) {
    for (u32 b = 1; b <= p - 1; ++b) {
      if (a == b) continue;
      u32 term = mul_mod(pow_mod(a, ei, p), pow_mod(b, ej, p), p);
      term = mul_mod(term, pow_mod(a, ea, p), p);
      u32 ratio = mul_mod(b, inv_mod(a, p), p);
      term = mul_mod(term, f[ratio - 1], p);
      acc = add_mod(acc, term, p);
    }
  }
  return acc;
}

std::vector<u32> random_f(u32 p, std::mt19937_64& rng) {
  std::uniform_int_distribution<u32> dist(0, p - 1);
  std::vector<u32> f(p - 1);
  for (auto& x : f) x = dist(rng);
  f[0] = 0;  // f(1) = 0 always
  return f;
}

// All emitted rows as a dense echelon basis, for row-membership tests.
EchelonBasis system_row_space(const SteinbergSystem& sys) {
  EchelonBasis eb(sys.p, sys.p - 2);
  auto feed = [&](const std::vector<SteinbergRow>& rows) {
    for (const auto& row : rows) {
      std::vector<u32> dense(sys.p - 2, 0);
      for (const auto& t : row) dense[t.index - 2] = t.coeff;
      eb.add(dense);
    }
  };
  feed(sys.steinberg_rows);
  feed(sys.inversion_rows);
  feed(sys.negation_rows);
  return eb;
}

// Independently re-derived constraint for a pair (a, c), a != c: applying
// the two-variable Steinberg instance to x = (1-zeta^a)/(1-zeta^c) gives
//   a^{2-k} f((c-a)/a) - a^{2-k} f(c/a) - c^{2-k} f((c-a)/c) = 0.
std::vector<u32> audit_row(u32 a, u32 c, u32 p, u32 k) {
  u32 edown = norm_mod(2 - static_cast<i64>(k), p - 1);
  u32 fa = pow_mod(a, edown, p);
  u32 fc = pow_mod(c, edown, p);
  std::map<u32, u32> terms;
  auto add = [&](u32 idx, u32 coeff) {
    auto [it, fresh] = terms.emplace(idx, coeff);
    if (!fresh) it->second = add_mod(it->second, coeff, p);
  };
  u32 diff = sub_mod(c, a, p);  // c - a != 0
  add(mul_mod(diff, inv_mod(a, p), p), fa);
  add(mul_mod(c, inv_mod(a, p), p), neg_mod(fa, p));
  add(mul_mod(diff, inv_mod(c, p), p), neg_mod(fc, p));
  std::vector<u32> dense(p - 2, 0);
  for (auto& [idx, coeff] : terms) {
    if (idx != 1) dense[idx - 2] = coeff % p;
  }
  return dense;
}

}  // namespace

TEST_CASE("build_system rejects non-irregular input") {
  CHECK_THROWS_AS(build_system(101, 12), NotIrregular);  // 101 regular at 12
  CHECK_THROWS_AS(build_system(11, 12), NotIrregular);   // k > p-3
  CHECK_THROWS_AS(build_system(691, 14), NotIrregular);
}

TEST_CASE("row shapes at (691,12)") {
  SteinbergSystem sys = build_system(691, 12);
  const u32 p = 691, k = 12;
  CHECK(sys.row_count() <= 4 * (p - 1));
  for (const auto& rows :
       {sys.steinberg_rows, sys.inversion_rows, sys.negation_rows}) {
    for (const auto& row : rows) {
      CHECK(row.size() <= 3);
      for (const auto& t : row) {
        CHECK(t.index >= 2);
        CHECK(t.index <= p - 1);
        CHECK(t.coeff != 0);
      }
    }
  }

  // R(2) reduces to f(2) + 2^{2-k} f((p+1)/2) = 0 after f(1) = 0
  const SteinbergRow& r2 = sys.steinberg_rows.front();
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].index == 2);
  CHECK(r2[1].index == (p + 1) / 2);
  u32 scale = inv_mod(neg_mod(r2[0].coeff, p), p);  // normalize f(2) coeff to 1
  CHECK(mul_mod(neg_mod(r2[1].coeff, p), scale, p) ==
        pow_mod(2, norm_mod(2 - static_cast<i64>(k), p - 1), p));

  // negation row at t = 1 forces f(-1) = 0
  bool forces = false;
  for (const auto& row : sys.negation_rows) {
    if (row.size() == 1 && row[0].index == p - 1) forces = true;
  }
  CHECK(forces);
}

TEST_CASE("solve at (691,12): kernel satisfies everything, E is a line") {
  SteinbergSystem sys = build_system(691, 12);
  SolutionSpace sol = solve(sys);
  CHECK(sol.dimension() >= 1);
  for (const auto& f : sol.basis) {
    CHECK(satisfies(sys, f));
    CHECK(f[0] == 0);        // f(1)
    CHECK(f[691 - 2] == 0);  // f(-1)
  }
  // the zero vector always satisfies the system
  CHECK(satisfies(sys, std::vector<u32>(690, 0)));

  ESubspace e = e_subspace(sol);
  CHECK(e.dimension() == 1);
  CHECK(e.basis[0].size() == 12 / 2 - 2);
}

TEST_CASE("solve matches a direct dense kernel at (37,32)") {
  SteinbergSystem sys = build_system(37, 32);
  SolutionSpace sol = solve(sys);

  // dense route: all rows stacked over the p-2 unknowns
  FpMatrix dense(37, 0, 35);
  std::vector<u32> row(35);
  auto feed = [&](const std::vector<SteinbergRow>& rows) {
    for (const auto& r : rows) {
      std::fill(row.begin(), row.end(), 0);
      for (const auto& t : r) row[t.index - 2] = t.coeff;
      dense.append_row(row);
    }
  };
  feed(sys.steinberg_rows);
  feed(sys.inversion_rows);
  feed(sys.negation_rows);
  auto direct = kernel_basis(dense);
  CHECK(direct.size() == sol.dimension());

  // same span: each fast-path vector (restricted to unknowns) reduces to
  // zero against the dense kernel and vice versa
  EchelonBasis span_direct(37, 35);
  for (const auto& v : direct) span_direct.add(v);
  for (const auto& f : sol.basis) {
    std::vector<u32> restricted(f.begin() + 1, f.end());
    CHECK(span_direct.contains(restricted));
  }
}

TEST_CASE("a corrupted system generically loses solutions") {
  SteinbergSystem sys = build_system(37, 32);
  std::size_t before = solve(sys).dimension();
  REQUIRE(before >= 1);
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<u32> idx(2, 36);
  std::uniform_int_distribution<u32> cf(1, 36);
  for (int trial = 0; trial < 5; ++trial) {
    SteinbergSystem bad = sys;
    SteinbergRow extra;
    u32 i1 = idx(rng), i2 = idx(rng), i3 = idx(rng);
    if (i2 == i1) i2 = (i2 % 35) + 2;
    if (i3 == i1 || i3 == i2) i3 = ((i3 + 7) % 35) + 2;
    extra.push_back({i1, cf(rng)});
    if (i2 != i1) extra.push_back({i2, cf(rng)});
    if (i3 != i1 && i3 != i2) extra.push_back({i3, cf(rng)});
    bad.steinberg_rows.push_back(extra);
    std::size_t after = solve(bad).dimension();
    CHECK(after <= before);
    CHECK(after < before);  // verified for this seed
  }
}

TEST_CASE("adding the two-term families never enlarges the kernel") {
  for (auto [p, k] : {std::pair<u32, u32>{37, 32}, {103, 24}}) {
    SteinbergSystem sys = build_system(p, k);
    std::size_t dim_full = solve(sys).dimension();
    std::size_t dim_a = steinberg_only_kernel_dim(sys);
    CHECK(dim_a >= dim_full);
  }
}

TEST_CASE("e_value basics") {
  std::vector<u32> zero(36, 0);
  CHECK(e_value(zero, 3, 37, 32) == 0);
  CHECK_THROWS_AS(e_value(zero, 4, 37, 32), EvenIndex);

  std::mt19937_64 rng(5);
  auto f = random_f(37, rng);
  for (long long i : {1, 3, 5, 17}) {
    CHECK(e_value(f, i, 37, 32) == e_value(f, i + 36, 37, 32));
  }
}

TEST_CASE("closed form equals the brute-force double sum") {
  std::mt19937_64 rng(99);
  // the synthetic non-irregular case from the oracle design
  {
    auto f = random_f(13, rng);
    for (long long i : {1, 3, 5, 7}) {
      CHECK(e_value(f, i, 13, 4) == e_value_brute(f, i, 13, 4));
    }
  }
  for (u32 p = 5; p <= 23; p = static_cast<u32>(next_prime(p))) {
    for (int trial = 0; trial < 10; ++trial) {
      auto f = random_f(p, rng);
      u32 k = 4 + 2 * static_cast<u32>(trial % 5);
      for (long long i : {1, 3, 5}) {
        CHECK(e_value(f, i, p, k) == e_value_brute(f, i, p, k));
      }
    }
  }
}

TEST_CASE("random (a,c) Steinberg instances are consequences of the rows") {
  for (auto [p, k] : {std::pair<u32, u32>{37, 32}, {103, 24}}) {
    SteinbergSystem sys = build_system(p, k);
    EchelonBasis rows = system_row_space(sys);
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<u32> dist(1, p - 1);
    for (int trial = 0; trial < 100; ++trial) {
      u32 a = dist(rng), c = dist(rng);
      if (a == c) continue;
      CHECK(rows.contains(audit_row(a, c, p, k)));
    }
  }
}

TEST_CASE("e_subspace is scale-invariant and empty for empty input") {
  SolutionSpace empty;
  empty.p = 37;
  empty.k = 32;
  CHECK(e_subspace(empty).dimension() == 0);

  SteinbergSystem sys = build_system(37, 32);
  SolutionSpace sol = solve(sys);
  ESubspace base = e_subspace(sol);
  SolutionSpace scaled = sol;
  for (auto& f : scaled.basis) {
    for (auto& x : f) x = mul_mod(x, 17, 37);
  }
  ESubspace again = e_subspace(scaled);
  CHECK(base.basis == again.basis);  // echelon form kills the scaling
}
