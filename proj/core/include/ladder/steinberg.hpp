#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ladder/fp.hpp"

namespace ladder {

// One unknown-with-coefficient in a relation row. Unknowns are the values
// f(c) for c in (Z/p)^* with f(1) fixed to 0 and substituted away, so
// index ranges over [2, p-1].
struct SteinbergTerm {
  u32 index;
  u32 coeff;  // nonzero
  friend bool operator==(const SteinbergTerm&, const SteinbergTerm&) =
      default;
};

using SteinbergRow = std::vector<SteinbergTerm>;

// Homogeneous F_p system cutting out the possible eigenprojected pairing
// values f(c) = <1 - zeta, 1 - zeta^c> under a scalar identification of
// the one-dimensional target with F_p.
//
// Every row is a Steinberg instance <x, 1-x> = 0 on p-units, expanded
// bilinearly with <u_a, u_b> = a^{2-k} f(b a^{-1}) (Galois equivariance),
// f(1) = 0 (antisymmetry), and <zeta, .> = <-1, .> = 0. Writing
// u_m = 1 - zeta^m, the families are:
//
//   (a) steinberg_rows, from x = u_a/u_c (t = c/a):
//         f(t-1) - f(t) - t^{2-k} f((t-1) t^{-1}) = 0
//   (b) inversion_rows (antisymmetry + equivariance):
//         f(t^{-1}) + t^{k-2} f(t) = 0
//   (c) negation_rows, from u_{-a} = -zeta^{-a} u_a:
//         f(-t) - f(t) = 0
//   (d),(e) plus_unit_rows, from ratios of the units 1 + zeta^m
//       = u_{2m}/u_m. With x = (1+zeta^a)/(1+zeta^c) one has
//       1-x = -zeta^a u_{c-a} u_c / u_{2c}, and with
//       x = (1-zeta^a)/(1+zeta^c) = u_a u_c / u_{2c} one has
//       1-x = zeta^a u_{2(c-a)} u_c / (u_{c-a} u_{2c}); both are expanded
//       at a = 1 for every t = c (the general (a, c) instance is the same
//       row up to the overall unit a^{2-k}).
//
// Families (a)-(c) alone leave a solution space whose e-vector span has
// the dimension of the full weight-k cuspidal space; the plus-unit rows
// cut it to the single line reported for every irregular pair in range.
// All exponents are reduced mod p-1 before powering.
struct SteinbergSystem {
  u32 p = 0, k = 0;
  std::vector<SteinbergRow> steinberg_rows;  // <= 3 terms each
  std::vector<SteinbergRow> inversion_rows;  // <= 2 terms each
  std::vector<SteinbergRow> negation_rows;   // <= 2 terms each
  std::vector<SteinbergRow> plus_unit_rows;  // <= 12 terms each

  std::size_t unknowns() const { return p - 2; }
  std::size_t row_count() const {
    return steinberg_rows.size() + inversion_rows.size() +
           negation_rows.size() + plus_unit_rows.size();
  }
};

// Expands the Steinberg instance <x, 1-x> = 0 into a relation row, where
// x = (unit) * prod_a u_a^{m_a} and 1-x = (unit) * prod_b u_b^{n_b} are
// given by their exponent lists (duplicate exponents accumulate; roots of
// unity and -1 contribute nothing). Returns an empty row when some
// exponent vanishes mod p, i.e. the instance degenerates.
SteinbergRow instance_row(
    std::span<const std::pair<long long, int>> x_exponents,
    std::span<const std::pair<long long, int>> y_exponents, u32 p, u32 k);

// Throws NotIrregular unless k is even, 12 <= k <= p-3 and p | B_k.
SteinbergSystem build_system(u32 p, u32 k);

// Kernel of the full system. Basis vectors have length p-1 and are indexed
// by c-1 for c in [1, p-1]; the coordinate for c = 1 is always 0.
struct SolutionSpace {
  u32 p = 0, k = 0;
  std::vector<std::vector<u32>> basis;
  std::size_t dimension() const { return basis.size(); }
};

// Deterministic kernel basis: the two-term families (b), (c) are folded
// into unknown classes by a union-find with multipliers, the remaining
// rows are reduced onto the class representatives and eliminated densely,
// and the kernel is expanded back to full length. Every returned vector is
// re-checked against every row.
SolutionSpace solve(const SteinbergSystem& system);

// Kernel dimension of the Steinberg family (a) alone, recorded next to
// the full kernel as a consistency diagnostic. Dense elimination on all
// p-2 unknowns, noticeably slower than solve() for large p.
std::size_t steinberg_only_kernel_dim(const SteinbergSystem& system);

// True when f (length p-1, indexed by c-1) satisfies every row exactly.
bool satisfies(const SteinbergSystem& system, std::span<const u32> f);

// phi(e_{i,k}) for the solution f: the closed form
// -sum_{c in (Z/p)^*} c^{j-1} f(c) with j = k - i mod p-1, equal to the
// bilinear double sum over ordered pairs by Galois equivariance.
// Throws EvenIndex for even i.
u32 e_value(std::span<const u32> f, long long i, u32 p, u32 k);

// Span of the vectors (e_value(f,3), e_value(f,5), ..., e_value(f,k-3))
// over the kernel basis, as a deterministic row-echelon basis of a
// subspace of F_p^{k/2-2}.
struct ESubspace {
  std::vector<std::vector<u32>> basis;
  std::size_t dimension() const { return basis.size(); }
};

ESubspace e_subspace(const SolutionSpace& solutions);

}  // namespace ladder
