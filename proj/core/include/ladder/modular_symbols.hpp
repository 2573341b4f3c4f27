#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ladder/fp_matrix.hpp"

namespace ladder {

// A point of P^1(Q): num/den in lowest terms with den >= 0; infinity is 1/0.
struct ProjPoint {
  long long num = 0;
  long long den = 1;

  static ProjPoint infinity() { return {1, 0}; }
  static ProjPoint of(long long num, long long den);  // normalizes
  bool is_infinity() const { return den == 0; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// Presentation of the plus quotient M_k(F_p)^+ of weight-k level-one
// modular symbols on the k-1 generators X^{i-1} Y^{k-1-i} {0,oo},
// 1 <= i <= k-1. Polynomial coefficient vectors are indexed by the
// X-degree j = i-1 throughout. Immutable once built, safe to share.
class SymbolSpace {
 public:
  u32 p() const { return p_; }
  u32 k() const { return k_; }
  std::size_t gen_count() const { return k_ - 1; }
  std::size_t dim_M_plus() const { return dim_m_; }
  std::size_t dim_S_plus() const { return dim_s_; }

  // Generator-to-basis map: dim_M_plus rows, k-1 columns (column i-1 is
  // the class of the i-th generator). Columns at even i are zero: the
  // involution sends those generators to their negatives.
  const FpMatrix& projection() const { return projection_; }

  // X-degrees of the generators whose classes form the chosen basis
  // (first independent generator images in index order).
  const std::vector<std::size_t>& basis_xdegs() const { return basis_xdegs_; }

  // Cuspidal subspace basis, dim_S_plus rows of dim_M_plus coordinates
  // (first independent images of the generators with 2 <= i <= k-2).
  const FpMatrix& cusp_basis() const { return cusp_basis_; }

  // Class of generator i (1-based), as dim_M_plus coordinates.
  std::vector<u32> generator_class(std::size_t i) const;

  // Plus-quotient class of a coefficient vector over all k-1 generators.
  std::vector<u32> project_gen_vector(std::span<const u32> coeffs) const;

  // Coordinates w.r.t. cusp_basis() of a vector known to lie in the
  // cuspidal subspace.
  std::vector<u32> cusp_coords(std::span<const u32> v) const;

  u32 binom(std::size_t n, std::size_t r) const {
    return binom_[n * (n + 1) / 2 + r];
  }

 private:
  friend SymbolSpace build_space(u32, u32);
  SymbolSpace() = default;

  u32 p_ = 0, k_ = 0;
  std::size_t dim_m_ = 0, dim_s_ = 0;
  FpMatrix projection_;        // dim_M x (k-1), odd X-degree columns zero
  FpMatrix proj_even_;         // dim_M x (k/2), columns indexed by j/2
  std::vector<std::size_t> basis_xdegs_;
  FpMatrix cusp_basis_;        // dim_S x dim_M
  FpMatrix cusp_coord_op_;     // dim_S x dim_S, see cusp_coords()
  std::vector<std::size_t> cusp_pivots_;
  std::vector<u32> binom_;     // triangular C(n, r) mod p, n <= k-2
};

// Builds M_k(F_p)^+ as the quotient of the free module on the generators
// by the two-term and three-term Manin relations and the plus involution.
// Requires k even, k >= 4 and p > k prime. Throws BoundaryDegenerate when
// the images of the generators with 2 <= i <= k-2 fail to have codimension
// exactly one.
SymbolSpace build_space(u32 p, u32 k);

// Class of P{a, b} in basis coordinates: the path is split through
// continued-fraction convergents into unimodular pieces, each folded back
// onto {0,oo} by the coinvariance identity. poly has k-1 coefficients
// indexed by X-degree. Additive in concatenated paths; {a, a} gives 0.
std::vector<u32> path_reduce(const SymbolSpace& space,
                             std::span<const u32> poly, ProjPoint a,
                             ProjPoint b);

// Matrix of T_ell on the chosen basis of M_k(F_p)^+, computed from the
// determinant-ell coset representatives [[1,j],[0,ell]] (0 <= j < ell)
// and [[ell,0],[0,1]]. Throws BadPrime when ell == p or ell is composite.
FpMatrix hecke_matrix(const SymbolSpace& space, u32 ell);

// Matrix of T_ell restricted to the cuspidal subspace, in cusp_basis()
// coordinates.
FpMatrix hecke_matrix_cuspidal(const SymbolSpace& space, u32 ell);

// The functional on M_k(F_p)^+ vanishing on the cuspidal subspace and
// sending X^{k-2}{0,oo} to 1, as a coefficient row over the basis.
std::vector<u32> boundary_functional(const SymbolSpace& space);

struct EisensteinLine {
  // Functional on the cuspidal subspace (coefficients w.r.t. cusp_basis())
  // annihilated by every T_ell - 1 - ell^{k-1} tried; defined up to scalar.
  std::vector<u32> functional;
  // Values at the classes of X^{i-1}Y^{k-1-i}{0,oo} for odd i,
  // 3 <= i <= k-3, ascending (k/2 - 2 entries).
  std::vector<u32> w;
  std::vector<u32> hecke_primes;  // primes actually intersected
};

// Intersects the dual eigenspaces ker(T_ell^* - 1 - ell^{k-1}) over
// ell = 2, 3, 5, ... (skipping ell = p) until the dimension has been
// stable for three consecutive primes and ell > k/6; extend_primes_to
// forces the iteration to continue at least through that bound. Throws
// NoEisensteinCongruence when the intersection dies and
// MultiplicityFailure when it stabilizes with dimension >= 2.
EisensteinLine eisenstein_line(const SymbolSpace& space,
                               u32 extend_primes_to = 0);

// Class of the involution image of generator i; the involution fixes the
// plus quotient pointwise on classes, so this equals generator_class(i)
// for odd i and is zero (as is the generator's own class) for even i.
std::vector<u32> involution_gen_class(const SymbolSpace& space,
                                      std::size_t i);

// Expected dim S_k(F_p)^+ for p > k: floor(k/12) - [k = 2 mod 12].
inline std::size_t cusp_dimension_formula(u32 k) {
  return k / 12 - (k % 12 == 2 ? 1 : 0);
}

}  // namespace ladder
