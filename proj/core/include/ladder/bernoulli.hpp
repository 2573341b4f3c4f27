#pragma once

#include <vector>

#include "ladder/fp.hpp"

namespace ladder {

// Residues of B_0, B_1, ..., B_{p-3} mod p for an odd prime p >= 5,
// computed with the recurrence B_m = -(m+1)^{-1} sum_{j<m} C(m+1,j) B_j.
// Every B_j with j <= p-3 is p-integral (von Staudt-Clausen: p divides a
// Bernoulli denominator only when (p-1) | j), so the residues are exact.
// Throws CompositeModulus unless p is a prime >= 5.
std::vector<u32> bernoulli_mod_p(u32 p);

// Even k in [2, p-3] with B_k = 0 mod p, ascending. In that range p never
// divides k, so this is the same condition as p | B_k/k.
std::vector<u32> irregular_indices(u32 p);

struct IrregularPair {
  u32 p = 0;
  u32 k = 0;
  friend auto operator<=>(const IrregularPair&, const IrregularPair&) =
      default;
};

// All irregular pairs with p <= p_max, ordered by (p, k). Every emitted k
// satisfies 12 <= k <= p-3; an index below 12 would contradict the weight
// bound for level-one cusp forms and aborts the scan.
std::vector<IrregularPair> scan_irregular(u32 p_max);

}  // namespace ladder
