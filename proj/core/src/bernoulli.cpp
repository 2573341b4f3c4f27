#include "ladder/bernoulli.hpp"

#include <stdexcept>
#include <string>

namespace ladder {

std::vector<u32> bernoulli_mod_p(u32 p) {
  if (p < 5 || !is_prime(p)) {
    throw CompositeModulus("bernoulli_mod_p: modulus " + std::to_string(p) +
                           " is not a prime >= 5");
  }
  const u32 top = p - 3;  // highest index computed
  std::vector<u32> b(top + 1, 0);
  b[0] = 1;

  // binom[j] = C(m+1, j) for the current m, maintained by Pascal rows.
  // All indices stay below p, so no Lucas-type corrections are needed.
  std::vector<u32> binom(top + 2, 0);
  binom[0] = 1;
  binom[1] = 1;  // row for m+1 = 1
  for (u32 m = 1; m <= top; ++m) {
    // advance Pascal row from C(m, .) to C(m+1, .)
    for (u32 j = m + 1; j >= 1; --j) binom[j] = add_mod(binom[j], binom[j - 1], p);
    u64 acc = 0;
    for (u32 j = 0; j < m; ++j) {
      acc += static_cast<u64>(binom[j]) * b[j];
      if (acc >= (u64(1) << 62)) acc %= p;
    }
    u32 s = static_cast<u32>(acc % p);
    b[m] = mul_mod(neg_mod(s, p), inv_mod(m + 1, p), p);
  }
  return b;
}

std::vector<u32> irregular_indices(u32 p) {
  std::vector<u32> table = bernoulli_mod_p(p);
  std::vector<u32> out;
  for (u32 k = 2; k <= p - 3; k += 2) {
    if (table[k] == 0) out.push_back(k);
  }
  return out;
}

std::vector<IrregularPair> scan_irregular(u32 p_max) {
  std::vector<IrregularPair> out;
  for (u32 p = 5; p <= p_max && p_max >= 5; p = static_cast<u32>(next_prime(p))) {
    for (u32 k : irregular_indices(p)) {
      if (k < 12) {
        throw std::logic_error("scan_irregular: index k=" + std::to_string(k) +
                               " < 12 at p=" + std::to_string(p));
      }
      out.push_back({p, k});
    }
  }
  return out;
}

}  // namespace ladder
