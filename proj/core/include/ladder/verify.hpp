#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladder/report.hpp"

namespace ladder {

struct VerifyOptions {
  // Force the Eisenstein dual intersection to use primes at least up to
  // this bound, on top of the built-in stopping rule.
  u32 hecke_primes_at_least = 0;
  // One JSON file per pair at <cache_dir>/<p>/<k>.json, written atomically;
  // entries from other tool versions are recomputed.
  std::optional<std::string> cache_dir;
};

// Runs both pipelines for one irregular pair and compares the two vectors
// projectively. Throws NotIrregular when (p, k) is not an irregular pair;
// every other failure is folded into the report status.
//
// Status precedence follows the pipelines: INDETERMINATE_MS when the
// modular-symbol dimension guard or the Eisenstein multiplicity check
// fails, NO_CONGRUENCE when the dual eigenspace is empty, then
// INDETERMINATE_CUP when dim E != 1, then MATCH/MISMATCH by whether
// E_basis[0] lands in the line spanned by w.
VerificationReport verify_pair(u32 p, u32 k, const VerifyOptions& opts = {});

// One report per irregular pair with p <= p_max, ordered by (p, k).
// Pair-level parallelism; the output is identical for any jobs value.
// A pair that throws is reported with status ERROR and never aborts the
// scan.
std::vector<VerificationReport> scan_verify(u32 p_max, unsigned jobs = 1,
                                            const VerifyOptions& opts = {});

}  // namespace ladder
