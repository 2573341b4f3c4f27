#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ladder/fp.hpp"

namespace ladder {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Status {
  MATCH,
  MISMATCH,
  INDETERMINATE_CUP,
  INDETERMINATE_MS,
  NO_CONGRUENCE,
  ERROR,
};

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);  // throws UnknownFormat

struct MsInfo {
  u32 dim_M_plus = 0;
  u32 dim_S_plus = 0;
  std::vector<u32> hecke_primes;
  friend bool operator==(const MsInfo&, const MsInfo&) = default;
};

struct ReportTimings {
  double cup_ms = 0;
  double modsym_ms = 0;
  double total_ms = 0;
};

// Per-pair verification outcome. Everything except timings and
// error_message is serialized; see emit_report for the layouts.
struct VerificationReport {
  u32 p = 0;
  u32 k = 0;
  Status status = Status::ERROR;
  u32 dim_solution = 0;
  u32 dim_E = 0;
  std::optional<u32> lambda;  // E_basis[0] = lambda * w when MATCH
  std::vector<u32> w;
  std::vector<std::vector<u32>> E_basis;
  u32 e1 = 0;  // informational, never part of the MATCH predicate
  std::string version;
  MsInfo ms;
  ReportTimings timings;      // excluded from content equality
  std::string error_message;  // diagnostics only, not serialized
};

// Equality of every serialized field except timings.
bool same_content(const VerificationReport& a, const VerificationReport& b);

enum class ReportFormat { json, csv };
ReportFormat format_from_string(std::string_view s);  // throws UnknownFormat

// JSON: array of objects with fixed key order
//   {"p", "k", "status", "dim_solution", "dim_E", "lambda", "w",
//    "E_basis", "e1", "version", "ms": {"dim_M_plus", "dim_S_plus",
//    "hecke_primes"}, "timings": {...}}
// CSV: header "p,k,status,dim_solution,dim_E,lambda,w,E0,e1" with vectors
// as semicolon-separated decimals, an empty lambda when absent, and E0 the
// first E_basis vector. Residues are decimal integers everywhere.
std::string emit_report(const std::vector<VerificationReport>& reports,
                        ReportFormat format);

std::vector<VerificationReport> parse_reports(std::string_view json_text);

}  // namespace ladder
