#include "ladder/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ladder {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::MATCH: return "MATCH";
    case Status::MISMATCH: return "MISMATCH";
    case Status::INDETERMINATE_CUP: return "INDETERMINATE_CUP";
    case Status::INDETERMINATE_MS: return "INDETERMINATE_MS";
    case Status::NO_CONGRUENCE: return "NO_CONGRUENCE";
    case Status::ERROR: return "ERROR";
  }
  return "ERROR";
}

Status status_from_string(std::string_view s) {
  if (s == "MATCH") return Status::MATCH;
  if (s == "MISMATCH") return Status::MISMATCH;
  if (s == "INDETERMINATE_CUP") return Status::INDETERMINATE_CUP;
  if (s == "INDETERMINATE_MS") return Status::INDETERMINATE_MS;
  if (s == "NO_CONGRUENCE") return Status::NO_CONGRUENCE;
  if (s == "ERROR") return Status::ERROR;
  throw UnknownFormat("unknown status: " + std::string(s));
}

bool same_content(const VerificationReport& a, const VerificationReport& b) {
  return a.p == b.p && a.k == b.k && a.status == b.status &&
         a.dim_solution == b.dim_solution && a.dim_E == b.dim_E &&
         a.lambda == b.lambda && a.w == b.w && a.E_basis == b.E_basis &&
         a.e1 == b.e1 && a.version == b.version && a.ms == b.ms;
}

ReportFormat format_from_string(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw UnknownFormat("unknown report format: " + std::string(s));
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["k"] = r.k;
  j["status"] = to_string(r.status);
  j["dim_solution"] = r.dim_solution;
  j["dim_E"] = r.dim_E;
  if (r.lambda) {
    j["lambda"] = *r.lambda;
  } else {
    j["lambda"] = nullptr;
  }
  j["w"] = r.w;
  j["E_basis"] = r.E_basis;
  j["e1"] = r.e1;
  j["version"] = r.version;
  j["ms"] = ordered_json{{"dim_M_plus", r.ms.dim_M_plus},
                         {"dim_S_plus", r.ms.dim_S_plus},
                         {"hecke_primes", r.ms.hecke_primes}};
  j["timings"] = ordered_json{{"cup_ms", r.timings.cup_ms},
                              {"modsym_ms", r.timings.modsym_ms},
                              {"total_ms", r.timings.total_ms}};
  return j;
}

std::string join_vec(const std::vector<u32>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ';';
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string emit_report(const std::vector<VerificationReport>& reports,
                        ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump();
  }
  // csv
  std::ostringstream os;
  os << "p,k,status,dim_solution,dim_E,lambda,w,E0,e1\n";
  for (const auto& r : reports) {
    os << r.p << ',' << r.k << ',' << to_string(r.status) << ','
       << r.dim_solution << ',' << r.dim_E << ',';
    if (r.lambda) os << *r.lambda;
    os << ',' << join_vec(r.w) << ',';
    if (!r.E_basis.empty()) os << join_vec(r.E_basis.front());
    os << ',' << r.e1 << '\n';
  }
  return os.str();
}

std::vector<VerificationReport> parse_reports(std::string_view json_text) {
  ordered_json arr = ordered_json::parse(json_text);
  if (!arr.is_array()) throw UnknownFormat("parse_reports: expected array");
  std::vector<VerificationReport> out;
  for (const auto& j : arr) {
    VerificationReport r;
    r.p = j.at("p").get<u32>();
    r.k = j.at("k").get<u32>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.dim_solution = j.at("dim_solution").get<u32>();
    r.dim_E = j.at("dim_E").get<u32>();
    if (!j.at("lambda").is_null()) r.lambda = j.at("lambda").get<u32>();
    r.w = j.at("w").get<std::vector<u32>>();
    r.E_basis = j.at("E_basis").get<std::vector<std::vector<u32>>>();
    r.e1 = j.at("e1").get<u32>();
    r.version = j.at("version").get<std::string>();
    const auto& ms = j.at("ms");
    r.ms.dim_M_plus = ms.at("dim_M_plus").get<u32>();
    r.ms.dim_S_plus = ms.at("dim_S_plus").get<u32>();
    r.ms.hecke_primes = ms.at("hecke_primes").get<std::vector<u32>>();
    if (j.contains("timings")) {
      r.timings.cup_ms = j["timings"].value("cup_ms", 0.0);
      r.timings.modsym_ms = j["timings"].value("modsym_ms", 0.0);
      r.timings.total_ms = j["timings"].value("total_ms", 0.0);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ladder
