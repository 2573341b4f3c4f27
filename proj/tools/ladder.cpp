#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ladder/bernoulli.hpp"
#include "ladder/steinberg.hpp"
#include "ladder/verify.hpp"

namespace {

using ladder::ReportFormat;
using ladder::Status;
using ladder::VerificationReport;

std::optional<std::string> resolve_cache(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LADDER_CACHE"); env && *env)
    return std::string(env);
  return std::nullopt;
}

std::string emit_pairs(const std::vector<ladder::IrregularPair>& pairs,
                       ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& pr : pairs)
      arr.push_back(nlohmann::ordered_json{{"p", pr.p}, {"k", pr.k}});
    return arr.dump();
  }
  std::string out = "p,k\n";
  for (const auto& pr : pairs) {
    out += std::to_string(pr.p) + "," + std::to_string(pr.k) + "\n";
  }
  return out;
}

// exit code 0 iff every determinate status is MATCH
int exit_code_for(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == Status::MISMATCH) return 1;
  }
  return 0;
}

void print_errors(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.error_message.empty()) {
      std::cerr << "ladder: (" << r.p << ", " << r.k
                << "): " << r.error_message << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical verification, per irregular pair (p, k), of the projective "
      "equality between cup-product values on cyclotomic p-units and mod-p "
      "period ratios of the Eisenstein-congruent cusp form"};
  app.require_subcommand(1);

  unsigned pmax = 0;
  int opt_p = 0, opt_k = 0;
  unsigned jobs = 1;
  unsigned hecke_primes = 0;
  std::string format = "json";
  std::string cache_flag;
  bool diagnostics = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  CLI::App* scan =
      app.add_subcommand("scan", "List irregular pairs with p <= pmax");
  scan->add_option("--pmax", pmax, "Upper bound on p")->required();
  add_format(scan);

  CLI::App* verify =
      app.add_subcommand("verify", "Verify a single irregular pair");
  verify->add_option("-p", opt_p, "Prime p")->required();
  verify->add_option("-k", opt_k, "Even index k")->required();
  verify->add_option("--cache", cache_flag,
                     "Cache directory (default: $LADDER_CACHE)");
  verify->add_option("--hecke-primes", hecke_primes,
                     "Use Hecke primes at least up to this bound");
  verify->add_flag("--diagnostics", diagnostics,
                   "Also report the Steinberg-rows-only kernel dimension "
                   "on stderr");
  add_format(verify);

  CLI::App* range = app.add_subcommand(
      "verify-range", "Verify every irregular pair with p <= pmax");
  range->add_option("--pmax", pmax, "Upper bound on p")->required();
  range->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  range->add_option("--cache", cache_flag,
                    "Cache directory (default: $LADDER_CACHE)");
  range->add_option("--hecke-primes", hecke_primes,
                    "Use Hecke primes at least up to this bound");
  add_format(range);

  CLI11_PARSE(app, argc, argv);

  try {
    ReportFormat fmt = ladder::format_from_string(format);
    if (scan->parsed()) {
      std::cout << emit_pairs(ladder::scan_irregular(pmax), fmt);
      if (fmt == ReportFormat::json) std::cout << "\n";
      return 0;
    }

    ladder::VerifyOptions opts;
    opts.hecke_primes_at_least = hecke_primes;
    opts.cache_dir = resolve_cache(cache_flag);

    std::vector<VerificationReport> reports;
    if (verify->parsed()) {
      if (opt_p <= 0 || opt_k <= 0) throw CLI::ValidationError("p, k must be positive");
      reports.push_back(ladder::verify_pair(static_cast<ladder::u32>(opt_p),
                                            static_cast<ladder::u32>(opt_k),
                                            opts));
      if (diagnostics) {
        auto sys = ladder::build_system(static_cast<ladder::u32>(opt_p),
                                        static_cast<ladder::u32>(opt_k));
        std::cerr << "ladder: dim kernel(Steinberg rows only) = "
                  << ladder::steinberg_only_kernel_dim(sys)
                  << ", dim kernel(full system) = " << reports[0].dim_solution
                  << "\n";
      }
    } else {
      reports = ladder::scan_verify(pmax, jobs, opts);
    }
    std::cout << ladder::emit_report(reports, fmt);
    if (fmt == ReportFormat::json) std::cout << "\n";
    print_errors(reports);
    return exit_code_for(reports);
  } catch (const std::exception& ex) {
    std::cerr << "ladder: " << ex.what() << "\n";
    return 2;
  }
}
