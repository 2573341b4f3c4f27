#include "ladder/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ladder/bernoulli.hpp"
#include "ladder/fp_matrix.hpp"
#include "ladder/modular_symbols.hpp"
#include "ladder/steinberg.hpp"

namespace ladder {

namespace {

namespace fs = std::filesystem;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void require_irregular(u32 p, u32 k) {
  if (!is_prime(p) || p < 5 || k % 2 != 0 || k < 12 || k + 3 > p ||
      bernoulli_mod_p(p)[k] != 0) {
    throw NotIrregular("verify_pair: (" + std::to_string(p) + ", " +
                       std::to_string(k) + ") is not an irregular pair");
  }
}

fs::path cache_file(const std::string& dir, u32 p, u32 k) {
  return fs::path(dir) / std::to_string(p) / (std::to_string(k) + ".json");
}

std::optional<VerificationReport> cache_load(const std::string& dir, u32 p,
                                             u32 k) {
  fs::path file = cache_file(dir, p, k);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    std::vector<VerificationReport> reports = parse_reports(buf.str());
    if (reports.size() == 1 && reports[0].p == p && reports[0].k == k &&
        reports[0].version == kToolVersion) {
      return reports[0];
    }
  } catch (const std::exception&) {
    // unreadable entry: treat as a miss and overwrite
  }
  return std::nullopt;
}

void cache_store(const std::string& dir, const VerificationReport& r) {
  fs::path file = cache_file(dir, r.p, r.k);
  fs::create_directories(file.parent_path());
  auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  fs::path tmp = file;
  tmp += ".tmp." + std::to_string(stamp) + "." +
         std::to_string(std::hash<std::thread::id>{}(
             std::this_thread::get_id()) & 0xffff);
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cache_store: cannot write " +
                                       tmp.string());
    out << emit_report({r}, ReportFormat::json);
  }
  fs::rename(tmp, file);  // atomic publish
}

// e_{1,k} evaluated consistently with the scaling of E_basis[0]: express
// E_basis[0] in the raw e-vectors of the kernel basis and combine the
// kernel vectors' values at i = 1 with the same coefficients.
u32 compute_e1(const SolutionSpace& sol, const ESubspace& e) {
  if (e.basis.empty() || sol.basis.empty()) return 0;
  const u32 p = sol.p;
  const u32 k = sol.k;
  std::vector<std::vector<u32>> raw;
  for (const auto& f : sol.basis) {
    std::vector<u32> v;
    for (u32 i = 3; i + 3 <= k; i += 2) v.push_back(e_value(f, i, p, k));
    raw.push_back(std::move(v));
  }
  auto coeffs = in_span(raw, e.basis.front(), p);
  if (!coeffs) return 0;
  u32 out = 0;
  for (std::size_t j = 0; j < sol.basis.size(); ++j) {
    out = add_mod(out, mul_mod((*coeffs)[j], e_value(sol.basis[j], 1, p, k), p),
                  p);
  }
  return out;
}

VerificationReport compute_pair(u32 p, u32 k, const VerifyOptions& opts) {
  VerificationReport r;
  r.p = p;
  r.k = k;
  r.version = std::string(kToolVersion);
  Timer t_total;
  try {
    Timer t_cup;
    SteinbergSystem sys = build_system(p, k);
    SolutionSpace sol = solve(sys);
    r.dim_solution = static_cast<u32>(sol.dimension());
    ESubspace e = e_subspace(sol);
    r.dim_E = static_cast<u32>(e.dimension());
    r.E_basis = e.basis;
    r.e1 = compute_e1(sol, e);
    r.timings.cup_ms = t_cup.ms();

    Timer t_ms;
    bool ms_ok = false;
    Status ms_status = Status::INDETERMINATE_MS;
    try {
      SymbolSpace space = build_space(p, k);
      r.ms.dim_M_plus = static_cast<u32>(space.dim_M_plus());
      r.ms.dim_S_plus = static_cast<u32>(space.dim_S_plus());
      if (space.dim_S_plus() != cusp_dimension_formula(k) ||
          space.dim_M_plus() != space.dim_S_plus() + 1) {
        ms_status = Status::INDETERMINATE_MS;  // dimension guard tripped
      } else {
        EisensteinLine line =
            eisenstein_line(space, opts.hecke_primes_at_least);
        r.ms.hecke_primes = line.hecke_primes;
        r.w = line.w;
        ms_ok = true;
      }
    } catch (const BoundaryDegenerate& ex) {
      ms_status = Status::INDETERMINATE_MS;
      r.error_message = ex.what();
    } catch (const MultiplicityFailure& ex) {
      ms_status = Status::INDETERMINATE_MS;
      r.error_message = ex.what();
    } catch (const NoEisensteinCongruence& ex) {
      ms_status = Status::NO_CONGRUENCE;
      r.error_message = ex.what();
    }
    r.timings.modsym_ms = t_ms.ms();

    if (!ms_ok) {
      r.status = ms_status;
    } else if (r.dim_E != 1) {
      r.status = Status::INDETERMINATE_CUP;
    } else if (std::all_of(r.w.begin(), r.w.end(),
                           [](u32 x) { return x == 0; })) {
      // the functional exists but vanishes on every compared symbol; there
      // is no line to compare against
      r.status = Status::INDETERMINATE_MS;
    } else {
      auto coeff = in_span({r.w}, r.E_basis.front(), p);
      if (coeff && (*coeff)[0] != 0) {
        r.status = Status::MATCH;
        r.lambda = (*coeff)[0];
      } else {
        r.status = Status::MISMATCH;
      }
    }
  } catch (const NotIrregular&) {
    throw;
  } catch (const std::exception& ex) {
    r.status = Status::ERROR;
    r.error_message = ex.what();
  }
  r.timings.total_ms = t_total.ms();
  return r;
}

}  // namespace

VerificationReport verify_pair(u32 p, u32 k, const VerifyOptions& opts) {
  require_irregular(p, k);
  if (opts.cache_dir) {
    if (auto cached = cache_load(*opts.cache_dir, p, k)) return *cached;
  }
  VerificationReport r = compute_pair(p, k, opts);
  if (opts.cache_dir) cache_store(*opts.cache_dir, r);
  return r;
}

std::vector<VerificationReport> scan_verify(u32 p_max, unsigned jobs,
                                            const VerifyOptions& opts) {
  std::vector<IrregularPair> pairs = scan_irregular(p_max);
  std::vector<VerificationReport> out(pairs.size());

  auto run_one = [&](std::size_t i) {
    try {
      out[i] = verify_pair(pairs[i].p, pairs[i].k, opts);
    } catch (const std::exception& ex) {
      VerificationReport r;
      r.p = pairs[i].p;
      r.k = pairs[i].k;
      r.version = std::string(kToolVersion);
      r.status = Status::ERROR;
      r.error_message = ex.what();
      out[i] = std::move(r);
    }
  };

  if (jobs <= 1 || pairs.size() <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) run_one(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(jobs, pairs.size()));
  std::vector<std::thread> workers;
  workers.reserve(n_workers);
  for (unsigned t = 0; t < n_workers; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= pairs.size()) break;
        run_one(i);
      }
    });
  }
  for (auto& w : workers) w.join();
  return out;
}

}  // namespace ladder
