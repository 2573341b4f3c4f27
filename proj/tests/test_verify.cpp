#include <cstdio>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "ladder/fp_matrix.hpp"
#include "ladder/verify.hpp"

using namespace ladder;

namespace {

std::string strip_timings(std::vector<VerificationReport> reports) {
  for (auto& r : reports) r.timings = {};
  return emit_report(reports, ReportFormat::json);
}

}  // namespace

TEST_CASE("verify_pair (691,12) matches") {
  VerificationReport r = verify_pair(691, 12);
  CHECK(r.status == Status::MATCH);
  CHECK(r.dim_E == 1);
  CHECK(r.ms.dim_M_plus == 2);
  CHECK(r.ms.dim_S_plus == 1);
  REQUIRE(r.lambda.has_value());
  CHECK(*r.lambda != 0);
  REQUIRE(r.w.size() == 4);
  REQUIRE(r.E_basis.size() == 1);
  // the MATCH invariant: E_basis[0] = lambda * w
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r.E_basis[0][i] == mul_mod(*r.lambda, r.w[i], 691));
  }
  CHECK(r.version == kToolVersion);
}

TEST_CASE("verify_pair rejects non-irregular pairs") {
  CHECK_THROWS_AS(verify_pair(11, 12), NotIrregular);
  CHECK_THROWS_AS(verify_pair(101, 12), NotIrregular);
}

TEST_CASE("both pairs at p = 157 verify independently") {
  VerificationReport a = verify_pair(157, 62);
  VerificationReport b = verify_pair(157, 110);
  CHECK(a.status == Status::MATCH);
  CHECK(b.status == Status::MATCH);
  CHECK(a.w.size() == 62 / 2 - 2);
  CHECK(b.w.size() == 110 / 2 - 2);
}

TEST_CASE("scan_verify bounds") {
  CHECK(scan_verify(36).empty());
  auto one = scan_verify(37);
  REQUIRE(one.size() == 1);
  CHECK(one[0].p == 37);
  CHECK(one[0].k == 32);
  CHECK(one[0].status == Status::MATCH);
}

TEST_CASE("scan_verify output is independent of parallelism") {
  auto seq = scan_verify(103, 1);
  auto par = scan_verify(103, 4);
  REQUIRE(seq.size() == 5);
  CHECK(strip_timings(seq) == strip_timings(par));
}

TEST_CASE("MATCH is projectively sound") {
  VerificationReport r = verify_pair(691, 12);
  REQUIRE(r.status == Status::MATCH);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<u32> dist(1, 690);
  for (int trial = 0; trial < 10; ++trial) {
    u32 cw = dist(rng), ce = dist(rng);
    std::vector<u32> w2 = r.w;
    std::vector<u32> e2 = r.E_basis[0];
    for (auto& x : w2) x = mul_mod(x, cw, 691);
    for (auto& x : e2) x = mul_mod(x, ce, 691);
    auto c = in_span({w2}, e2, 691);
    REQUIRE(c.has_value());
    CHECK((*c)[0] != 0);  // rescaling either side never breaks the match
  }
}

TEST_CASE("emit_report formats") {
  CHECK(emit_report({}, ReportFormat::json) == "[]");
  CHECK_THROWS_AS(format_from_string("yaml"), UnknownFormat);

  VerificationReport r = verify_pair(691, 12);
  std::string json = emit_report({r}, ReportFormat::json);
  auto parsed = parse_reports(json);
  REQUIRE(parsed.size() == 1);
  CHECK(same_content(parsed[0], r));
  // a second emit of the parsed report is byte-identical
  CHECK(emit_report(parsed, ReportFormat::json) == json);

  std::string csv = emit_report({r}, ReportFormat::csv);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "p,k,status,dim_solution,dim_E,lambda,w,E0,e1");
  CHECK(csv.find("691,12,MATCH") != std::string::npos);
}

TEST_CASE("cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ladder_cache_test";
  fs::remove_all(dir);

  VerifyOptions opts;
  opts.cache_dir = dir.string();
  VerificationReport fresh = verify_pair(691, 12, opts);
  CHECK(fs::exists(dir / "691" / "12.json"));

  VerificationReport cached = verify_pair(691, 12, opts);
  CHECK(same_content(fresh, cached));

  VerificationReport uncached = verify_pair(691, 12);
  CHECK(same_content(cached, uncached));

  // a stale version is recomputed and replaced
  {
    auto broken = fresh;
    broken.version = "0.0.0-stale";
    std::string text = emit_report({broken}, ReportFormat::json);
    FILE* f = std::fopen((dir / "691" / "12.json").string().c_str(), "w");
    REQUIRE(f);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  VerificationReport replaced = verify_pair(691, 12, opts);
  CHECK(replaced.version == kToolVersion);
  CHECK(same_content(replaced, uncached));

  fs::remove_all(dir);
}
