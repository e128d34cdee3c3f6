#include <doctest.h>

#include <regex>
#include <string>

#include "parcon/errors.hpp"
#include "parcon/pipeline.hpp"
#include "parcon/report.hpp"

using namespace parcon;

namespace {

std::string mask_elapsed(std::string json) {
  static const std::regex pat("\"elapsed_ms\": [0-9]+");
  return std::regex_replace(json, pat, "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("verify (3,2): everything passes") {
  const CaseReport r = verify_case(3, 2, {});
  CHECK(r.ok());
  CHECK(r.fundamental_degree == 0);
  CHECK(r.dim == 13);
  CHECK(r.index == 3);
  for (const auto& [name, res] : r.checks)
    CHECK_MESSAGE(res.status == CheckStatus::Pass, name, ": ", res.reason);
}

TEST_CASE("verify (4,4): oracle certificates pass, combinatorial checks skipped") {
  const CaseReport r = verify_case(4, 4, {});
  CHECK(r.ok());
  for (const char* nm : {"s_basis", "regular_rank", "direct_sum", "oracle_index", "centre_zero"})
    CHECK(r.check(nm).status == CheckStatus::Pass);
  for (const char* nm : {"heisenberg", "partition", "condition_C", "condition_Cprime",
                         "o_pm_locality", "stationarity", "chain_matching", "phi_det",
                         "character_match"}) {
    CHECK(r.check(nm).status == CheckStatus::Skipped);
    CHECK(!r.check(nm).reason.empty());
  }
}

TEST_CASE("invalid input raises a usage error") {
  CHECK_THROWS_AS(verify_case(5, 3, {}), DomainError);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  VerifyOptions opts;
  opts.seed = 777;
  const std::string a = mask_elapsed(to_json(verify_case(5, 4, opts)));
  const std::string b = mask_elapsed(to_json(verify_case(5, 4, opts)));
  CHECK(a == b);
}

TEST_CASE("skip-oracle leaves the rank certificates out") {
  VerifyOptions opts;
  opts.skip_oracle = true;
  const CaseReport r = verify_case(3, 2, opts);
  CHECK(r.check("regular_rank").status == CheckStatus::Skipped);
  CHECK(r.check("direct_sum").status == CheckStatus::Skipped);
  CHECK(r.check("oracle_index").status == CheckStatus::Skipped);
  CHECK(r.check("phi_det").status == CheckStatus::Pass);
}

TEST_CASE("sweep enumerates the even cases") {
  const auto cases = sweep_cases(4);
  CHECK(cases == std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {4, 4}});
  const auto reports = sweep(4, {}, 1);
  CHECK(reports.size() == 4);
  for (const auto& r : reports) CHECK(r.ok());
}

TEST_CASE("parallel sweep matches the serial one") {
  VerifyOptions opts;
  opts.trials = 3;
  const auto serial = sweep(5, opts, 1);
  const auto parallel = sweep(5, opts, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k)
    CHECK(mask_elapsed(to_json(serial[k])) == mask_elapsed(to_json(parallel[k])));
}

TEST_CASE("json report carries the schema fields in order") {
  const CaseReport r = verify_case(3, 2, {});
  const std::string j = to_json(r);
  const std::vector<std::string> keys = {
      "\"n\"",       "\"s\"",       "\"regime\"",  "\"dim\"",     "\"index\"",
      "\"c\"",       "\"sum_degrees\"", "\"fundamental_degree\"", "\"S\"", "\"T\"",
      "\"checks\"",  "\"degrees\"", "\"weights\"", "\"elapsed_ms\""};
  std::size_t pos = 0;
  for (const auto& k : keys) {
    const auto at = j.find(k, pos);
    REQUIRE_MESSAGE(at != std::string::npos, k);
    pos = at;
  }
  // Check keys present in their fixed order too.
  std::size_t cpos = j.find("\"checks\"");
  for (const auto& name : kCheckNames) {
    const auto at = j.find("\"" + name + "\"", cpos);
    REQUIRE_MESSAGE(at != std::string::npos, name);
    cpos = at;
  }
  CHECK(to_markdown({r}).find("| 3 | 2 | LE |") != std::string::npos);
}
