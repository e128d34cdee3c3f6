#include "parcon/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "parcon/errors.hpp"

namespace parcon {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kCheckNames = {
    "s_basis",      "partition",    "heisenberg",      "condition_C",
    "condition_Cprime", "o_pm_locality", "stationarity", "chain_matching",
    "phi_det",      "regular_rank", "direct_sum",      "character_match",
    "centre_zero",  "oracle_index"};

CheckResult& CaseReport::check(const std::string& name) {
  for (auto& [k, v] : checks)
    if (k == name) return v;
  throw Error("unknown check: " + name);
}

const CheckResult& CaseReport::check(const std::string& name) const {
  for (const auto& [k, v] : checks)
    if (k == name) return v;
  throw Error("unknown check: " + name);
}

bool CaseReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& kv) {
    return kv.second.status == CheckStatus::Fail;
  });
}

namespace {

ordered_json check_to_json(const CheckResult& c) {
  ordered_json j;
  switch (c.status) {
    case CheckStatus::Pass: j["status"] = "pass"; break;
    case CheckStatus::Fail: j["status"] = "fail"; break;
    case CheckStatus::Skipped: j["status"] = "skipped"; break;
  }
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

ordered_json case_to_json(const CaseReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["s"] = r.s;
  j["regime"] = r.regime;
  j["dim"] = r.dim;
  j["index"] = r.index;
  j["c"] = r.c;
  j["sum_degrees"] = r.sum_degrees;
  j["fundamental_degree"] = r.fundamental_degree;
  j["S"] = r.S;
  j["T"] = r.T;
  ordered_json checks;
  for (const auto& [k, v] : r.checks) checks[k] = check_to_json(v);
  j["checks"] = checks;
  j["degrees"] = r.degrees;
  j["weights"] = r.weights;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

char status_mark(const CheckResult& c) {
  switch (c.status) {
    case CheckStatus::Pass: return 'P';
    case CheckStatus::Fail: return 'F';
    case CheckStatus::Skipped: return '-';
  }
  return '?';
}

}  // namespace

std::string to_json(const CaseReport& r) { return case_to_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<CaseReport>& rs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) arr.push_back(case_to_json(r));
  return arr.dump(2) + "\n";
}

std::string to_markdown(const std::vector<CaseReport>& rs) {
  std::ostringstream os;
  os << "| n | s | regime | dim | index | c | sum_deg | fund_deg |";
  for (const auto& name : kCheckNames) os << ' ' << name << " |";
  os << " ms |\n|";
  for (int i = 0; i < 8 + static_cast<int>(kCheckNames.size()) + 1; ++i) os << "---|";
  os << "\n";
  for (const auto& r : rs) {
    os << "| " << r.n << " | " << r.s << " | " << r.regime << " | " << r.dim << " | "
       << r.index << " | " << r.c << " | " << r.sum_degrees << " | " << r.fundamental_degree
       << " |";
    for (const auto& [k, v] : r.checks) {
      (void)k;
      os << ' ' << status_mark(v) << " |";
    }
    os << ' ' << r.elapsed_ms << " |\n";
  }
  return os.str();
}

std::string to_text(const CaseReport& r) {
  std::ostringstream os;
  os << "case n=" << r.n << " s=" << r.s << " regime=" << r.regime << "\n";
  os << "  dim=" << r.dim << " index=" << r.index << " c=" << r.c
     << " sum_degrees=" << r.sum_degrees << " fundamental_degree=" << r.fundamental_degree
     << "\n";
  for (const auto& [k, v] : r.checks) {
    os << "  " << k << ": ";
    switch (v.status) {
      case CheckStatus::Pass: os << "pass"; break;
      case CheckStatus::Fail: os << "FAIL"; break;
      case CheckStatus::Skipped: os << "skipped"; break;
    }
    if (!v.reason.empty()) os << " (" << v.reason << ")";
    os << "\n";
  }
  os << "  elapsed: " << r.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace parcon
