#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace parcon {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;  // required for Skipped; detail for Fail
};

// Fixed check keys, in report order.
extern const std::vector<std::string> kCheckNames;

struct CaseReport {
  int n = 0, s = 0;
  std::string regime;
  long dim = 0, index = 0, c = 0, sum_degrees = 0, fundamental_degree = 0;
  std::vector<std::string> S, T;
  std::vector<std::pair<std::string, CheckResult>> checks;  // kCheckNames order
  std::vector<long> degrees;        // per gamma in T, lex order
  std::vector<std::string> weights; // matching order
  long elapsed_ms = 0;

  CheckResult& check(const std::string& name);
  const CheckResult& check(const std::string& name) const;
  bool any_failed() const;
  // No failed check and the nonsingularity count closed (fundamental degree 0).
  bool ok() const { return !any_failed() && fundamental_degree == 0; }
};

std::string to_json(const CaseReport& r);
std::string to_json(const std::vector<CaseReport>& rs);
std::string to_markdown(const std::vector<CaseReport>& rs);
// Human-readable per-check lines for the terminal.
std::string to_text(const CaseReport& r);

}  // namespace parcon
