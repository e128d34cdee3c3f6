#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parcon/report.hpp"

namespace parcon {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = 5;
  bool skip_oracle = false;
  std::string dot_dir;  // when nonempty, chain graphs are written there
};

// Full certificate pipeline for one (n, s). DomainError on invalid input;
// every other problem is captured as a failed check in the report.
CaseReport verify_case(int n, int s, const VerifyOptions& opts);

// All cases with even s, 2 <= s <= n <= max_n, in (n, s) order. jobs > 1 runs
// cases concurrently; results are identical to a serial run.
std::vector<CaseReport> sweep(int max_n, const VerifyOptions& opts, int jobs = 1);

std::vector<std::pair<int, int>> sweep_cases(int max_n);

}  // namespace parcon
