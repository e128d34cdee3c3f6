#include "parcon/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "parcon/adapted_pair.hpp"
#include "parcon/chevalley.hpp"
#include "parcon/contraction.hpp"
#include "parcon/errors.hpp"
#include "parcon/invariants.hpp"
#include "parcon/oracle.hpp"

namespace parcon {

namespace {

constexpr const char* kSkipNEqS = "n == s: Heisenberg-family construction out of scope here";
constexpr const char* kSkipNEqSChar =
    "n == s: closed-form character comparison defined only for n > s";
constexpr const char* kSkipOracle = "disabled by --skip-oracle";

}  // namespace

std::vector<std::pair<int, int>> sweep_cases(int max_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= max_n; ++n)
    for (int s = 2; s <= n; s += 2) out.emplace_back(n, s);
  return out;
}

CaseReport verify_case(int n, int s, const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ParabolicContext ctx = build_context(n, s);  // DomainError propagates to the caller

  CaseReport rep;
  rep.n = n;
  rep.s = s;
  rep.regime = to_string(ctx.regime);
  for (const auto& name : kCheckNames) rep.checks.emplace_back(name, CheckResult{});

  auto pass = [&](const std::string& name, const std::string& reason = "") {
    rep.check(name) = {CheckStatus::Pass, reason};
  };
  auto fail = [&](const std::string& name, const std::string& reason) {
    rep.check(name) = {CheckStatus::Fail, reason};
  };
  auto skip = [&](const std::string& name, const std::string& reason) {
    rep.check(name) = {CheckStatus::Skipped, reason};
  };

  const LieAlgebra g(n);
  const ContractionAlgebra derived(ctx, g, /*full_cartan=*/false);
  const ContractionAlgebra full(ctx, g, /*full_cartan=*/true);

  // Support set and basis certificate (plus the h normalization it pins down).
  SPartition sp;
  std::vector<Root> S;
  bool s_ok = false;
  try {
    sp = build_S(ctx);
    S = sp.all();
    for (const Root& r : S) rep.S.push_back(r.to_string());
    if (!check_S_basis(S, ctx)) {
      fail("s_basis", "restriction to the Levi Cartan is singular");
    } else {
      const std::vector<Rat> h = solve_h(S, ctx);
      const SparseVec y = derived.dual_from_support(S);
      SparseVec img;
      for (int k = 0; k < derived.num_cartan(); ++k)
        axpy(img, h[k], derived.coadjoint_basis(derived.cartan_offset() + k, y));
      SparseVec minus_y;
      axpy(minus_y, Rat(-1), y);
      if (img != minus_y)
        fail("s_basis", "h does not act by -1 on y");
      else {
        pass("s_basis");
        s_ok = true;
      }
    }
  } catch (const std::exception& e) {
    fail("s_basis", e.what());
  }

  // Heisenberg families, the complement T, and the partition certificate.
  HeisenbergData fam;
  bool fam_ok = false;
  std::vector<Root> T;
  bool t_ok = false;
  if (n > s) {
    try {
      fam = build_heisenberg_family(ctx, sp);
      fam_ok = true;
      pass("heisenberg");
    } catch (const std::exception& e) {
      fail("heisenberg", e.what());
    }
    if (fam_ok) {
      try {
        T = build_T(ctx, &fam);
        t_ok = true;
        std::size_t covered = 0;
        for (const auto& f : fam.families) covered += f.members.size();
        if (covered + T.size() != ctx.delta_pi_prime.size())
          fail("partition", "families and T do not tile Delta(pi')");
        else
          pass("partition");
      } catch (const std::exception& e) {
        fail("partition", e.what());
      }
    } else {
      fail("partition", "no family data");
    }
  } else {
    skip("heisenberg", kSkipNEqS);
    skip("partition", kSkipNEqS);
    try {
      T = build_T(ctx, nullptr);
      t_ok = true;
    } catch (const std::exception& e) {
      fail("character_match", e.what());  // T is the input of the generator data
    }
  }
  for (const Root& r : T) rep.T.push_back(r.to_string());

  // Root-combinatorial conditions and chain forcing.
  OClassification cls;
  bool cls_ok = false;
  if (n > s && fam_ok) {
    try {
      cls = classify_O(ctx, fam, S);
      cls_ok = true;
      const ConditionReport cr = verify_conditions(ctx, fam, S, cls);
      auto outcome = [&](const std::string& name, const CheckOutcome& o,
                         const std::string& note = "") {
        if (o.pass)
          pass(name, note);
        else {
          std::string why;
          for (const auto& c : o.counterexamples) why += (why.empty() ? "" : "; ") + c;
          fail(name, why);
        }
      };
      outcome("condition_C", cr.condition_C);
      CheckOutcome cprime = cr.condition_Cprime;
      for (const auto& c : cr.witness_shape.counterexamples)
        cprime.fail("witness shape: " + c);
      cprime.pass = cprime.pass && cr.witness_shape.pass;
      outcome("condition_Cprime", cprime);
      CheckOutcome locality = cr.o_plus_locality;
      for (const auto& c : cr.o_minus_locality.counterexamples) locality.fail(c);
      locality.pass = locality.pass && cr.o_minus_locality.pass;
      outcome("o_pm_locality", locality);
      outcome("stationarity", cr.stationarity,
              cr.ambiguous_count
                  ? std::to_string(cr.ambiguous_count) + " ambiguous steps (lexicographic choice)"
                  : "");

      const ChainSweep chains = sweep_chains(ctx, fam, cls);
      outcome("chain_matching", chains.all_unique,
              chains.cyclic_chains
                  ? std::to_string(chains.cyclic_chains) + " cyclic chains skipped"
                  : "");

      if (!opts.dot_dir.empty()) {
        try {
          std::filesystem::create_directories(opts.dot_dir);
          int idx = 0;
          for (const auto& ggraph : chains.graphs) {
            std::ostringstream name;
            name << "chain_n" << n << "_s" << s << "_" << idx++;
            std::ofstream out(opts.dot_dir + "/" + name.str() + ".dot");
            out << chain_to_dot(ggraph, name.str());
          }
        } catch (const std::exception& e) {
          std::cerr << "dot emission failed: " << e.what() << "\n";
        }
      }
    } catch (const std::exception& e) {
      for (const char* nm :
           {"condition_C", "condition_Cprime", "o_pm_locality", "stationarity", "chain_matching"})
        fail(nm, e.what());
    }
  } else if (n > s) {
    for (const char* nm :
         {"condition_C", "condition_Cprime", "o_pm_locality", "stationarity", "chain_matching"})
      fail(nm, "no family data");
  } else {
    for (const char* nm :
         {"condition_C", "condition_Cprime", "o_pm_locality", "stationarity", "chain_matching"})
      skip(nm, kSkipNEqS);
  }

  // Nondegeneracy of the skew form on the span of O.
  if (n > s && fam_ok) {
    try {
      const Rat det = phi_restricted_det(derived, fam.O, S);
      if (det == 0)
        fail("phi_det", "restricted determinant vanishes");
      else
        pass("phi_det");
    } catch (const std::exception& e) {
      fail("phi_det", e.what());
    }
  } else if (n > s) {
    fail("phi_det", "no family data");
  } else {
    skip("phi_det", kSkipNEqS);
  }

  // Generator data: multiplicities, weights, degrees, and the counts.
  std::vector<GeneratorData> gens;
  bool gens_ok = false;
  if (s_ok && t_ok) {
    try {
      for (const Root& gamma : T) gens.push_back(solve_s_of_gamma(gamma, S, ctx));
      gens_ok = true;
      std::vector<long> degrees;
      for (const auto& ge : gens) {
        degrees.push_back(ge.degree);
        rep.degrees.push_back(ge.degree);
        rep.weights.push_back(ge.weight.to_string());
      }
      const CountData cd = index_and_c(ctx, degrees);
      rep.dim = cd.dim;
      rep.index = cd.index;
      rep.c = cd.c;
      rep.sum_degrees = cd.sum_degrees;
      rep.fundamental_degree = cd.fundamental_degree;
    } catch (const std::exception& e) {
      fail("character_match", e.what());
    }
  }
  if (gens_ok) {
    if (n > s) {
      try {
        const bool eq = upper_character(gens) == lower_character(ctx);
        if (eq)
          pass("character_match");
        else
          fail("character_match", "factor multisets differ");
      } catch (const std::exception& e) {
        fail("character_match", e.what());
      }
    } else {
      skip("character_match", kSkipNEqSChar);
    }
  } else if (rep.check("character_match").status != CheckStatus::Fail) {
    fail("character_match", "generator data unavailable");
  }

  // Coadjoint-rank certificates and the randomized index oracle.
  if (opts.skip_oracle) {
    skip("regular_rank", kSkipOracle);
    skip("direct_sum", kSkipOracle);
    skip("oracle_index", kSkipOracle);
  } else if (s_ok && t_ok) {
    try {
      const RegularityResult rr = regularity_and_complement(derived, S, T);
      if (rr.rank_ok)
        pass("regular_rank");
      else
        fail("regular_rank", "rank " + std::to_string(rr.rank) + " != dim - |T|");
      if (rr.direct_sum_ok)
        pass("direct_sum");
      else
        fail("direct_sum", "stacked rank " + std::to_string(rr.stacked_rank) + " < dim");
    } catch (const std::exception& e) {
      fail("regular_rank", e.what());
      fail("direct_sum", e.what());
    }
    try {
      const IndexEstimate est = generic_index(
          derived.dim(),
          [&](int i, int j) { return derived.bracket_basis(i, j); }, opts.trials,
          mix_seed(opts.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)));
      const long expected = n - s / 2 + 1;
      if (est.index == expected && est.agreeing >= 3)
        pass("oracle_index");
      else
        fail("oracle_index", "estimate " + std::to_string(est.index) + " with " +
                                 std::to_string(est.agreeing) + " agreeing trials");
    } catch (const std::exception& e) {
      fail("oracle_index", e.what());
    }
  } else {
    fail("regular_rank", "prerequisites failed");
    fail("direct_sum", "prerequisites failed");
    fail("oracle_index", "prerequisites failed");
  }

  // Centre of the whole contraction.
  try {
    const int z = full.centre_dimension();
    if (z == 0)
      pass("centre_zero");
    else
      fail("centre_zero", "centre has dimension " + std::to_string(z));
  } catch (const std::exception& e) {
    fail("centre_zero", e.what());
  }

  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

std::vector<CaseReport> sweep(int max_n, const VerifyOptions& opts, int jobs) {
  if (max_n < 2) throw DomainError("max_n must be at least 2");
  const auto cases = sweep_cases(max_n);
  std::vector<CaseReport> reports(cases.size());
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= cases.size()) break;
      reports[k] = verify_case(cases[k].first, cases[k].second, opts);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return reports;
}

}  // namespace parcon
