#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "parcon/errors.hpp"
#include "parcon/pipeline.hpp"
#include "parcon/report.hpp"

namespace {

std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("CONTRACTION_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed CONTRACTION_SEED\n";
    }
  }
  return parcon::kDefaultSeed;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parcon::Error("cannot write " + path);
  out << content;
}

std::string markdown_path(const std::string& json_path) {
  const auto dot = json_path.find_last_of('.');
  if (dot == std::string::npos) return json_path + ".md";
  return json_path.substr(0, dot) + ".md";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for adapted pairs of contracted parabolics in type B"};
  app.require_subcommand(1);

  int n = 0, s = 0, max_n = 0, trials = 5, jobs = 1;
  std::uint64_t seed = seed_from_env();
  std::string json_path, dot_dir;
  bool skip_oracle = false;

  CLI::App* verify = app.add_subcommand("verify", "verify a single case (n, s)");
  verify->add_option("--n", n, "rank n")->required();
  verify->add_option("--s", s, "even simple-root index s, 2 <= s <= n")->required();
  verify->add_option("--json", json_path, "write the case report as JSON");
  verify->add_option("--dot", dot_dir, "write chain graphs as DOT files into this directory");
  verify->add_option("--seed", seed, "RNG seed (default: CONTRACTION_SEED or 42)");
  verify->add_option("--trials", trials, "trials for the randomized index oracle");
  verify->add_flag("--skip-oracle", skip_oracle,
                   "skip the coadjoint-rank certificates and the index oracle");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify all cases with 2 <= even s <= n <= max-n");
  sweep_cmd->add_option("--max-n", max_n, "largest rank to cover")->required();
  sweep_cmd->add_option("--jobs", jobs, "number of worker threads");
  sweep_cmd->add_option("--json", json_path, "write all case reports as a JSON array");
  sweep_cmd->add_option("--seed", seed, "RNG seed (default: CONTRACTION_SEED or 42)");
  sweep_cmd->add_option("--trials", trials, "trials for the randomized index oracle");

  CLI11_PARSE(app, argc, argv);

  parcon::VerifyOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.skip_oracle = skip_oracle;
  opts.dot_dir = dot_dir;

  try {
    if (app.got_subcommand(verify)) {
      const parcon::CaseReport rep = parcon::verify_case(n, s, opts);
      std::cout << parcon::to_text(rep);
      if (!json_path.empty()) {
        write_file(json_path, parcon::to_json(rep));
        write_file(markdown_path(json_path), parcon::to_markdown({rep}));
      }
      return rep.ok() ? 0 : 1;
    }
    const auto reports = parcon::sweep(max_n, opts, jobs);
    int failed = 0;
    for (const auto& r : reports) failed += r.ok() ? 0 : 1;
    std::cout << parcon::to_markdown(reports);
    std::cout << reports.size() << " cases, " << (reports.size() - failed) << " ok, " << failed
              << " failed\n";
    if (!json_path.empty()) {
      write_file(json_path, parcon::to_json(reports));
      write_file(markdown_path(json_path), parcon::to_markdown(reports));
    }
    return failed == 0 ? 0 : 1;
  } catch (const parcon::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
