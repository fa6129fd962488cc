// assign1d: exact minimum-cost many-to-one assignment of points on a
// line (L1 costs), with reference oracles and a benchmark harness.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linassign/bench.hpp"
#include "linassign/core.hpp"
#include "linassign/generator.hpp"
#include "linassign/oracle.hpp"
#include "linassign/profile.hpp"
#include "linassign/solver.hpp"
#include "linassign/text_io.hpp"

namespace {

using namespace linassign;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::kSyntaxError, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::kEmptySource:
    case Errc::kEmptyTarget:
    case Errc::kInfeasibleCardinality:
    case Errc::kCardinalityMismatch:
      return kExitInfeasible;
    default:
      return kExitUsage;
  }
}

struct Options {
  std::string input = "-";
  std::string format = "json";
  bool presorted = false;
  bool swap = false;
  int guard = kDefaultDpGuard;
  std::uint64_t seed = 1;
  int reps = 3;
};

Instance load_instance(const Options& opt) {
  const std::string text = read_input(opt.input);
  if (!opt.presorted) return parse_instance(text);
  // Trust sort order; reuse the parser for syntax, then rebuild
  // without the canonicalizing sort.
  Instance parsed = parse_instance(text);
  return Instance::from_sorted(parsed.s(), parsed.t());
}

int cmd_solve(const Options& opt) {
  const Instance inst = load_instance(opt);
  const Solution sol = opt.presorted ? solve_presorted(inst.s(), inst.t()) : solve(inst);
  if (opt.format == "json") {
    std::cout << solution_to_json(inst, sol) << '\n';
  } else {
    std::cout << solution_to_tsv(inst, sol);
  }
  return kExitOk;
}

int cmd_oracle(const Options& opt) {
  const Instance inst = load_instance(opt);
  std::cout << dp_optimal_cost(inst, opt.guard) << '\n';
  return kExitOk;
}

int cmd_compare(const Options& opt) {
  const Instance inst = load_instance(opt);
  const Cost solver_cost = solve(inst).total_cost;
  const Cost dp_cost = dp_optimal_cost(inst, opt.guard);
  const bool match = solver_cost == dp_cost;
  std::cout << "solver\t" << solver_cost << "\ndp\t" << dp_cost << '\n'
            << (match ? "PASS" : "FAIL") << '\n';
  return match ? kExitOk : kExitInternal;
}

int cmd_height(const Options& opt) {
  const Instance inst = load_instance(opt);
  std::cout << "# x\tH\n";
  std::ostringstream body;
  write_profile_tsv(height_profile(inst), body);
  std::cout << body.str();
  return kExitOk;
}

int cmd_rhythm(const std::string& a, const std::string& b, bool swap) {
  const std::string& first = swap ? b : a;
  const std::string& second = swap ? a : b;
  std::cout << rhythm_distance(first, second) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum-cost many-to-one assignment on a line (L1)"};
  app.require_subcommand(1);

  Options opt;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("input", opt.input, "Instance file, or - for stdin");
  solve_cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  solve_cmd->add_flag("--presorted", opt.presorted, "Trust the input order, skip sorting");

  auto* oracle_cmd = app.add_subcommand("oracle", "Optimal cost by the quadratic DP");
  oracle_cmd->add_option("input", opt.input, "Instance file, or - for stdin");
  oracle_cmd->add_option("--guard", opt.guard, "Max total points for the DP");

  auto* compare_cmd = app.add_subcommand("compare", "Run solver and DP, report PASS/FAIL");
  compare_cmd->add_option("input", opt.input, "Instance file, or - for stdin");
  compare_cmd->add_option("--guard", opt.guard, "Max total points for the DP");

  auto* height_cmd = app.add_subcommand("height", "Emit the height profile as TSV");
  height_cmd->add_option("input", opt.input, "Instance file, or - for stdin");

  std::string pattern_a, pattern_b;
  auto* rhythm_cmd = app.add_subcommand("rhythm", "Directed swap distance in box notation");
  rhythm_cmd->add_option("a", pattern_a, "Source rhythm, e.g. x..x.x")->required();
  rhythm_cmd->add_option("b", pattern_b, "Target rhythm")->required();
  rhythm_cmd->add_flag("--swap", opt.swap, "Swap the roles of the two rhythms");

  int gen_ns = 8, gen_nt = 4;
  Coord gen_range = 100;
  std::string gen_dist = "uniform";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--seed", opt.seed, "Generator seed");
  gen_cmd->add_option("--ns", gen_ns, "Number of S points");
  gen_cmd->add_option("--nt", gen_nt, "Number of T points");
  gen_cmd->add_option("--range", gen_range, "Coordinates drawn from [0, range]");
  gen_cmd->add_option("--dist", gen_dist, "Distribution")
      ->check(CLI::IsMember({"uniform", "clustered"}));

  std::vector<int> bench_sizes;
  bool bench_dp = false;
  std::string bench_dist = "uniform";
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver across instance sizes");
  bench_cmd->add_option("--sizes", bench_sizes, "Values of |S| to benchmark")->delimiter(',');
  bench_cmd->add_option("--seed", opt.seed, "Generator seed");
  bench_cmd->add_option("--reps", opt.reps, "Repetitions per timing (median reported)");
  bench_cmd->add_flag("--dp", bench_dp, "Also time the DP oracle when within the guard");
  bench_cmd->add_option("--guard", opt.guard, "Max total points for the DP");
  bench_cmd->add_option("--dist", bench_dist, "Distribution")
      ->check(CLI::IsMember({"uniform", "clustered"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(opt);
    if (oracle_cmd->parsed()) return cmd_oracle(opt);
    if (compare_cmd->parsed()) return cmd_compare(opt);
    if (height_cmd->parsed()) return cmd_height(opt);
    if (rhythm_cmd->parsed()) return cmd_rhythm(pattern_a, pattern_b, opt.swap);
    if (gen_cmd->parsed()) {
      const Instance inst = generate_instance(opt.seed, gen_ns, gen_nt, gen_range,
                                              parse_distribution(gen_dist));
      std::cout << emit_instance(inst);
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      BenchConfig config;
      config.sizes = bench_sizes;
      config.seed = opt.seed;
      config.repetitions = opt.reps;
      config.include_dp = bench_dp;
      config.dp_guard = opt.guard;
      config.dist = parse_distribution(bench_dist);
      write_bench_tsv(run_bench(config), std::cout);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
