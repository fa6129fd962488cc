#include "linassign/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "linassign/solver.hpp"

namespace linassign {
namespace {

template <typename F>
std::int64_t median_ns(int repetitions, F&& body) {
  std::vector<std::int64_t> times;
  times.reserve(static_cast<std::size_t>(repetitions));
  for (int rep = 0; rep < repetitions; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  rows.reserve(config.sizes.size());
  for (std::size_t idx = 0; idx < config.sizes.size(); ++idx) {
    const int n_s = config.sizes[idx];
    const int n_t = std::max(1, n_s / 2);
    const std::uint64_t seed = config.seed + idx;
    const Instance inst = generate_instance(seed, n_s, n_t, config.range, config.dist);

    BenchRow row;
    row.n_s = n_s;
    row.n_t = n_t;
    row.dist = config.dist;
    row.seed = seed;

    Cost cost = 0;
    row.t_solve_ns = median_ns(config.repetitions, [&] {
      cost = solve(inst, Verify::kNone).total_cost;
    });
    row.cost = cost;
    row.t_presorted_ns = median_ns(config.repetitions, [&] {
      cost = solve_presorted(inst.s(), inst.t(), false, Verify::kNone).total_cost;
    });
    if (cost != row.cost) {
      throw InternalError("presorted path disagrees with solve");
    }

    if (config.include_dp && n_s + n_t <= config.dp_guard) {
      Cost dp_cost = 0;
      row.t_dp_ns = median_ns(config.repetitions, [&] {
        dp_cost = dp_optimal_cost(inst, config.dp_guard);
      });
      row.dp_cost = dp_cost;
      if (dp_cost != row.cost) {
        throw InternalError("bench row cost mismatch: solver " + std::to_string(row.cost) +
                            ", DP " + std::to_string(dp_cost));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

void write_bench_tsv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "n_s\tn_t\tdist\tseed\tt_solve_ns\tt_presorted_ns\tt_dp_ns\tcost\tdp_cost\n";
  for (const BenchRow& row : rows) {
    out << row.n_s << '\t' << row.n_t << '\t' << distribution_name(row.dist) << '\t' << row.seed
        << '\t' << row.t_solve_ns << '\t' << row.t_presorted_ns << '\t';
    if (row.t_dp_ns) out << *row.t_dp_ns;
    out << '\t' << row.cost << '\t';
    if (row.dp_cost) out << *row.dp_cost;
    out << '\n';
  }
}

}  // namespace linassign
