#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "linassign/core.hpp"
#include "linassign/generator.hpp"
#include "linassign/oracle.hpp"

namespace linassign {

struct BenchConfig {
  std::vector<int> sizes;  // |S| per row; |T| = max(1, |S|/2)
  std::uint64_t seed = 1;
  int repetitions = 3;
  bool include_dp = false;
  int dp_guard = kDefaultDpGuard;
  Distribution dist = Distribution::kUniform;
  Coord range = Coord{1} << 32;
};

struct BenchRow {
  int n_s = 0;
  int n_t = 0;
  Distribution dist = Distribution::kUniform;
  std::uint64_t seed = 0;
  std::int64_t t_solve_ns = 0;
  std::int64_t t_presorted_ns = 0;
  std::optional<std::int64_t> t_dp_ns;  // empty when the guard skipped the DP
  Cost cost = 0;
  std::optional<Cost> dp_cost;
};

/// Per size: generate, time solve and the presorted path (median of
/// repetitions), optionally time the DP oracle and record its cost.
/// Rows the DP guard rejects keep their solver timings; the run
/// continues.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Columns: n_s, n_t, dist, seed, t_solve_ns, t_presorted_ns, t_dp_ns,
/// cost, dp_cost; header row first; skipped fields left empty.
void write_bench_tsv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace linassign
