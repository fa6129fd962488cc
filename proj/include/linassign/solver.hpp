#pragma once

#include <utility>
#include <vector>

#include "linassign/core.hpp"
#include "linassign/profile.hpp"

namespace linassign {

struct ProfitSample {
  int s_index = 0;
  int height = 0;
  Cost profit = 0;
};

/**
 * @brief Per height level k in 1..delta: the leftmost S point of
 * height k maximizing the removal profit P(s).
 */
struct ProfitTable {
  int delta = 0;
  std::vector<int> best_s_index;   // indexed by k, [0] unused, -1 = no candidate
  std::vector<Cost> best_profit;   // indexed by k
  std::vector<ProfitSample> samples;  // every computed profit, when requested
};

/// Sorted k-th-to-k-th matching for |S| == |T|.
/// Throws Error(kCardinalityMismatch) otherwise.
Assignment one_to_one_sorted(const Instance& inst);

/// Right-to-left sweep computing P(s) for every S point of height
/// 1..delta in one pass. Throws Error(kNoRemovalNeeded) when
/// delta == 0. The per-point samples are recorded only when
/// @p keep_samples is set.
ProfitTable profit_sweep(const Instance& inst, const HeightProfile& p, const NeighborTable& nn,
                         bool keep_samples = false);

/// Same sweep with an explicit upper integration limit instead of
/// max(S union T). The selected maximizers are limit-invariant for any
/// limit >= max(S); exposed for that cross-check.
ProfitTable profit_sweep_with_limit(const Instance& inst, const HeightProfile& p,
                                    const NeighborTable& nn, Coord upper_limit,
                                    bool keep_samples = false);

/// The removal set r_1..r_delta (S-indices). Aborts with InternalError
/// if some height level has no candidate or the selection is not
/// increasing in sweep order; both are impossible for correct sweeps.
std::vector<int> select_r(const ProfitTable& pt, const Instance& inst);

enum class Verify {
  kNone,  // trust the algorithm; used on the bench path
  kFull,  // re-check every output invariant, abort on violation
};

struct Solution {
  Assignment assignment;
  Cost total_cost = 0;
  std::vector<std::pair<int, int>> removed;  // (s_index, height k), k = 1..delta
  std::vector<Edge> one_to_one_part;         // sorted matching of S minus R onto T
  Cost neighbor_sum = 0;                     // sum of |r - N(r)| over R
  Cost reduced_area = 0;                     // integral of |H_R| over the reduced instance
};

/// The full algorithm: profile, nearest neighbors, profit sweep,
/// removal selection, assignment assembly. |S| == |T| short-circuits
/// to the sorted matcher.
Solution solve(const Instance& inst, Verify verify = Verify::kFull);

/// Same output as solve, but the inputs are trusted to be sorted and
/// no comparison sort runs. Sortedness is checked only when
/// @p verify_sorted is set (throws Error(kUnsortedInput)).
Solution solve_presorted(std::vector<Coord> s, std::vector<Coord> t, bool verify_sorted = false,
                         Verify verify = Verify::kFull);

}  // namespace linassign
