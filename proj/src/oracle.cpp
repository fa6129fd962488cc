#include "linassign/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "linassign/profile.hpp"

namespace linassign {
namespace {

// Infeasible DP states carry a dedicated flag instead of a large
// integer, so no arithmetic can overflow through them.
constexpr Cost kInfeasible = -1;

void check_guard(const Instance& inst, int guard) {
  if (inst.num_s() + inst.num_t() > guard) {
    throw Error(Errc::kInstanceTooLarge,
                "DP oracle guard: " + std::to_string(inst.num_s() + inst.num_t()) +
                    " points exceed the limit of " + std::to_string(guard));
  }
}

}  // namespace

Cost dp_optimal_cost(const Instance& inst, int guard) {
  check_guard(inst, guard);
  const int ns = inst.num_s();
  const int nt = inst.num_t();
  std::vector<Cost> prev(static_cast<std::size_t>(nt) + 1, kInfeasible);
  std::vector<Cost> cur(static_cast<std::size_t>(nt) + 1, kInfeasible);
  prev[0] = 0;
  for (int i = 1; i <= ns; ++i) {
    cur.assign(cur.size(), kInfeasible);
    const int jmax = std::min(i, nt);
    for (int j = 1; j <= jmax; ++j) {
      const Cost diag = prev[static_cast<std::size_t>(j) - 1];
      const Cost up = prev[static_cast<std::size_t>(j)];
      Cost best = kInfeasible;
      if (diag != kInfeasible) best = diag;
      if (up != kInfeasible && (best == kInfeasible || up < best)) best = up;
      if (best != kInfeasible) {
        cur[static_cast<std::size_t>(j)] = best + std::abs(inst.s(i - 1) - inst.t(j - 1));
      }
    }
    std::swap(prev, cur);
  }
  const Cost result = prev[static_cast<std::size_t>(nt)];
  if (result == kInfeasible) throw InternalError("DP reached no feasible final state");
  return result;
}

Assignment dp_optimal_assignment(const Instance& inst, int guard) {
  check_guard(inst, guard);
  const int ns = inst.num_s();
  const int nt = inst.num_t();
  // choice[i][j]: 1 if state (i, j) came from (i-1, j-1), 0 from (i-1, j).
  std::vector<std::vector<char>> choice(static_cast<std::size_t>(ns) + 1,
                                        std::vector<char>(static_cast<std::size_t>(nt) + 1, 0));
  std::vector<Cost> prev(static_cast<std::size_t>(nt) + 1, kInfeasible);
  std::vector<Cost> cur(static_cast<std::size_t>(nt) + 1, kInfeasible);
  prev[0] = 0;
  for (int i = 1; i <= ns; ++i) {
    cur.assign(cur.size(), kInfeasible);
    const int jmax = std::min(i, nt);
    for (int j = 1; j <= jmax; ++j) {
      const Cost diag = prev[static_cast<std::size_t>(j) - 1];
      const Cost up = prev[static_cast<std::size_t>(j)];
      Cost best = kInfeasible;
      char from_diag = 0;
      if (diag != kInfeasible) {
        best = diag;
        from_diag = 1;
      }
      if (up != kInfeasible && (best == kInfeasible || up < best)) {
        best = up;
        from_diag = 0;
      }
      if (best != kInfeasible) {
        cur[static_cast<std::size_t>(j)] = best + std::abs(inst.s(i - 1) - inst.t(j - 1));
        choice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = from_diag;
      }
    }
    std::swap(prev, cur);
  }
  if (prev[static_cast<std::size_t>(nt)] == kInfeasible) {
    throw InternalError("DP reached no feasible final state");
  }

  Assignment a;
  a.edges.resize(static_cast<std::size_t>(ns));
  int j = nt;
  for (int i = ns; i >= 1; --i) {
    const Cost c = std::abs(inst.s(i - 1) - inst.t(j - 1));
    a.edges[static_cast<std::size_t>(i) - 1] = {i - 1, j - 1, c};
    a.total_cost += c;
    if (choice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) --j;
  }
  return a;
}

Cost exhaustive_optimal(const Instance& inst) {
  const int ns = inst.num_s();
  const int nt = inst.num_t();
  if (nt > 5 || ns > 9) {
    throw Error(Errc::kInstanceTooLarge, "exhaustive oracle requires |T| <= 5 and |S| <= 9");
  }
  std::vector<int> map(static_cast<std::size_t>(ns), 0);
  Cost best = kInfeasible;
  for (;;) {
    std::vector<char> covered(static_cast<std::size_t>(nt), 0);
    Cost total = 0;
    for (int i = 0; i < ns; ++i) {
      const int j = map[static_cast<std::size_t>(i)];
      covered[static_cast<std::size_t>(j)] = 1;
      total += std::abs(inst.s(i) - inst.t(j));
    }
    if (std::find(covered.begin(), covered.end(), 0) == covered.end()) {
      if (best == kInfeasible || total < best) best = total;
    }
    // Next map in base-|T| counting order.
    int pos = 0;
    while (pos < ns) {
      if (++map[static_cast<std::size_t>(pos)] < nt) break;
      map[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == ns) break;
  }
  return best;
}

Cost relative_height_integral(const Instance& inst, Coord from, int k, Coord upper_limit) {
  const HeightProfile p = height_profile(inst);
  Cost total = 0;
  const std::size_t n = p.breakpoints.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Coord lo = std::max(p.breakpoints[i], from);
    const Coord hi = std::min(i + 1 < n ? p.breakpoints[i + 1] : upper_limit, upper_limit);
    if (hi > lo) total += (p.levels[i] >= k ? 1 : -1) * (hi - lo);
  }
  return total;
}

Cost profit_direct(const Instance& inst, int s_index) {
  const HeightProfile p = height_profile(inst);
  const int k = p.s_height[static_cast<std::size_t>(s_index)];
  if (k < 1 || k > inst.delta()) {
    throw Error(Errc::kHeightOutOfRange, "point of height " + std::to_string(k) +
                                             " is outside 1..delta = 1.." +
                                             std::to_string(inst.delta()));
  }
  const NeighborTable nn = nearest_neighbors(inst);
  return relative_height_integral(inst, inst.s(s_index), k, p.max_point) -
         nn.distance[static_cast<std::size_t>(s_index)];
}

std::pair<Cost, Cost> karp_li_identity_check(const Instance& inst,
                                             const std::vector<int>& removed) {
  const HeightProfile p = height_profile(inst);
  const int delta = inst.delta();
  if (static_cast<int>(removed.size()) != delta) {
    throw Error(Errc::kMalformedRemovalSet, "removal set must have exactly delta elements");
  }
  std::vector<int> sorted = removed;
  std::sort(sorted.begin(), sorted.end(),
            [&](int a, int b) { return inst.s(a) < inst.s(b) || (inst.s(a) == inst.s(b) && a < b); });
  for (int k = 1; k <= delta; ++k) {
    if (p.s_height[static_cast<std::size_t>(sorted[static_cast<std::size_t>(k) - 1])] != k) {
      throw Error(Errc::kMalformedRemovalSet,
                  "the k-th smallest removed point must have height k");
    }
  }

  // lhs: |H_R| area from the reduced instance.
  std::vector<Coord> reduced_s;
  std::vector<char> removed_flag(static_cast<std::size_t>(inst.num_s()), 0);
  for (int idx : removed) removed_flag[static_cast<std::size_t>(idx)] = 1;
  for (int i = 0; i < inst.num_s(); ++i) {
    if (!removed_flag[static_cast<std::size_t>(i)]) reduced_s.push_back(inst.s(i));
  }
  const Instance reduced = Instance::from_sorted(std::move(reduced_s), inst.t());
  const Cost lhs = abs_area(height_profile(reduced));

  // rhs: full |H| area (from the smallest breakpoint; H is 0 below it)
  // minus the per-removal relative-height integrals.
  Cost rhs = abs_area(p);
  for (int k = 1; k <= delta; ++k) {
    const int idx = sorted[static_cast<std::size_t>(k) - 1];
    rhs -= relative_height_integral(inst, inst.s(idx), k, p.max_point);
  }
  return {lhs, rhs};
}

}  // namespace linassign
