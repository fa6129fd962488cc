#include "linassign/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace linassign {
namespace {

void verify_solution(const Instance& inst, const Solution& sol) {
  const ValidationReport report = validate_assignment(inst, sol.assignment);
  if (!report.ok()) {
    throw InternalError("solver output failed validation: " + report.violations.front());
  }
  if (count_crossings(inst, sol.assignment) != 0) {
    throw InternalError("solver output has crossings");
  }
  if (static_cast<int>(sol.removed.size()) != inst.delta()) {
    throw InternalError("removal set has wrong size");
  }
  for (std::size_t k = 0; k < sol.removed.size(); ++k) {
    if (sol.removed[k].second != static_cast<int>(k) + 1) {
      throw InternalError("removed point " + std::to_string(k) + " has height " +
                          std::to_string(sol.removed[k].second));
    }
  }
  if (sol.total_cost != sol.neighbor_sum + sol.reduced_area) {
    throw InternalError("cost decomposition does not balance: " + std::to_string(sol.total_cost) +
                        " != " + std::to_string(sol.neighbor_sum) + " + " +
                        std::to_string(sol.reduced_area));
  }
}

// |H_R| area of the reduced instance (S minus R, T) in one merge pass,
// without materializing a second Instance.
Cost reduced_abs_area(const Instance& inst, const std::vector<char>& removed) {
  const int ns = inst.num_s();
  const int nt = inst.num_t();
  Cost area = 0;
  int level = 0;
  bool have_prev = false;
  Coord prev = 0;
  int i = 0, j = 0;
  while (i < ns || j < nt) {
    while (i < ns && removed[static_cast<std::size_t>(i)]) ++i;
    if (i == ns && j == nt) break;
    const bool take_t = j < nt && (i == ns || inst.t(j) <= inst.s(i));
    const Coord x = take_t ? inst.t(j) : inst.s(i);
    if (have_prev) area += std::abs(static_cast<Cost>(level)) * (x - prev);
    level += take_t ? -1 : 1;
    prev = x;
    have_prev = true;
    if (take_t) {
      ++j;
    } else {
      ++i;
    }
  }
  return area;
}

ProfitTable sweep(const Instance& inst, const HeightProfile& p, const NeighborTable& nn,
                  Coord upper_limit, bool keep_samples) {
  const int delta = inst.delta();
  if (delta == 0) {
    throw Error(Errc::kNoRemovalNeeded, "profit sweep is undefined for |S| == |T|");
  }
  ProfitTable table;
  table.delta = delta;
  table.best_s_index.assign(static_cast<std::size_t>(delta) + 1, -1);
  table.best_profit.assign(static_cast<std::size_t>(delta) + 1, 0);

  // Per height k: the running integral of h^k from the last-seen S
  // point of height k out to the upper limit, that point's coordinate,
  // and the last-seen T coordinate whose down step crosses level k.
  std::vector<Cost> integral(static_cast<std::size_t>(delta) + 1, 0);
  std::vector<Coord> last_s(static_cast<std::size_t>(delta) + 1, 0);
  std::vector<Coord> cross_t(static_cast<std::size_t>(delta) + 1, 0);
  std::vector<char> seen_s(static_cast<std::size_t>(delta) + 1, 0);
  std::vector<char> seen_t(static_cast<std::size_t>(delta) + 1, 0);

  int i = inst.num_s() - 1;
  int j = inst.num_t() - 1;
  while (i >= 0 || j >= 0) {
    // Reverse of the sweep order: S before T at equal coordinates.
    const bool take_s = i >= 0 && (j < 0 || inst.s(i) >= inst.t(j));
    if (take_s) {
      const auto k = static_cast<std::size_t>(p.s_height[static_cast<std::size_t>(i)]);
      if (p.s_height[static_cast<std::size_t>(i)] >= 1 &&
          p.s_height[static_cast<std::size_t>(i)] <= delta) {
        const Coord x = inst.s(i);
        Cost value;
        if (!seen_s[k]) {
          // Rightmost S point at this height: H never drops below k to
          // its right, so h^k is +1 all the way to the limit.
          value = upper_limit - x;
        } else {
          if (!seen_t[k]) {
            throw InternalError("no down-crossing of level " + std::to_string(k) +
                                " between consecutive height-" + std::to_string(k) + " S points");
          }
          const Coord t = cross_t[k];
          value = integral[k] + (t - x) - (last_s[k] - t);
        }
        integral[k] = value;
        last_s[k] = x;
        seen_s[k] = 1;
        const Cost profit = value - nn.distance[static_cast<std::size_t>(i)];
        // Right-to-left order: a >= replacement makes the leftmost
        // maximizer win.
        if (table.best_s_index[k] < 0 || profit >= table.best_profit[k]) {
          table.best_s_index[k] = i;
          table.best_profit[k] = profit;
        }
        if (keep_samples) {
          table.samples.push_back({i, static_cast<int>(k), profit});
        }
      }
      --i;
    } else {
      // A T point's -1 step from k to k-1 crosses level k.
      const int kc = p.t_height[static_cast<std::size_t>(j)] + 1;
      if (kc >= 1 && kc <= delta) {
        cross_t[static_cast<std::size_t>(kc)] = inst.t(j);
        seen_t[static_cast<std::size_t>(kc)] = 1;
      }
      --j;
    }
  }
  return table;
}

Solution solve_impl(const Instance& inst, Verify verify) {
  Solution sol;
  const int ns = inst.num_s();
  const int nt = inst.num_t();
  const int delta = inst.delta();

  std::vector<char> removed_flag(static_cast<std::size_t>(ns), 0);
  if (delta == 0) {
    sol.assignment = one_to_one_sorted(inst);
    sol.one_to_one_part = sol.assignment.edges;
    sol.total_cost = sol.assignment.total_cost;
    sol.neighbor_sum = 0;
    sol.reduced_area = reduced_abs_area(inst, removed_flag);
  } else {
    const HeightProfile profile = height_profile(inst);
    const NeighborTable nn = nearest_neighbors(inst);
    const ProfitTable pt = sweep(inst, profile, nn, profile.max_point, false);
    const std::vector<int> r = select_r(pt, inst);

    sol.removed.reserve(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
      removed_flag[static_cast<std::size_t>(r[k])] = 1;
      sol.removed.emplace_back(r[k], static_cast<int>(k) + 1);
    }

    sol.assignment.edges.reserve(static_cast<std::size_t>(ns));
    int next_t = 0;
    for (int i = 0; i < ns; ++i) {
      Edge e;
      e.s_index = i;
      if (removed_flag[static_cast<std::size_t>(i)]) {
        e.t_index = nn.t_index[static_cast<std::size_t>(i)];
        e.cost = nn.distance[static_cast<std::size_t>(i)];
        sol.neighbor_sum += e.cost;
      } else {
        e.t_index = next_t++;
        e.cost = std::abs(inst.s(i) - inst.t(e.t_index));
        sol.one_to_one_part.push_back(e);
      }
      sol.assignment.edges.push_back(e);
      sol.assignment.total_cost += e.cost;
    }
    if (next_t != nt) {
      throw InternalError("one-to-one part covered " + std::to_string(next_t) + " of " +
                          std::to_string(nt) + " T points");
    }
    sol.total_cost = sol.assignment.total_cost;
    sol.reduced_area = reduced_abs_area(inst, removed_flag);
  }

  if (verify == Verify::kFull) verify_solution(inst, sol);
  return sol;
}

}  // namespace

Assignment one_to_one_sorted(const Instance& inst) {
  if (inst.num_s() != inst.num_t()) {
    throw Error(Errc::kCardinalityMismatch, "one_to_one_sorted requires |S| == |T|, got " +
                                                std::to_string(inst.num_s()) + " and " +
                                                std::to_string(inst.num_t()));
  }
  Assignment a;
  a.edges.reserve(static_cast<std::size_t>(inst.num_s()));
  for (int k = 0; k < inst.num_s(); ++k) {
    const Cost c = std::abs(inst.s(k) - inst.t(k));
    a.edges.push_back({k, k, c});
    a.total_cost += c;
  }
  return a;
}

ProfitTable profit_sweep(const Instance& inst, const HeightProfile& p, const NeighborTable& nn,
                         bool keep_samples) {
  return sweep(inst, p, nn, p.max_point, keep_samples);
}

ProfitTable profit_sweep_with_limit(const Instance& inst, const HeightProfile& p,
                                    const NeighborTable& nn, Coord upper_limit,
                                    bool keep_samples) {
  return sweep(inst, p, nn, upper_limit, keep_samples);
}

std::vector<int> select_r(const ProfitTable& pt, const Instance& inst) {
  std::vector<int> r;
  r.reserve(static_cast<std::size_t>(pt.delta));
  for (int k = 1; k <= pt.delta; ++k) {
    const int idx = pt.best_s_index[static_cast<std::size_t>(k)];
    if (idx < 0) {
      throw InternalError("no S point of height " + std::to_string(k) +
                          "; H is continuous from 0 to delta, so every level must be hit");
    }
    if (!r.empty()) {
      // Strictly increasing in sweep order. With distinct coordinates
      // this is the strict coordinate increase the correctness lemma
      // guarantees; duplicates compare by S index.
      const int prev = r.back();
      if (inst.s(idx) < inst.s(prev) || (inst.s(idx) == inst.s(prev) && idx <= prev)) {
        throw InternalError("removal set not increasing: r_" + std::to_string(k - 1) + " = " +
                            std::to_string(inst.s(prev)) + ", r_" + std::to_string(k) + " = " +
                            std::to_string(inst.s(idx)));
      }
    }
    r.push_back(idx);
  }
  return r;
}

Solution solve(const Instance& inst, Verify verify) { return solve_impl(inst, verify); }

Solution solve_presorted(std::vector<Coord> s, std::vector<Coord> t, bool verify_sorted,
                         Verify verify) {
  return solve_impl(Instance::from_sorted(std::move(s), std::move(t), verify_sorted), verify);
}

}  // namespace linassign
