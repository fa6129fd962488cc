#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "linassign/core.hpp"
#include "linassign/generator.hpp"

namespace test_helpers {

using linassign::Coord;
using linassign::Cost;
using linassign::Instance;

// The canonical worked example: S = {0,3,4,6,13,14,15,16},
// T = {1,2,8,10,11,12}, delta = 2, optimal cost 19.
inline Instance fig2_instance() {
  return Instance::make({0, 3, 4, 6, 13, 14, 15, 16}, {1, 2, 8, 10, 11, 12});
}

// Equal-size sets with sorted-matching cost 15.
inline Instance equal_size_instance() {
  return Instance::make({0, 4, 6, 13, 14, 16}, {1, 2, 8, 10, 11, 12});
}

// Small random instance with duplicates allowed; |T| in [1, max_t],
// |S| in [|T|, max_s], coordinates in [0, range].
inline Instance random_instance(linassign::SplitMix64& rng, int max_t, int max_s, Coord range) {
  const int nt = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_t)));
  const int ns =
      nt + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_s - nt) + 1));
  std::vector<Coord> s, t;
  for (int i = 0; i < ns; ++i) {
    s.push_back(static_cast<Coord>(rng.next_below(static_cast<std::uint64_t>(range) + 1)));
  }
  for (int j = 0; j < nt; ++j) {
    t.push_back(static_cast<Coord>(rng.next_below(static_cast<std::uint64_t>(range) + 1)));
  }
  return Instance::make(std::move(s), std::move(t));
}

// Independent area reading of the assignment cost: over consecutive
// endpoint intervals, interval length times the number of edges
// spanning it.
inline Cost interval_counting_cost(const Instance& inst, const linassign::Assignment& a) {
  std::vector<Coord> points;
  for (const auto& e : a.edges) {
    points.push_back(inst.s(e.s_index));
    points.push_back(inst.t(e.t_index));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Cost total = 0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Coord lo = points[i], hi = points[i + 1];
    Cost spanning = 0;
    for (const auto& e : a.edges) {
      const Coord a_lo = std::min(inst.s(e.s_index), inst.t(e.t_index));
      const Coord a_hi = std::max(inst.s(e.s_index), inst.t(e.t_index));
      if (a_lo <= lo && a_hi >= hi) ++spanning;
    }
    total += spanning * (hi - lo);
  }
  return total;
}

// Quadratic crossing count straight from the definition.
inline std::int64_t naive_crossings(const Instance& inst, const linassign::Assignment& a) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    for (std::size_t j = 0; j < a.edges.size(); ++j) {
      if (inst.s(a.edges[i].s_index) < inst.s(a.edges[j].s_index) &&
          inst.t(a.edges[j].t_index) < inst.t(a.edges[i].t_index)) {
        ++count;
      }
    }
  }
  return count;
}

}  // namespace test_helpers
