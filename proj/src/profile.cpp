#include "linassign/profile.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace linassign {

HeightProfile height_profile(const Instance& inst) {
  const int ns = inst.num_s();
  const int nt = inst.num_t();
  HeightProfile p;
  p.breakpoints.reserve(static_cast<std::size_t>(ns + nt));
  p.levels.reserve(static_cast<std::size_t>(ns + nt));
  p.s_height.resize(static_cast<std::size_t>(ns));
  p.t_height.resize(static_cast<std::size_t>(nt));

  int i = 0, j = 0, level = 0;
  while (i < ns || j < nt) {
    // T before S at equal coordinates.
    const bool take_t = j < nt && (i == ns || inst.t(j) <= inst.s(i));
    if (take_t) {
      --level;
      p.t_height[static_cast<std::size_t>(j)] = level;
      p.breakpoints.push_back(inst.t(j));
      ++j;
    } else {
      ++level;
      p.s_height[static_cast<std::size_t>(i)] = level;
      p.breakpoints.push_back(inst.s(i));
      ++i;
    }
    p.levels.push_back(level);
  }
  p.min_point = p.breakpoints.front();
  p.max_point = p.breakpoints.back();
  return p;
}

int height_at(const HeightProfile& p, Coord x) {
  // Last breakpoint <= x; duplicates resolve to the level after all
  // transitions at that coordinate.
  auto it = std::upper_bound(p.breakpoints.begin(), p.breakpoints.end(), x);
  if (it == p.breakpoints.begin()) return 0;
  const auto idx = static_cast<std::size_t>(it - p.breakpoints.begin()) - 1;
  return p.levels[idx];
}

int relative_height(const HeightProfile& p, Coord x, int k) {
  return height_at(p, x) >= k ? 1 : -1;
}

Cost abs_area(const HeightProfile& p) {
  Cost area = 0;
  for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
    area += std::abs(static_cast<Cost>(p.levels[i])) * (p.breakpoints[i + 1] - p.breakpoints[i]);
  }
  return area;
}

void write_profile_tsv(const HeightProfile& p, std::ostream& out) {
  out << "-inf\t0\n";
  for (std::size_t i = 0; i < p.breakpoints.size(); ++i) {
    out << p.breakpoints[i] << '\t' << p.levels[i] << '\n';
  }
}

NeighborTable nearest_neighbors(const Instance& inst) {
  const int ns = inst.num_s();
  const int nt = inst.num_t();
  NeighborTable table;
  table.t_index.resize(static_cast<std::size_t>(ns));
  table.distance.resize(static_cast<std::size_t>(ns));

  int j = 0;  // last T index with t(j) <= current s, once one exists
  for (int i = 0; i < ns; ++i) {
    const Coord x = inst.s(i);
    while (j + 1 < nt && inst.t(j + 1) <= x) ++j;
    int best = j;
    if (inst.t(j) > x) {
      // x lies before every T point.
      best = j;
    } else if (j + 1 < nt) {
      const Cost left = x - inst.t(j);
      const Cost right = inst.t(j + 1) - x;
      if (right < left) best = j + 1;  // tie goes left
    }
    table.t_index[static_cast<std::size_t>(i)] = best;
    table.distance[static_cast<std::size_t>(i)] = std::abs(x - inst.t(best));
  }
  return table;
}

}  // namespace linassign
