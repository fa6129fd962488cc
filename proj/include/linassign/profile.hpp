#pragma once

#include <iosfwd>
#include <vector>

#include "linassign/core.hpp"

namespace linassign {

/**
 * @brief The height function H(x) = |{s <= x}| - |{t <= x}| as
 * breakpoints and interval levels.
 *
 * breakpoints holds every coordinate of S and T in merged sweep order
 * (T before S at ties); levels[i] is H on the half-open interval
 * starting at breakpoints[i]. H is 0 before the first breakpoint and
 * |S| - |T| after the last.
 */
struct HeightProfile {
  std::vector<Coord> breakpoints;
  std::vector<int> levels;
  std::vector<int> s_height;  // H at each S point, right after its +1 step
  std::vector<int> t_height;  // H at each T point, right after its -1 step
  Coord max_point = 0;        // largest coordinate of S union T
  Coord min_point = 0;        // smallest coordinate of S union T

  int final_level() const { return levels.empty() ? 0 : levels.back(); }
};

/// Single left-to-right sweep over the merged order: +1 per S point,
/// -1 per T point.
HeightProfile height_profile(const Instance& inst);

/// Level of the interval containing x; 0 below all breakpoints.
int height_at(const HeightProfile& p, Coord x);

/// +1 if height_at(x) >= k, else -1.
int relative_height(const HeightProfile& p, Coord x, int k);

/// Integral of |H| between the first and last breakpoint.
Cost abs_area(const HeightProfile& p);

/// Tab-separated "breakpoint<TAB>level" rows with a leading
/// "-inf<TAB>0" row, for external plotting.
void write_profile_tsv(const HeightProfile& p, std::ostream& out);

/// For each S point: the closest T point and its distance. Exact ties
/// go to the smaller-coordinate neighbor.
struct NeighborTable {
  std::vector<int> t_index;
  std::vector<Cost> distance;
};

/// One linear merge of the two sorted sequences.
NeighborTable nearest_neighbors(const Instance& inst);

}  // namespace linassign
