#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linassign/errors.hpp"

namespace linassign {

using Coord = std::int64_t;
using Cost = std::int64_t;

/// Coordinates are limited to 48 signed bits so that a cost sum over
/// up to 2^22 points always fits a 64-bit signed accumulator.
inline constexpr Coord kCoordBound = (Coord{1} << 47) - 1;

/**
 * @brief A many-to-one assignment instance: two sorted multisets of
 * points on a line, with |S| >= |T| >= 1.
 *
 * At equal coordinates a T point precedes an S point in sweep order;
 * duplicates within one set keep input-index order. Immutable after
 * construction.
 */
class Instance {
 public:
  /// Build from arbitrary-order input; sorts both sequences.
  static Instance make(std::vector<Coord> s, std::vector<Coord> t);

  /// Build from already-sorted input. Sortedness is checked only when
  /// @p verify is set; otherwise the input is trusted and no
  /// comparison sort runs on this path.
  static Instance from_sorted(std::vector<Coord> s, std::vector<Coord> t, bool verify = false);

  const std::vector<Coord>& s() const { return s_; }
  const std::vector<Coord>& t() const { return t_; }
  Coord s(int i) const { return s_[static_cast<std::size_t>(i)]; }
  Coord t(int j) const { return t_[static_cast<std::size_t>(j)]; }
  int num_s() const { return static_cast<int>(s_.size()); }
  int num_t() const { return static_cast<int>(t_.size()); }
  /// |S| - |T|, the number of points the solver removes.
  int delta() const { return num_s() - num_t(); }

 private:
  Instance(std::vector<Coord> s, std::vector<Coord> t);

  std::vector<Coord> s_;
  std::vector<Coord> t_;
};

struct Edge {
  int s_index = 0;
  int t_index = 0;
  Cost cost = 0;  // |s - t|, recomputable from the instance

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A total map from S-indices to T-indices, as an edge list.
struct Assignment {
  std::vector<Edge> edges;
  Cost total_cost = 0;
};

/// Cost recomputed from coordinates; stored edge costs are not trusted.
/// Edges with out-of-range indices contribute nothing.
Cost assignment_cost(const Instance& inst, const Assignment& a);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks totality, surjectivity, index bounds and stored-cost
/// consistency. Invalid assignments produce a report, not a failure.
ValidationReport validate_assignment(const Instance& inst, const Assignment& a);

/// Number of crossing edge pairs: (a,d),(b,c) with a < b in S and
/// c < d in T, compared by coordinate (strict on both sides).
std::int64_t count_crossings(const Instance& inst, const Assignment& a);

}  // namespace linassign
