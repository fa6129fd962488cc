#pragma once

#include <utility>
#include <vector>

#include "linassign/core.hpp"

namespace linassign {

inline constexpr int kDefaultDpGuard = 20000;  // total points

/// Exact optimal cost by quadratic dynamic programming over the
/// non-crossing order. Two rolling rows; O(|S| * |T|) time.
/// Throws Error(kInstanceTooLarge) when |S| + |T| exceeds the guard.
Cost dp_optimal_cost(const Instance& inst, int guard = kDefaultDpGuard);

/// DP with backtrace; returns an optimal assignment that is total,
/// surjective and non-crossing. Keeps an O(|S| * |T|) choice matrix.
Assignment dp_optimal_assignment(const Instance& inst, int guard = kDefaultDpGuard);

/// Ground truth by enumerating every surjection S -> T, monotone or
/// not. Requires |T| <= 5 and |S| <= 9.
Cost exhaustive_optimal(const Instance& inst);

/// Integral of the relative height h^k from x to the upper limit,
/// interval by interval. O(n); no sweep recurrence involved.
Cost relative_height_integral(const Instance& inst, Coord from, int k, Coord upper_limit);

/// The removal profit P(s) computed literally from its definition:
/// piecewise integration of h^k from s to max(S union T), minus the
/// nearest-neighbor distance. Throws Error(kHeightOutOfRange) unless
/// the point's height is in 1..delta.
Cost profit_direct(const Instance& inst, int s_index);

/// Both sides of the removal-cost identity: lhs is the |H_R| area of
/// the reduced instance (S minus R, T); rhs is the full |H| area minus
/// the per-removal relative-height integrals. Equal for every R whose
/// k-th smallest element has height k.
/// Throws Error(kMalformedRemovalSet) if @p removed is not of that shape.
std::pair<Cost, Cost> karp_li_identity_check(const Instance& inst, const std::vector<int>& removed);

}  // namespace linassign
