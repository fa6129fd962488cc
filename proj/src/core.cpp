#include "linassign/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace linassign {
namespace {

void check_range(const std::vector<Coord>& v) {
  for (Coord c : v) {
    if (c > kCoordBound || c < -kCoordBound) {
      throw Error(Errc::kRangeExceeded,
                  "coordinate " + std::to_string(c) + " exceeds the signed 48-bit bound");
    }
  }
}

// Counts pairs i < j with key[i] > key[j], strictly. Merge sort.
std::int64_t count_strict_inversions(std::vector<Coord>& key) {
  const std::size_t n = key.size();
  std::vector<Coord> buf(n);
  std::int64_t inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (key[i] <= key[j]) {
          buf[k++] = key[i++];
        } else {
          inversions += static_cast<std::int64_t>(mid - i);
          buf[k++] = key[j++];
        }
      }
      while (i < mid) buf[k++] = key[i++];
      while (j < hi) buf[k++] = key[j++];
      std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                buf.begin() + static_cast<std::ptrdiff_t>(hi),
                key.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  }
  return inversions;
}

}  // namespace

Instance::Instance(std::vector<Coord> s, std::vector<Coord> t)
    : s_(std::move(s)), t_(std::move(t)) {
  if (s_.empty()) throw Error(Errc::kEmptySource, "S is empty");
  if (t_.empty()) throw Error(Errc::kEmptyTarget, "T is empty");
  if (s_.size() < t_.size()) {
    throw Error(Errc::kInfeasibleCardinality,
                "|S| = " + std::to_string(s_.size()) + " < |T| = " + std::to_string(t_.size()) +
                    "; the assignment is directed -- swap the roles of S and T if intended");
  }
  check_range(s_);
  check_range(t_);
}

Instance Instance::make(std::vector<Coord> s, std::vector<Coord> t) {
  std::sort(s.begin(), s.end());
  std::sort(t.begin(), t.end());
  return Instance(std::move(s), std::move(t));
}

Instance Instance::from_sorted(std::vector<Coord> s, std::vector<Coord> t, bool verify) {
  if (verify) {
    if (!std::is_sorted(s.begin(), s.end()) || !std::is_sorted(t.begin(), t.end())) {
      throw Error(Errc::kUnsortedInput, "presorted path given unsorted input");
    }
  }
  return Instance(std::move(s), std::move(t));
}

Cost assignment_cost(const Instance& inst, const Assignment& a) {
  Cost total = 0;
  for (const Edge& e : a.edges) {
    if (e.s_index < 0 || e.s_index >= inst.num_s()) continue;
    if (e.t_index < 0 || e.t_index >= inst.num_t()) continue;
    total += std::abs(inst.s(e.s_index) - inst.t(e.t_index));
  }
  return total;
}

ValidationReport validate_assignment(const Instance& inst, const Assignment& a) {
  ValidationReport report;
  std::vector<int> s_count(static_cast<std::size_t>(inst.num_s()), 0);
  std::vector<int> t_count(static_cast<std::size_t>(inst.num_t()), 0);
  for (const Edge& e : a.edges) {
    if (e.s_index < 0 || e.s_index >= inst.num_s()) {
      report.violations.push_back("s_index " + std::to_string(e.s_index) + " out of bounds");
      continue;
    }
    if (e.t_index < 0 || e.t_index >= inst.num_t()) {
      report.violations.push_back("t_index " + std::to_string(e.t_index) + " out of bounds");
      continue;
    }
    ++s_count[static_cast<std::size_t>(e.s_index)];
    ++t_count[static_cast<std::size_t>(e.t_index)];
    const Cost expect = std::abs(inst.s(e.s_index) - inst.t(e.t_index));
    if (e.cost != expect) {
      report.violations.push_back("edge (" + std::to_string(e.s_index) + "," +
                                  std::to_string(e.t_index) + ") stores cost " +
                                  std::to_string(e.cost) + ", actual " + std::to_string(expect));
    }
  }
  for (int i = 0; i < inst.num_s(); ++i) {
    const int c = s_count[static_cast<std::size_t>(i)];
    if (c != 1) {
      report.violations.push_back("totality violation: s_index " + std::to_string(i) +
                                  " appears " + std::to_string(c) + " times");
    }
  }
  for (int j = 0; j < inst.num_t(); ++j) {
    if (t_count[static_cast<std::size_t>(j)] == 0) {
      report.violations.push_back("surjectivity violation: t_index " + std::to_string(j) +
                                  " uncovered");
    }
  }
  const Cost expect_total = assignment_cost(inst, a);
  if (a.total_cost != expect_total) {
    report.violations.push_back("total_cost " + std::to_string(a.total_cost) + " != edge sum " +
                                std::to_string(expect_total));
  }
  return report;
}

std::int64_t count_crossings(const Instance& inst, const Assignment& a) {
  // Sort edges by (s coord, t coord); strict inversions in the t-coord
  // sequence are exactly the crossing pairs. Equal s coordinates sort
  // by t ascending and therefore contribute no inversion, matching the
  // strict a < b requirement.
  std::vector<std::pair<Coord, Coord>> by_s;
  by_s.reserve(a.edges.size());
  for (const Edge& e : a.edges) {
    by_s.emplace_back(inst.s(e.s_index), inst.t(e.t_index));
  }
  std::sort(by_s.begin(), by_s.end());
  std::vector<Coord> t_seq;
  t_seq.reserve(by_s.size());
  for (const auto& [sc, tc] : by_s) t_seq.push_back(tc);
  return count_strict_inversions(t_seq);
}

}  // namespace linassign
