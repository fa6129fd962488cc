#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "linassign/oracle.hpp"
#include "linassign/profile.hpp"
#include "linassign/solver.hpp"

using namespace linassign;
using test_helpers::fig2_instance;

TEST_CASE("dp_optimal_cost worked examples") {
  CHECK(dp_optimal_cost(fig2_instance()) == 19);
  CHECK(dp_optimal_cost(test_helpers::equal_size_instance()) == 15);
  CHECK(dp_optimal_cost(Instance::make({0, 2}, {0, 1})) == 1);
}

TEST_CASE("dp guard") {
  const Instance inst = Instance::make({0, 1, 2}, {0});
  CHECK_THROWS_AS(dp_optimal_cost(inst, 3), Error);
  CHECK(dp_optimal_cost(inst, 4) == 3);
}

TEST_CASE("dp backtrace produces a valid non-crossing assignment") {
  SplitMix64 rng(314159);
  for (int round = 0; round < 300; ++round) {
    const Instance inst = test_helpers::random_instance(rng, 8, 14, 50);
    const Assignment a = dp_optimal_assignment(inst);
    CHECK(validate_assignment(inst, a).ok());
    CHECK(count_crossings(inst, a) == 0);
    CHECK(a.total_cost == dp_optimal_cost(inst));
  }
}

TEST_CASE("exhaustive_optimal examples and bounds") {
  CHECK(exhaustive_optimal(Instance::make({0, 2}, {0, 1})) == 1);
  CHECK(exhaustive_optimal(Instance::make({5}, {3})) == 2);
  CHECK_THROWS_AS(exhaustive_optimal(Instance::make(std::vector<Coord>(10, 0), {0})), Error);
}

TEST_CASE("dp agrees with exhaustive enumeration") {
  SplitMix64 rng(271828);
  for (int round = 0; round < 2000; ++round) {
    const Instance inst = test_helpers::random_instance(rng, 4, 8, 12);
    CHECK(dp_optimal_cost(inst) == exhaustive_optimal(inst));
  }
}

TEST_CASE("profit_direct worked examples") {
  const Instance fig2 = fig2_instance();
  CHECK(profit_direct(fig2, 2) == 0);    // s = 4
  CHECK(profit_direct(fig2, 7) == -4);   // s = 16
  CHECK(profit_direct(fig2, 6) == -2);   // s = 15
  CHECK(profit_direct(fig2, 0) == -1);   // s = 0
  CHECK(profit_direct(fig2, 3) == -8);   // s = 6
  CHECK_THROWS_AS(profit_direct(fig2, 1), Error);  // s = 3 has height 0
  CHECK_THROWS_AS(profit_direct(fig2, 4), Error);  // s = 13 has height -1
}

TEST_CASE("karp_li identity on the worked example") {
  const Instance fig2 = fig2_instance();
  CHECK(abs_area(height_profile(fig2)) == 15);
  const auto [lhs, rhs] = karp_li_identity_check(fig2, {2, 7});  // coords 4 and 16
  CHECK(lhs == 13);
  CHECK(rhs == 13);
}

TEST_CASE("karp_li identity rejects malformed removal sets") {
  const Instance fig2 = fig2_instance();
  CHECK_THROWS_AS(karp_li_identity_check(fig2, {2}), Error);
  CHECK_THROWS_AS(karp_li_identity_check(fig2, {1, 7}), Error);  // height 0 point
}

TEST_CASE("karp_li identity holds for every height-respecting removal set") {
  SplitMix64 rng(161803);
  for (int round = 0; round < 200; ++round) {
    const Instance inst = test_helpers::random_instance(rng, 6, 10, 25);
    const int delta = inst.delta();
    if (delta == 0) continue;
    const HeightProfile p = height_profile(inst);
    std::vector<std::vector<int>> by_height(delta + 1);
    for (int i = 0; i < inst.num_s(); ++i) {
      const int h = p.s_height[i];
      if (h >= 1 && h <= delta) by_height[h].push_back(i);
    }
    // Enumerate one candidate per height; keep the sets whose sorted
    // order respects the height condition.
    std::vector<std::size_t> pick(delta + 1, 0);
    for (;;) {
      std::vector<int> removed;
      for (int k = 1; k <= delta; ++k) removed.push_back(by_height[k][pick[k]]);
      bool shape_ok = true;
      std::vector<int> sorted = removed;
      std::sort(sorted.begin(), sorted.end());
      for (int k = 1; k <= delta; ++k) {
        if (p.s_height[sorted[k - 1]] != k) shape_ok = false;
      }
      if (shape_ok) {
        const auto [lhs, rhs] = karp_li_identity_check(inst, removed);
        CHECK(lhs == rhs);
      }
      int k = 1;
      while (k <= delta) {
        if (++pick[k] < by_height[k].size()) break;
        pick[k] = 0;
        ++k;
      }
      if (k > delta) break;
    }
  }
}

TEST_CASE("karp_li with delta == 0 reduces to the plain area") {
  const Instance eq = test_helpers::equal_size_instance();
  const auto [lhs, rhs] = karp_li_identity_check(eq, {});
  CHECK(lhs == rhs);
  CHECK(lhs == abs_area(height_profile(eq)));
}

TEST_CASE("solver optimality against the dp over the randomized suite") {
  SplitMix64 rng(987654);
  for (int round = 0; round < 2000; ++round) {
    const Instance inst = test_helpers::random_instance(rng, 10, 14, 100);
    CHECK(solve(inst).total_cost == dp_optimal_cost(inst));
  }
}
