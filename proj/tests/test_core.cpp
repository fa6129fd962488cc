#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "linassign/core.hpp"
#include "linassign/oracle.hpp"
#include "linassign/solver.hpp"

using namespace linassign;
using test_helpers::fig2_instance;

TEST_CASE("make_instance sorts and validates") {
  const Instance inst = Instance::make({4, 0, 3}, {1});
  CHECK(inst.s() == std::vector<Coord>{0, 3, 4});
  CHECK(inst.t() == std::vector<Coord>{1});

  const Instance fig2 = fig2_instance();
  CHECK(fig2.delta() == 2);

  CHECK_THROWS_AS(Instance::make({1}, {1, 2}), Error);
  CHECK_THROWS_AS(Instance::make({}, {1}), Error);
  CHECK_THROWS_AS(Instance::make({1}, {}), Error);
  CHECK_THROWS_AS(Instance::make({Coord{1} << 47}, {0}), Error);
  CHECK_NOTHROW(Instance::make({kCoordBound, -kCoordBound}, {0}));
}

TEST_CASE("infeasible cardinality message suggests swapping") {
  try {
    Instance::make({1}, {1, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kInfeasibleCardinality);
    CHECK(std::string(e.what()).find("swap") != std::string::npos);
  }
}

TEST_CASE("assignment_cost recomputes from coordinates") {
  const Instance single = Instance::make({5}, {3});
  Assignment a;
  a.edges = {{0, 0, 999}};  // stored cost is deliberately wrong
  CHECK(assignment_cost(single, a) == 2);

  const Instance eq = test_helpers::equal_size_instance();
  CHECK(one_to_one_sorted(eq).total_cost == 15);
  CHECK(assignment_cost(eq, one_to_one_sorted(eq)) == 15);

  const Instance fig2 = fig2_instance();
  CHECK(assignment_cost(fig2, solve(fig2).assignment) == 19);
}

TEST_CASE("validate_assignment reports violations") {
  const Instance inst = Instance::make({0, 1}, {5, 9});

  Assignment good;
  good.edges = {{0, 0, 5}, {1, 1, 8}};
  good.total_cost = 13;
  CHECK(validate_assignment(inst, good).ok());

  Assignment uncovered;
  uncovered.edges = {{0, 0, 5}, {1, 0, 4}};
  uncovered.total_cost = 9;
  const auto report = validate_assignment(inst, uncovered);
  REQUIRE(!report.ok());
  CHECK(report.violations.front().find("surjectivity") != std::string::npos);

  Assignment doubled;
  doubled.edges = {{0, 0, 5}, {0, 1, 9}};
  doubled.total_cost = 14;
  const auto report2 = validate_assignment(inst, doubled);
  bool saw_totality = false;
  for (const auto& v : report2.violations) {
    if (v.find("totality") != std::string::npos) saw_totality = true;
  }
  CHECK(saw_totality);
}

TEST_CASE("count_crossings") {
  const Instance eq = test_helpers::equal_size_instance();
  CHECK(count_crossings(eq, one_to_one_sorted(eq)) == 0);

  const Instance two = Instance::make({0, 10}, {1, 9});
  Assignment swapped;
  swapped.edges = {{0, 1, 9}, {1, 0, 9}};
  swapped.total_cost = 18;
  CHECK(count_crossings(two, swapped) == 1);
}

TEST_CASE("count_crossings matches the quadratic definition on random edge lists") {
  SplitMix64 rng(0xC0FFEE);
  for (int round = 0; round < 300; ++round) {
    const Instance inst = test_helpers::random_instance(rng, 6, 12, 30);
    Assignment a;
    Cost total = 0;
    for (int i = 0; i < inst.num_s(); ++i) {
      const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(inst.num_t())));
      const Cost c = std::abs(inst.s(i) - inst.t(j));
      a.edges.push_back({i, j, c});
      total += c;
    }
    a.total_cost = total;
    CHECK(count_crossings(inst, a) == test_helpers::naive_crossings(inst, a));
  }
}

TEST_CASE("solver output has zero crossings over the randomized suite") {
  SplitMix64 rng(20260826);
  for (int round = 0; round < 500; ++round) {
    const Instance inst = test_helpers::random_instance(rng, 8, 16, 50);
    CHECK(count_crossings(inst, solve(inst).assignment) == 0);
  }
}

TEST_CASE("assignment_cost is permutation invariant") {
  const Instance fig2 = fig2_instance();
  Assignment a = solve(fig2).assignment;
  Assignment shuffled = a;
  std::reverse(shuffled.edges.begin(), shuffled.edges.end());
  CHECK(assignment_cost(fig2, a) == assignment_cost(fig2, shuffled));
}

TEST_CASE("assignment_cost is translation invariant") {
  SplitMix64 rng(77);
  for (int round = 0; round < 100; ++round) {
    const Instance inst = test_helpers::random_instance(rng, 5, 10, 40);
    const Assignment a = solve(inst).assignment;
    const Coord offset = static_cast<Coord>(rng.next_below(1000)) - 500;
    std::vector<Coord> s2 = inst.s(), t2 = inst.t();
    for (auto& c : s2) c += offset;
    for (auto& c : t2) c += offset;
    const Instance shifted = Instance::from_sorted(std::move(s2), std::move(t2));
    CHECK(assignment_cost(shifted, a) == assignment_cost(inst, a));
  }
}

TEST_CASE("assignment cost equals the interval-counting area") {
  SplitMix64 rng(31337);
  for (int round = 0; round < 200; ++round) {
    const Instance inst = test_helpers::random_instance(rng, 10, 30, 100);
    const Assignment a = solve(inst).assignment;
    CHECK(assignment_cost(inst, a) == test_helpers::interval_counting_cost(inst, a));
  }
}
