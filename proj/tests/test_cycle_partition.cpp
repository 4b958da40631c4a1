#include <doctest.h>

#include <random>

#include "polypart/cycle_partition.hpp"
#include "polypart/oracle.hpp"
#include "test_util.hpp"

using namespace polypart;
using testutil::make_points;

TEST_CASE("noncrossing matching: basics") {
  PointSet two = make_points({{0, 0}, {5, 5}});
  CHECK(noncrossing_matching(two).pairs.size() == 1);

  PointSet square = make_points({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  Matching m = noncrossing_matching(square);
  REQUIRE(m.pairs.size() == 2);
  auto [a1, b1] = m.pairs[0];
  auto [a2, b2] = m.pairs[1];
  CHECK_FALSE(segments_intersect(square[a1], square[b1], square[a2], square[b2]));

  CHECK_THROWS_AS(noncrossing_matching(make_points({{0, 0}, {1, 1}, {2, 0}})),
                  std::invalid_argument);
}

TEST_CASE("noncrossing matching: random sets have zero crossings") {
  std::mt19937 rng(300);
  for (int t = 0; t < 50; ++t) {
    int n = 2 * (2 + t % 6);
    PointSet ps = (t % 4 == 0)
                      ? testutil::random_collinear_heavy(n, n / 2, rng, 14)
                      : testutil::random_points(n, rng, 14);
    Matching m = noncrossing_matching(ps);
    REQUIRE(static_cast<int>(m.pairs.size()) * 2 == n);
    for (size_t i = 0; i < m.pairs.size(); ++i)
      for (size_t j = i + 1; j < m.pairs.size(); ++j)
        CHECK_FALSE(segments_intersect(ps[m.pairs[i].first], ps[m.pairs[i].second],
                                       ps[m.pairs[j].first], ps[m.pairs[j].second]));
  }
}

TEST_CASE("star polygon is simple") {
  std::mt19937 rng(311);
  for (int t = 0; t < 60; ++t) {
    PointSet ps = (t % 3 == 0)
                      ? testutil::random_collinear_heavy(5 + t % 7, 4, rng, 10)
                      : testutil::random_points(5 + t % 7, rng, 10);
    std::vector<int> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    if (max_collinear(ps).first == ps.size()) continue;
    Polygon poly = star_polygon(ps, all);
    CHECK(polygon_simple(ps, poly).ok);
  }
}

TEST_CASE("separate_cycle: outer layer of nested squares") {
  PointSet ps = make_points({{0, 0}, {8, 0}, {8, 8}, {0, 8},
                             {3, 3}, {5, 3}, {5, 5}, {3, 5}, {4, 4}});
  Separation sep = separate_cycle(ps, 4);
  CHECK(sep.cycle.size() == 4);
  CHECK(sep.remainder.size() == 5);
  CHECK(polygon_simple(ps, sep.cycle).ok);
  CHECK(hulls_disjoint(ps, sep.cycle.indices, sep.remainder));
}

TEST_CASE("separate_cycle: remainder is a triangle") {
  std::mt19937 rng(321);
  PointSet ps = testutil::random_points(9, rng, 15);
  if (max_collinear(ps).first <= 5) {
    Separation sep = separate_cycle(ps, 6);
    CHECK(sep.cycle.size() == 6);
    CHECK(sep.remainder.size() == 3);
    CHECK(hulls_disjoint(ps, sep.cycle.indices, sep.remainder));
  }
}

TEST_CASE("separate_cycle: convex single layer") {
  PointSet ps = make_points({{0, 0}, {4, 0}, {6, 3}, {3, 6}, {-1, 3}, {20, 20}});
  Separation sep = separate_cycle(ps, 5);
  CHECK(sep.cycle.size() == 5);
  CHECK(polygon_simple(ps, sep.cycle).ok);
}

TEST_CASE("separate_cycle rejects bad inputs") {
  PointSet collinear = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  CHECK_THROWS_AS(separate_cycle(collinear, 3), std::invalid_argument);
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 1}, {3, 2}});
  CHECK_THROWS_AS(separate_cycle(ps, 4), std::invalid_argument);
}

TEST_CASE("bigline: two quadrilaterals around a heavy line") {
  // spec [4,4], six on the line, one above, one below; band is [4,6]
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0},
                             {1, 2}, {4, -2}});
  auto [count, group] = max_collinear(ps);
  REQUIRE(count == 6);
  CyclePartition cp = bigline_partition(ps, PartitionSpec::from({4, 4}), *group);
  CHECK(cp.polygons.size() == 2);
  CHECK(verify_cycles(ps, cp).ok);
}

TEST_CASE("bigline: leftover-collinear repair rotates the closing ray") {
  // spec [3,4]: blocks take {1,2,3}; the leftover {4} plus the two remaining
  // free points is collinear on y = 4 - x, forcing the rotation repair
  PointSet ps = make_points({{1, 0}, {2, 0}, {3, 0}, {4, 0},
                             {1, -5}, {5, -1}, {6, -2}});
  auto [count, group] = max_collinear(ps);
  REQUIRE(count == 4);
  CyclePartition cp = bigline_partition(ps, PartitionSpec::from({3, 4}), *group);
  CHECK(cp.polygons.size() == 2);
  CHECK(verify_cycles(ps, cp).ok);
}

TEST_CASE("bigline: single pentagon with four collinear points") {
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 3}});
  auto [count, group] = max_collinear(ps);
  REQUIRE(count == 4);
  CyclePartition cp = bigline_partition(ps, PartitionSpec::from({5}), *group);
  REQUIRE(cp.polygons.size() == 1);
  CHECK(cp.polygons[0].size() == 5);
  CHECK(verify_cycles(ps, cp).ok);
}

TEST_CASE("bigline: both sides heavy with one leftover line point") {
  // spec [4,5]: lambda carries 5, block {5} takes 4, leftover on the line is
  // a single point, two free points on each side
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0},
                             {0, 2}, {2, 3}, {1, -2}, {3, -3}});
  auto [count, group] = max_collinear(ps);
  REQUIRE(count == 5);
  CyclePartition cp = bigline_partition(ps, PartitionSpec::from({4, 5}), *group);
  CHECK(verify_cycles(ps, cp).ok);
}

TEST_CASE("bigline: band validation") {
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}, {1, 2}, {3, 2}, {0, 3},
                             {4, 1}, {5, 2}});
  auto groups = line_groups(ps);
  const LineGroup* three = nullptr;
  for (const auto& g : groups)
    if (g.size() == 3) three = &g;
  REQUIRE(three != nullptr);
  // spec [4,4]: band is [4,6]; a 3-point line is outside it
  CHECK_THROWS_AS(bigline_partition(ps, PartitionSpec::from({4, 4}), *three),
                  std::invalid_argument);
}

TEST_CASE("partition_cycles: mixed spec in general position") {
  PointSet ps = make_points({{0, 0}, {7, 1}, {3, 6}, {1, 2}, {9, 4}, {5, 9},
                             {2, 8}, {11, 7}});
  CyclePartition cp = partition_cycles(ps, PartitionSpec::from({3, 5}));
  CHECK(cp.polygons.size() == 2);
  CHECK(verify_cycles(ps, cp).ok);
}

TEST_CASE("partition_cycles: tight NC' bound via the bigline path") {
  // twelve points, nine collinear; bound for [4,4,4] is exactly 9
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0},
                             {6, 0}, {7, 0}, {8, 0}, {1, 2}, {4, 3}, {7, -2}});
  CyclePartition cp = partition_cycles(ps, PartitionSpec::from({4, 4, 4}));
  CHECK(cp.polygons.size() == 3);
  CHECK(verify_cycles(ps, cp).ok);
}

TEST_CASE("partition_cycles: infeasible rejected with certificate") {
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0},
                             {3, 4}});
  CHECK_THROWS_AS(partition_cycles(ps, PartitionSpec::from({3, 4})),
                  InfeasibleError);
}

TEST_CASE("partition_cycles agrees with the oracle on random instances") {
  std::mt19937 rng(333);
  int done = 0;
  for (int t = 0; t < 60; ++t) {
    int total = 7 + t % 5;
    PointSet ps = (t % 3 == 0)
                      ? testutil::random_collinear_heavy(total, total - 3, rng, 12)
                      : testutil::random_points(total, rng, 12);
    PartitionSpec spec = testutil::random_spec(total, true, rng);
    CycleOracleResult oracle = brute_force_cycle_partition(ps, spec);
    REQUIRE(oracle.status != OracleStatus::Exhausted);
    bool constructed = true;
    try {
      CyclePartition cp = partition_cycles(ps, spec);
      CHECK(verify_cycles(ps, cp).ok);
    } catch (const InfeasibleError&) {
      constructed = false;
    }
    CHECK(constructed == (oracle.status == OracleStatus::Found));
    ++done;
  }
  CHECK(done == 60);
}

TEST_CASE("verify_cycles negatives") {
  SUBCASE("bowtie is not simple") {
    PointSet ps = make_points({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    CyclePartition cp{{Polygon{{0, 1, 2, 3}}}, PartitionSpec::from({4})};
    VerifyResult r = verify_cycles(ps, cp);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("simple") != std::string::npos);
  }
  SUBCASE("nested polygons overlap") {
    PointSet ps = make_points({{0, 0}, {10, 0}, {5, 10},
                               {4, 2}, {6, 2}, {5, 4}});
    CyclePartition cp{{Polygon{{0, 1, 2}}, Polygon{{3, 4, 5}}},
                      PartitionSpec::from({3, 3})};
    VerifyResult r = verify_cycles(ps, cp);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("hull") != std::string::npos);
  }
  SUBCASE("size mismatch against spec") {
    PointSet ps = make_points({{0, 0}, {2, 0}, {1, 2}, {5, 0}, {7, 0}, {6, 2}});
    CyclePartition cp{{Polygon{{0, 1, 2}}, Polygon{{3, 4, 5}}},
                      PartitionSpec::from({6})};
    CHECK_FALSE(verify_cycles(ps, cp).ok);
  }
}
