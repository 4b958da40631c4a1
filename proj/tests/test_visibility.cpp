#include <doctest.h>

#include <random>

#include "polypart/oracle.hpp"
#include "polypart/visibility.hpp"
#include "test_util.hpp"

using namespace polypart;
using testutil::make_points;

namespace {

PointSet grid3() {
  std::vector<Point> pts;
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y) pts.push_back(pt(x, y));
  return PointSet::from(std::move(pts));
}

}  // namespace

TEST_CASE("pvg: three collinear points form a path") {
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}});
  VisibilityGraph g = build_pvg(ps);
  CHECK(g.visible(0, 1));
  CHECK(g.visible(1, 2));
  CHECK_FALSE(g.visible(0, 2));
  CHECK(g.blocker_witness(0, 2) == 1);
}

TEST_CASE("pvg: four points in convex position give K4") {
  PointSet ps = make_points({{0, 0}, {3, 1}, {2, 4}, {-1, 2}});
  VisibilityGraph g = build_pvg(ps);
  CHECK(g.edge_count() == 6);
}

TEST_CASE("pvg: 3x3 grid has 28 edges") {
  VisibilityGraph g = build_pvg(grid3());
  // naive reference is the oracle here
  VisibilityGraph ref = build_pvg_serial(grid3());
  CHECK(ref.edge_count() == 28);
  CHECK(g.adj == ref.adj);
}

TEST_CASE("pvg: parallel kernel agrees with the serial reference") {
  std::mt19937 rng(40);
  for (int t = 0; t < 40; ++t) {
    PointSet ps = testutil::random_points(3 + t % 14, rng, 8);
    VisibilityGraph a = build_pvg(ps);
    VisibilityGraph b = build_pvg_serial(ps);
    CHECK(a.adj == b.adj);
    // blocker witnesses re-validate
    for (int i = 0; i < a.n; ++i)
      for (int j = i + 1; j < a.n; ++j)
        if (!a.visible(i, j)) {
          int w = a.blocker_witness(i, j);
          REQUIRE(w >= 0);
          CHECK(strictly_between(ps[w], ps[i], ps[j]));
        }
  }
}

TEST_CASE("line groups: 3x3 grid") {
  auto groups = line_groups(grid3());
  CHECK(groups.size() == 20);  // 8 lines of three points, 12 point pairs
  int size3 = 0;
  for (const auto& g : groups)
    if (g.size() == 3) ++size3;
  CHECK(size3 == 8);
}

TEST_CASE("line groups: basic shapes") {
  PointSet five = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  auto g5 = line_groups(five);
  REQUIRE(g5.size() == 1);
  CHECK(g5[0].size() == 5);

  PointSet tri = make_points({{0, 0}, {5, 1}, {2, 7}});
  CHECK(line_groups(tri).size() == 3);
}

TEST_CASE("max collinear") {
  auto [grid_count, grid_group] = max_collinear(grid3());
  CHECK(grid_count == 3);
  PointSet six = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {2, 5}});
  auto [c6, g6] = max_collinear(six);
  CHECK(c6 == 5);
  PointSet one = make_points({{3, 3}});
  auto [c1, g1] = max_collinear(one);
  CHECK(c1 == 1);
  CHECK_FALSE(g1.has_value());
}

TEST_CASE("structured independent set: collinear run alternation") {
  PointSet five = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  IndependentSet s = max_independent_structured(five);
  CHECK(s.size == 3);
  REQUIRE(s.witness.size() == 3);
  VisibilityGraph g = build_pvg(five);
  for (size_t i = 0; i < s.witness.size(); ++i)
    for (size_t j = i + 1; j < s.witness.size(); ++j)
      CHECK_FALSE(g.visible(s.witness[i], s.witness[j]));
}

TEST_CASE("structured independent set: 3x3 grid corners") {
  // the four corners sit on the top and bottom hull-edge lines and are
  // pairwise blocked, so the two-line search finds all four
  IndependentSet s = max_independent_structured(grid3());
  CHECK(s.size == 4);
  MisOracleResult mis = brute_force_mis(grid3());
  REQUIRE(mis.status == OracleStatus::Found);
  CHECK(mis.size == 4);
  CHECK(s.size == mis.size);
}

TEST_CASE("structured independent set: complete visibility graph") {
  PointSet ps = make_points({{0, 0}, {3, 1}, {2, 4}, {-1, 2}});
  CHECK(max_independent_structured(ps).size == 1);
}

TEST_CASE("structured search is a lower bound; equal on structured witnesses") {
  std::mt19937 rng(55);
  for (int t = 0; t < 40; ++t) {
    PointSet ps = testutil::random_points(4 + t % 9, rng, 6);
    IndependentSet s = max_independent_structured(ps);
    MisOracleResult mis = brute_force_mis(ps);
    REQUIRE(mis.status == OracleStatus::Found);
    CHECK(s.size <= mis.size);
  }
}

TEST_CASE("induced path: collinear runs and cliques") {
  PointSet five = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  auto [len5, path5] = longest_induced_path_atmost(build_pvg(five), 5);
  CHECK(len5 == 5);

  // K6: no induced path on three vertices
  PointSet hexagon = make_points({{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}});
  auto [len_k6, path_k6] = longest_induced_path_atmost(build_pvg(hexagon), 3);
  CHECK(len_k6 == 2);

  CHECK_THROWS_AS(longest_induced_path_atmost(build_pvg(five), 0),
                  std::invalid_argument);
}

namespace {

// independent oracle: a vertex subset induces a path iff it is connected
// with max degree 2 and exactly two degree-1 ends (or is a single vertex)
int brute_longest_induced_path(const VisibilityGraph& g, int cap) {
  int n = g.n;
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best || size > cap) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    int deg1 = 0;
    bool ok = true;
    for (int v : vs) {
      int d = 0;
      for (int u : vs)
        if (u != v && g.visible(u, v)) ++d;
      if (d > 2) ok = false;
      if (d == 1) ++deg1;
      if (d == 0 && size > 1) ok = false;
    }
    if (!ok || (size > 1 && deg1 != 2)) continue;
    // connectivity
    std::vector<int> stack = {vs[0]};
    std::set<int> seen = {vs[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : vs)
        if (!seen.count(u) && g.visible(u, v)) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
    if (static_cast<int>(seen.size()) == size) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("induced path: grid value matches exhaustive subset oracle") {
  VisibilityGraph g = build_pvg(grid3());
  int exact = brute_longest_induced_path(g, 9);
  auto [len, path] = longest_induced_path_atmost(g, 9);
  CHECK(len == exact);
  auto [len4, path4] = longest_induced_path_atmost(g, 4);
  CHECK(len4 == std::min(4, exact));
  CHECK(len4 >= 3);
}

TEST_CASE("induced path on random sets matches the subset oracle") {
  std::mt19937 rng(77);
  for (int t = 0; t < 25; ++t) {
    PointSet ps = testutil::random_points(4 + t % 6, rng, 6);
    VisibilityGraph g = build_pvg(ps);
    int exact = brute_longest_induced_path(g, ps.size());
    auto [len, path] = longest_induced_path_atmost(g, ps.size());
    CHECK(len == exact);
    auto [count, group] = max_collinear(ps);
    CHECK(len >= count);
  }
}

TEST_CASE("line group members induce path graphs in the PVG") {
  std::mt19937 rng(91);
  for (int t = 0; t < 25; ++t) {
    PointSet ps = testutil::random_collinear_heavy(10, 5, rng, 12);
    VisibilityGraph g = build_pvg(ps);
    for (const auto& lg : line_groups(ps)) {
      for (int i = 0; i < lg.size(); ++i)
        for (int j = i + 1; j < lg.size(); ++j) {
          bool adjacent_on_line = (j == i + 1);
          CHECK(g.visible(lg.members[i], lg.members[j]) == adjacent_on_line);
        }
    }
  }
}
