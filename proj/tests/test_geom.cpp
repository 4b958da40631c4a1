#include <doctest.h>

#include <random>

#include "polypart/geom.hpp"
#include "test_util.hpp"

using namespace polypart;
using testutil::make_points;

TEST_CASE("orientation signs") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == Orient::Collinear);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(1, 1)) == Orient::CCW);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(1, -1)) == Orient::CW);
}

TEST_CASE("orientation antisymmetry on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int t = 0; t < 500; ++t) {
    Point a = pt(d(rng), d(rng)), b = pt(d(rng), d(rng)), c = pt(d(rng), d(rng));
    if (a == b || a == c || b == c) continue;
    CHECK(static_cast<int>(orientation(a, b, c)) ==
          -static_cast<int>(orientation(a, c, b)));
  }
}

TEST_CASE("strictly_between") {
  CHECK(strictly_between(pt(1, 0), pt(0, 0), pt(2, 0)));
  CHECK_FALSE(strictly_between(pt(0, 0), pt(0, 0), pt(2, 0)));
  CHECK_FALSE(strictly_between(pt(1, 1), pt(0, 0), pt(2, 0)));
  CHECK_THROWS_AS(strictly_between(pt(1, 0), pt(2, 2), pt(2, 2)),
                  std::invalid_argument);
  // implies collinearity
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> d(-10, 10);
  for (int t = 0; t < 300; ++t) {
    Point p = pt(d(rng), d(rng)), a = pt(d(rng), d(rng)), b = pt(d(rng), d(rng));
    if (a == b) continue;
    if (strictly_between(p, a, b))
      CHECK(orientation(a, b, p) == Orient::Collinear);
  }
}

TEST_CASE("rational parsing") {
  CHECK(*parse_rational("7/2") == rat(7, 2));
  CHECK(*parse_rational("-3") == rat(-3));
  CHECK(*parse_rational("6/4") == rat(3, 2));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("x").has_value());
  CHECK_FALSE(parse_rational("1.5").has_value());
  CHECK(decimal_string(rat(7, 2)) == "3.5");
  CHECK(decimal_string(rat(1, 3), 5) == "0.33333");
  CHECK(decimal_string(rat(-4, 2)) == "-2");
}

TEST_CASE("convex hull: square with interior point") {
  PointSet ps = make_points({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
  Hull h = convex_hull(ps);
  CHECK(h.vertices.size() == 4);
  CHECK(h.boundary.size() == 4);
  for (int v : h.vertices) CHECK(v != 4);
}

TEST_CASE("convex hull: collinear set") {
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}});
  Hull h = convex_hull(ps);
  REQUIRE(h.vertices.size() == 2);
  CHECK(ps[h.vertices[0]] == pt(0, 0));
  CHECK(ps[h.vertices[1]] == pt(2, 0));
  REQUIRE(h.boundary.size() == 3);
  CHECK(ps[h.boundary[1]] == pt(1, 0));
}

TEST_CASE("convex hull: edge-interior point kept on boundary") {
  PointSet ps = make_points({{0, 0}, {2, 0}, {1, 0}, {0, 2}});
  Hull h = convex_hull(ps);
  CHECK(h.vertices.size() == 3);
  bool on_boundary = false;
  for (size_t i = 0; i < h.boundary.size(); ++i)
    if (ps[h.boundary[i]] == pt(1, 0)) {
      on_boundary = true;
      // neighbours along the boundary are the edge (0,0)-(2,0)
      const Point& prev = ps[h.boundary[(i + h.boundary.size() - 1) % h.boundary.size()]];
      const Point& next = ps[h.boundary[(i + 1) % h.boundary.size()]];
      CHECK(orientation(prev, next, pt(1, 0)) == Orient::Collinear);
    }
  CHECK(on_boundary);
  for (int v : h.vertices) CHECK(ps[v] != pt(1, 0));
}

TEST_CASE("convex hull invariants on random sets") {
  std::mt19937 rng(21);
  for (int t = 0; t < 60; ++t) {
    PointSet ps = testutil::random_points(3 + t % 12, rng, 10);
    Hull h = convex_hull(ps);
    int hn = static_cast<int>(h.vertices.size());
    if (hn >= 3) {
      // every point lies left of or on every directed hull edge
      for (int e = 0; e < hn; ++e)
        for (int q = 0; q < ps.size(); ++q)
          CHECK(orientation(ps[h.vertices[e]], ps[h.vertices[(e + 1) % hn]],
                            ps[q]) != Orient::CW);
      // hull vertex triples strictly counterclockwise
      for (int e = 0; e < hn; ++e)
        CHECK(orientation(ps[h.vertices[e]], ps[h.vertices[(e + 1) % hn]],
                          ps[h.vertices[(e + 2) % hn]]) == Orient::CCW);
    }
    // non-vertex boundary points lie strictly between boundary neighbours
    std::set<int> vset(h.vertices.begin(), h.vertices.end());
    int bn = static_cast<int>(h.boundary.size());
    for (int i = 0; i < bn; ++i) {
      if (vset.count(h.boundary[i])) continue;
      const Point& prev = ps[h.boundary[(i + bn - 1) % bn]];
      const Point& next = ps[h.boundary[(i + 1) % bn]];
      CHECK(orientation(prev, next, ps[h.boundary[i]]) == Orient::Collinear);
    }
  }
}

namespace {

// wedge oracle: all hull points inside the closed wedge between the tangent
// rays, and the tangents themselves on its boundary
bool wedge_ok(const PointSet& ps, const Hull& h, const Point& ext, int left,
              int right) {
  for (int v : h.boundary) {
    if (orientation(ext, ps[left], ps[v]) == Orient::CCW) return false;
    if (orientation(ext, ps[right], ps[v]) == Orient::CW) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hull tangents: square seen from the right") {
  PointSet ps = make_points({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  Hull h = convex_hull(ps);
  auto [left, right] = hull_tangents(ps, h, pt(4, 1));
  CHECK(ps[left] == pt(2, 0));
  CHECK(ps[right] == pt(2, 2));
  CHECK(wedge_ok(ps, h, pt(4, 1), left, right));
}

TEST_CASE("hull tangents: degenerate segment hull") {
  PointSet ps = make_points({{0, 0}, {2, 0}});
  Hull h = convex_hull(ps);
  auto [left, right] = hull_tangents(ps, h, pt(1, 2));
  CHECK(left != right);
  CHECK(wedge_ok(ps, h, pt(1, 2), left, right));
}

TEST_CASE("hull tangents: triangle from below") {
  PointSet ps = make_points({{0, 0}, {4, 0}, {2, 3}});
  Hull h = convex_hull(ps);
  auto [left, right] = hull_tangents(ps, h, pt(2, -2));
  CHECK(ps[left] == pt(0, 0));
  CHECK(ps[right] == pt(4, 0));
  CHECK(wedge_ok(ps, h, pt(2, -2), left, right));
}

TEST_CASE("hull tangents: external inside rejected") {
  PointSet ps = make_points({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  Hull h = convex_hull(ps);
  CHECK_THROWS_AS(hull_tangents(ps, h, pt(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(hull_tangents(ps, h, pt(2, 1)), std::invalid_argument);
}

TEST_CASE("facing chain: square from below") {
  PointSet ps = make_points({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  Hull h = convex_hull(ps);
  std::vector<int> chain = facing_chain(ps, h, pt(1, -2));
  REQUIRE(chain.size() == 2);
  CHECK(ps[chain[0]] == pt(0, 0));
  CHECK(ps[chain[1]] == pt(2, 0));
}

TEST_CASE("facing chain: collinear hull exposes every boundary point") {
  PointSet ps = make_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  Hull h = convex_hull(ps);
  std::vector<int> chain = facing_chain(ps, h, pt(1, 5));
  CHECK(chain.size() == 4);
}

TEST_CASE("facing chain: includes edge-interior boundary points") {
  PointSet ps = make_points({{0, 0}, {4, 0}, {2, 3}, {2, 0}});
  Hull h = convex_hull(ps);
  std::vector<int> chain = facing_chain(ps, h, pt(2, -2));
  REQUIRE(chain.size() == 3);
  CHECK(ps[chain[0]] == pt(0, 0));
  CHECK(ps[chain[1]] == pt(2, 0));
  CHECK(ps[chain[2]] == pt(4, 0));
}

TEST_CASE("facing chain endpoints equal tangents on random sets") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> d(0, 12);
  for (int t = 0; t < 80; ++t) {
    PointSet ps = testutil::random_points(4 + t % 8, rng, 12);
    Hull h = convex_hull(ps);
    Point ext = pt(-3 - d(rng), d(rng));
    std::vector<int> chain = facing_chain(ps, h, ext);
    auto [left, right] = hull_tangents(ps, h, ext);
    REQUIRE(!chain.empty());
    CHECK(chain.front() == left);
    CHECK(chain.back() == right);
    CHECK(wedge_ok(ps, h, ext, left, right));
  }
}

TEST_CASE("segment intersection") {
  CHECK(segments_properly_cross(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
  CHECK_FALSE(segments_properly_cross(pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 3)));
  // touching endpoint counts as intersecting, not properly crossing
  CHECK(segments_intersect(pt(0, 0), pt(1, 1), pt(1, 1), pt(2, 0)));
  CHECK_FALSE(segments_properly_cross(pt(0, 0), pt(1, 1), pt(1, 1), pt(2, 0)));
  // collinear overlap
  CHECK(segments_intersect(pt(0, 0), pt(3, 0), pt(1, 0), pt(5, 0)));
  CHECK_FALSE(segments_intersect(pt(0, 0), pt(1, 0), pt(2, 0), pt(5, 0)));
}

TEST_CASE("line keys canonical") {
  LineKey a = line_through(pt(0, 0), pt(2, 2));
  LineKey b = line_through(pt(3, 3), pt(1, 1));
  CHECK(a == b);
  LineKey c = line_through(Point{rat(1, 2), rat(0)}, Point{rat(1, 2), rat(5)});
  CHECK(c.a > 0);
  CHECK(line_side(c, pt(1, 0)) == 1);
  CHECK(line_side(c, pt(0, 0)) == -1);
  CHECK(line_side(c, Point{rat(1, 2), rat(7)}) == 0);
}

TEST_CASE("point set rejects duplicates") {
  CHECK_THROWS_AS(PointSet::from({pt(0, 0), pt(1, 1), pt(0, 0)}),
                  std::invalid_argument);
}
