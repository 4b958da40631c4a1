// Exact planar geometry on rational coordinates: orientation, betweenness,
// convex hulls with collinear boundary points, tangents and facing chains.
#ifndef POLYPART_GEOM_HPP
#define POLYPART_GEOM_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polypart {

using Rational = mpq_class;
using BigInt = mpz_class;

// Builds a canonical rational (lowest terms, positive denominator).
Rational rat(long num, long den = 1);

// Parses "p/q" or a plain decimal integer. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// Exact decimal expansion truncated at `digits` fractional digits (display only).
std::string decimal_string(const Rational& value, int digits = 12);

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

// Lexicographic (x, then y) comparison.
bool lex_less(const Point& a, const Point& b);

Point pt(long x, long y);

enum class Orient { CW = -1, Collinear = 0, CCW = 1 };

// Sign of the cross product (b-a) x (c-a). Exact.
Orient orientation(const Point& a, const Point& b, const Point& c);

// True iff p lies strictly inside the open segment (a,b). Throws on a == b.
bool strictly_between(const Point& p, const Point& a, const Point& b);

// True iff p lies on the closed segment [a,b] (a == b allowed: p must equal a).
bool on_segment(const Point& p, const Point& a, const Point& b);

// Ordered set of pairwise-distinct points; indices are stable identifiers.
struct PointSet {
  std::vector<Point> pts;

  static PointSet from(std::vector<Point> points);  // throws on duplicates

  int size() const { return static_cast<int>(pts.size()); }
  const Point& operator[](int i) const { return pts[i]; }
  bool empty() const { return pts.empty(); }

  PointSet subset(const std::vector<int>& indices) const;
};

// Convex hull with the vertex/boundary distinction: `vertices` are the strict
// corners in CCW order, `boundary` additionally carries points interior to
// hull edges, in the same CCW traversal. For all-collinear input the two
// extremes are the vertices and `boundary` lists every point in line order.
struct Hull {
  std::vector<int> vertices;
  std::vector<int> boundary;
};

Hull convex_hull(const PointSet& ps);

// True iff q is inside or on the hull polygon (degenerate hulls: on the
// segment / equal to the single point).
bool point_in_hull(const PointSet& ps, const Hull& hull, const Point& q);

// Tangent hull vertices from a point strictly outside the hull, as
// (left, right) in CCW order as seen from `external`. When `external` is
// collinear with a hull edge the tangent is the far end of the collinear run.
std::pair<int, int> hull_tangents(const PointSet& ps, const Hull& hull,
                                  const Point& external);

// Boundary points from the left tangent to the right tangent along the side
// of the hull facing `external`, in traversal order.
std::vector<int> facing_chain(const PointSet& ps, const Hull& hull,
                              const Point& external);

// Exact segment intersection. `proper` demands a single interior crossing
// point; the general test accepts any shared point (touching, overlap).
bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d);
bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d);

// Canonical line ax + by = c with integer coefficients, gcd 1 and
// (a > 0) or (a == 0 and b > 0).
struct LineKey {
  BigInt a;
  BigInt b;
  BigInt c;

  bool operator==(const LineKey& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const LineKey& o) const;
};

LineKey line_through(const Point& p, const Point& q);

// Sign of a*x + b*y - c: +1 on the positive ("above") side, 0 on the line.
int line_side(const LineKey& line, const Point& p);

bool collinear(const Point& a, const Point& b, const Point& c);

// Squared euclidean distance, exact.
Rational dist2(const Point& a, const Point& b);

}  // namespace polypart

#endif
