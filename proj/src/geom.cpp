#include "polypart/geom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace polypart {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string t = text;
  auto slash = t.find('/');
  // validate: optional sign, digits, optionally "/" digits (denominator > 0)
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(t, true)) return std::nullopt;
    return Rational(BigInt(t, 10));
  }
  std::string num = t.substr(0, slash);
  std::string den = t.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
  BigInt d(den, 10);
  if (d == 0) return std::nullopt;
  Rational q(BigInt(num, 10), d);
  q.canonicalize();
  return q;
}

std::string decimal_string(const Rational& value, int digits) {
  BigInt num = value.get_num();
  BigInt den = value.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::ostringstream out;
  if (neg && (whole != 0 || rem != 0)) out << '-';
  out << whole.get_str();
  if (rem != 0 && digits > 0) {
    out << '.';
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      BigInt d = rem / den;
      rem %= den;
      frac += d.get_str();
    }
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out << frac;
  }
  return out.str();
}

bool lex_less(const Point& a, const Point& b) {
  int cx = cmp(a.x, b.x);
  if (cx != 0) return cx < 0;
  return cmp(a.y, b.y) < 0;
}

Point pt(long x, long y) { return Point{rat(x), rat(y)}; }

Orient orientation(const Point& a, const Point& b, const Point& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  int s = sgn(cross);
  return s > 0 ? Orient::CCW : (s < 0 ? Orient::CW : Orient::Collinear);
}

bool strictly_between(const Point& p, const Point& a, const Point& b) {
  if (a == b) throw std::invalid_argument("strictly_between: degenerate segment");
  if (orientation(a, b, p) != Orient::Collinear) return false;
  // collinear: p interior iff (p-a).(p-b) < 0
  Rational dot = (p.x - a.x) * (p.x - b.x) + (p.y - a.y) * (p.y - b.y);
  return sgn(dot) < 0;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (a == b) return p == a;
  if (orientation(a, b, p) != Orient::Collinear) return false;
  Rational dot = (p.x - a.x) * (p.x - b.x) + (p.y - a.y) * (p.y - b.y);
  return sgn(dot) <= 0;
}

PointSet PointSet::from(std::vector<Point> points) {
  PointSet ps;
  ps.pts = std::move(points);
  std::vector<int> order(ps.pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return lex_less(ps.pts[i], ps.pts[j]); });
  for (size_t i = 1; i < order.size(); ++i)
    if (ps.pts[order[i - 1]] == ps.pts[order[i]])
      throw std::invalid_argument("point set contains duplicate points");
  return ps;
}

PointSet PointSet::subset(const std::vector<int>& indices) const {
  std::vector<Point> sel;
  sel.reserve(indices.size());
  for (int i : indices) sel.push_back(pts.at(i));
  return PointSet::from(std::move(sel));
}

namespace {

// Strict monotone chain; returns vertex indices CCW starting at the lex-min.
std::vector<int> strict_hull(const PointSet& ps) {
  int n = ps.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return lex_less(ps[i], ps[j]); });
  if (n == 1) return {order[0]};
  std::vector<int> lower, upper;
  for (int idx : order) {
    while (lower.size() >= 2 &&
           orientation(ps[lower[lower.size() - 2]], ps[lower.back()], ps[idx]) !=
               Orient::CCW)
      lower.pop_back();
    lower.push_back(idx);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    while (upper.size() >= 2 &&
           orientation(ps[upper[upper.size() - 2]], ps[upper.back()], ps[*it]) !=
               Orient::CCW)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

}  // namespace

Hull convex_hull(const PointSet& ps) {
  if (ps.empty()) throw std::invalid_argument("convex_hull: empty point set");
  Hull h;
  int n = ps.size();
  if (n == 1) {
    h.vertices = {0};
    h.boundary = {0};
    return h;
  }
  std::vector<int> verts = strict_hull(ps);
  if (verts.size() <= 2) {
    // all points collinear: boundary is every point in line order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return lex_less(ps[i], ps[j]); });
    h.boundary = order;
    h.vertices = {order.front(), order.back()};
    if (n == 1) h.vertices = {order.front()};
    return h;
  }
  h.vertices = verts;
  // boundary: insert points interior to each directed hull edge, sorted away
  // from the edge start
  int hn = static_cast<int>(verts.size());
  for (int e = 0; e < hn; ++e) {
    int u = verts[e];
    int v = verts[(e + 1) % hn];
    h.boundary.push_back(u);
    std::vector<int> inner;
    for (int i = 0; i < n; ++i) {
      if (i == u || i == v) continue;
      if (strictly_between(ps[i], ps[u], ps[v])) inner.push_back(i);
    }
    std::sort(inner.begin(), inner.end(), [&](int i, int j) {
      return dist2(ps[i], ps[u]) < dist2(ps[j], ps[u]);
    });
    h.boundary.insert(h.boundary.end(), inner.begin(), inner.end());
  }
  return h;
}

bool point_in_hull(const PointSet& ps, const Hull& hull, const Point& q) {
  const auto& v = hull.vertices;
  if (v.size() == 1) return q == ps[v[0]];
  if (v.size() == 2) return on_segment(q, ps[v[0]], ps[v[1]]);
  int hn = static_cast<int>(v.size());
  for (int i = 0; i < hn; ++i) {
    if (orientation(ps[v[i]], ps[v[(i + 1) % hn]], q) == Orient::CW) return false;
  }
  return true;
}

namespace {

// distance comparison helper for tangent tie-breaking
bool farther(const PointSet& ps, const Point& ext, int i, int j) {
  return dist2(ps[i], ext) > dist2(ps[j], ext);
}

}  // namespace

std::pair<int, int> hull_tangents(const PointSet& ps, const Hull& hull,
                                  const Point& external) {
  if (point_in_hull(ps, hull, external))
    throw std::invalid_argument("hull_tangents: external point not outside hull");
  const auto& v = hull.vertices;
  if (v.size() == 1) return {v[0], v[0]};
  if (v.size() == 2) {
    // degenerate segment hull
    if (orientation(ps[v[0]], ps[v[1]], external) == Orient::Collinear) {
      // external on the carrier line: only the near extreme is exposed
      int near = farther(ps, external, v[0], v[1]) ? v[1] : v[0];
      return {near, near};
    }
    // one extreme has every point clockwise-or-on its ray, the other CCW
    int a = v[0], b = v[1];
    if (orientation(external, ps[a], ps[b]) == Orient::CW) return {a, b};
    return {b, a};
  }
  int hn = static_cast<int>(v.size());
  int left = -1, right = -1;
  for (int i = 0; i < hn; ++i) {
    bool all_cw_or_on = true, all_ccw_or_on = true;
    for (int j = 0; j < hn; ++j) {
      if (j == i) continue;
      Orient o = orientation(external, ps[v[i]], ps[v[j]]);
      if (o == Orient::CCW) all_cw_or_on = false;
      if (o == Orient::CW) all_ccw_or_on = false;
    }
    if (all_cw_or_on && (left < 0 || farther(ps, external, v[i], left)))
      left = v[i];
    if (all_ccw_or_on && (right < 0 || farther(ps, external, v[i], right)))
      right = v[i];
  }
  if (left < 0 || right < 0)
    throw std::logic_error("hull_tangents: tangent search failed");
  return {left, right};
}

std::vector<int> facing_chain(const PointSet& ps, const Hull& hull,
                              const Point& external) {
  auto [left, right] = hull_tangents(ps, hull, external);
  const auto& b = hull.boundary;
  int bn = static_cast<int>(b.size());
  auto pos_of = [&](int idx) {
    for (int i = 0; i < bn; ++i)
      if (b[i] == idx) return i;
    throw std::logic_error("facing_chain: tangent not on boundary");
  };
  if (hull.vertices.size() <= 2) {
    if (left == right) return {left};
    // degenerate hull: boundary is a path; orient it from left to right
    std::vector<int> chain = b;
    if (chain.front() != left) std::reverse(chain.begin(), chain.end());
    return chain;
  }
  std::vector<int> chain;
  int i = pos_of(left);
  int stop = pos_of(right);
  chain.push_back(b[i]);
  while (i != stop) {
    i = (i + 1) % bn;
    chain.push_back(b[i]);
  }
  return chain;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d) {
  Orient o1 = orientation(a, b, c);
  Orient o2 = orientation(a, b, d);
  Orient o3 = orientation(c, d, a);
  Orient o4 = orientation(c, d, b);
  return o1 != o2 && o3 != o4 && o1 != Orient::Collinear &&
         o2 != Orient::Collinear && o3 != Orient::Collinear &&
         o4 != Orient::Collinear;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
  if (segments_properly_cross(a, b, c, d)) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
         on_segment(b, c, d);
}

bool LineKey::operator<(const LineKey& o) const {
  int ca = cmp(a, o.a);
  if (ca != 0) return ca < 0;
  int cb = cmp(b, o.b);
  if (cb != 0) return cb < 0;
  return cmp(c, o.c) < 0;
}

LineKey line_through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line_through: identical points");
  // a = y2-y1, b = x1-x2, c = a*x1 + b*y1, scaled to integers
  Rational ra = q.y - p.y;
  Rational rb = p.x - q.x;
  Rational rc = ra * p.x + rb * p.y;
  BigInt den = lcm(lcm(ra.get_den(), rb.get_den()), rc.get_den());
  BigInt a = ra.get_num() * (den / ra.get_den());
  BigInt b = rb.get_num() * (den / rb.get_den());
  BigInt c = rc.get_num() * (den / rc.get_den());
  BigInt g = gcd(gcd(abs(a), abs(b)), abs(c));
  if (g != 0) {
    a /= g;
    b /= g;
    c /= g;
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return LineKey{a, b, c};
}

int line_side(const LineKey& line, const Point& p) {
  Rational v = line.a * p.x + line.b * p.y - line.c;
  return sgn(v);
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  return orientation(a, b, c) == Orient::Collinear;
}

Rational dist2(const Point& a, const Point& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace polypart
