#include "polypart/triangle_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace polypart {

namespace {

bool all_collinear_idx(const PointSet& ps, const std::vector<int>& idx) {
  if (idx.size() <= 2) return true;
  for (size_t i = 2; i < idx.size(); ++i)
    if (!collinear(ps[idx[0]], ps[idx[1]], ps[idx[i]])) return false;
  return true;
}

// visibility of i,j with blockers restricted to `active`
bool visible_in(const PointSet& ps, const std::vector<int>& active, int i,
                int j) {
  for (int k : active) {
    if (k == i || k == j) continue;
    if (strictly_between(ps[k], ps[i], ps[j])) return false;
  }
  return true;
}

std::vector<Point> gather(const PointSet& ps, const std::vector<int>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(ps[i]);
  return out;
}

}  // namespace

std::vector<Point> hull_points(const PointSet& ps, const std::vector<int>& idx) {
  std::vector<Point> pts = gather(ps, idx);
  if (pts.size() <= 2) return pts;
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Point> lower, upper;
  for (const Point& p : pts) {
    while (lower.size() >= 2 &&
           orientation(lower[lower.size() - 2], lower.back(), p) != Orient::CCW)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 &&
           orientation(upper[upper.size() - 2], upper.back(), *it) != Orient::CCW)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() == 1) {
    // all collinear: keep the two extremes
    return {pts.front(), pts.back()};
  }
  return lower;
}

namespace {

bool in_convex(const std::vector<Point>& hull, const Point& q) {
  if (hull.size() == 1) return q == hull[0];
  if (hull.size() == 2) return on_segment(q, hull[0], hull[1]);
  int hn = static_cast<int>(hull.size());
  for (int i = 0; i < hn; ++i)
    if (orientation(hull[i], hull[(i + 1) % hn], q) == Orient::CW) return false;
  return true;
}

}  // namespace

bool convex_hulls_disjoint(const std::vector<Point>& ha,
                           const std::vector<Point>& hb) {
  for (const Point& p : ha)
    if (in_convex(hb, p)) return false;
  for (const Point& p : hb)
    if (in_convex(ha, p)) return false;
  auto edge_count = [](const std::vector<Point>& h) {
    return h.size() <= 1 ? 0 : (h.size() == 2 ? 1 : static_cast<int>(h.size()));
  };
  int ea = edge_count(ha), eb = edge_count(hb);
  for (int i = 0; i < ea; ++i)
    for (int j = 0; j < eb; ++j)
      if (segments_intersect(ha[i], ha[(i + 1) % ha.size()], hb[j],
                             hb[(j + 1) % hb.size()]))
        return false;
  return true;
}

bool hulls_disjoint(const PointSet& ps, const std::vector<int>& a,
                    const std::vector<int>& b) {
  return convex_hulls_disjoint(hull_points(ps, a), hull_points(ps, b));
}

VerifyResult verify_partition(const PointSet& ps, const TrianglePartition& tp) {
  int n = ps.size();
  if (static_cast<int>(tp.triangles.size()) * 3 != n)
    return {false, "size: triangle count does not cover the point set"};
  std::vector<int> seen(n, 0);
  for (const auto& t : tp.triangles)
    for (int idx : t.indices) {
      if (idx < 0 || idx >= n) return {false, "coverage: index out of range"};
      if (seen[idx]++) return {false, "overlap: index used twice"};
    }
  for (const auto& t : tp.triangles)
    if (collinear(ps[t.indices[0]], ps[t.indices[1]], ps[t.indices[2]]))
      return {false, "degenerate: collinear triangle"};
  for (size_t i = 0; i < tp.triangles.size(); ++i) {
    for (size_t j = i + 1; j < tp.triangles.size(); ++j) {
      std::vector<int> a(tp.triangles[i].indices.begin(),
                         tp.triangles[i].indices.end());
      std::vector<int> b(tp.triangles[j].indices.begin(),
                         tp.triangles[j].indices.end());
      if (!hulls_disjoint(ps, a, b))
        return {false, "crossing: triangle hulls intersect"};
    }
  }
  return {true, ""};
}

namespace {

struct TriSolver {
  const PointSet& ps;
  TriangleStats* stats;

  explicit TriSolver(const PointSet& p, TriangleStats* s) : ps(p), stats(s) {}

  void bump_steps() {
    if (stats) ++stats->steps;
  }

  FeasibilityVerdict residual_verdict(const std::vector<int>& active) {
    return check_triangle_feasible(ps.subset(active));
  }

  std::vector<Triangle> solve(std::vector<int> active) {
    int n = static_cast<int>(active.size()) / 3;
    if (n == 1) {
      bump_steps();
      if (collinear(ps[active[0]], ps[active[1]], ps[active[2]]))
        throw std::logic_error("triangle partition: residual of 3 collinear points");
      return {Triangle{{active[0], active[1], active[2]}}};
    }
    PointSet sub = ps.subset(active);
    Hull hull = convex_hull(sub);
    std::set<int> outer_boundary;  // original indices on CH(active) boundary
    for (int b : hull.boundary) outer_boundary.insert(active[b]);

    std::optional<FeasibilityVerdict> failure;
    for (int hv : hull.vertices) {
      int pi = active[hv];
      std::vector<int> rest1;
      for (int v : active)
        if (v != pi) rest1.push_back(v);
      if (all_collinear_idx(ps, rest1)) continue;
      PointSet sub1 = ps.subset(rest1);
      Hull hull1 = convex_hull(sub1);
      std::vector<int> chain = facing_chain(sub1, hull1, ps[pi]);
      for (size_t c = 0; c + 1 < chain.size(); ++c) {
        int pj = rest1[chain[c]];
        int pk = rest1[chain[c + 1]];
        if (!outer_boundary.count(pj) && !outer_boundary.count(pk)) continue;
        if (stats) ++stats->candidate_checks;
        if (collinear(ps[pi], ps[pj], ps[pk])) continue;
        if (!visible_in(ps, active, pi, pj) || !visible_in(ps, active, pi, pk) ||
            !visible_in(ps, active, pj, pk))
          continue;
        std::vector<int> rest;
        for (int v : active)
          if (v != pi && v != pj && v != pk) rest.push_back(v);
        FeasibilityVerdict verdict = residual_verdict(rest);
        if (verdict.feasible) {
          bump_steps();
          std::vector<Triangle> out = solve(std::move(rest));
          out.insert(out.begin(), Triangle{{pi, pj, pk}});
          return out;
        }
        if (!failure) {
          // witness indices are relative to `rest`; lift to original ids
          FeasibilityVerdict lifted = verdict;
          if (lifted.independent_witness)
            for (int& w : *lifted.independent_witness) w = rest[w];
          failure = lifted;
        }
      }
    }
    if (!failure)
      throw std::logic_error(
          "triangle partition: no removable triple and no recorded failure");
    return dispatch_repair(active, *failure);
  }

  std::vector<Triangle> dispatch_repair(const std::vector<int>& active,
                                        const FeasibilityVerdict& failure) {
    if (!failure.independent_witness)
      throw std::logic_error("triangle partition: failure without witness");
    const std::vector<int>& wit = *failure.independent_witness;
    PointSet sub = ps.subset(active);
    std::map<int, int> to_sub;
    for (size_t i = 0; i < active.size(); ++i) to_sub[active[i]] = static_cast<int>(i);

    if (all_collinear_idx(ps, wit)) {
      LineKey key = line_through(ps[wit[0]], ps[wit[1]]);
      std::vector<int> members;
      for (size_t i = 0; i < active.size(); ++i)
        if (line_side(key, sub[static_cast<int>(i)]) == 0)
          members.push_back(static_cast<int>(i));
      std::sort(members.begin(), members.end(),
                [&](int a, int b) { return lex_less(sub[a], sub[b]); });
      LineGroup lambda{key, members};
      int n = sub.size() / 3;
      if (lambda.size() != 2 * n - 1 && lambda.size() != 2 * n)
        throw std::logic_error(
            "triangle partition: collinear repair precondition violated (line "
            "carries " +
            std::to_string(lambda.size()) + " of " + std::to_string(3 * n) +
            " points)");
      if (stats) ++stats->repair_collinear_calls;
      TrianglePartition rep = repair_collinear_line(sub, lambda);
      std::vector<Triangle> out;
      for (const auto& t : rep.triangles)
        out.push_back(Triangle{
            {active[t.indices[0]], active[t.indices[1]], active[t.indices[2]]}});
      return out;
    }

    // witness on two lines: find a covering pair among the subset's lines
    std::vector<int> wit_sub;
    for (int w : wit) wit_sub.push_back(to_sub.at(w));
    auto groups = line_groups(sub);
    for (size_t a = 0; a < groups.size(); ++a) {
      for (size_t b = a + 1; b < groups.size(); ++b) {
        std::set<int> cover(groups[a].members.begin(), groups[a].members.end());
        cover.insert(groups[b].members.begin(), groups[b].members.end());
        bool all = std::all_of(wit_sub.begin(), wit_sub.end(),
                               [&](int w) { return cover.count(w) > 0; });
        if (!all) continue;
        if (stats) ++stats->repair_two_lines_calls;
        TrianglePartition rep = repair_two_lines(sub, groups[a], groups[b], stats);
        std::vector<Triangle> out;
        for (const auto& t : rep.triangles)
          out.push_back(Triangle{{active[t.indices[0]], active[t.indices[1]],
                                  active[t.indices[2]]}});
        return out;
      }
    }
    throw std::logic_error(
        "triangle partition: independent witness not coverable by two lines");
  }
};

}  // namespace

TrianglePartition partition_triangles(const PointSet& ps, TriangleStats* stats) {
  FeasibilityVerdict verdict = check_triangle_feasible(ps);
  if (!verdict.feasible)
    throw InfeasibleError("partition_triangles: input is not triangle-partitionable",
                          verdict);
  TriSolver solver(ps, stats);
  std::vector<int> active(ps.size());
  std::iota(active.begin(), active.end(), 0);
  TrianglePartition tp;
  tp.triangles = solver.solve(std::move(active));
  VerifyResult check = verify_partition(ps, tp);
  if (!check)
    throw std::logic_error("partition_triangles: output failed verification: " +
                           check.reason);
  return tp;
}

namespace {

// Brute-force the final triangles over <=9 points when the stated terminal
// fix-up degenerates; everything earlier stays fixed.
bool fix_tail(const PointSet& ps, std::vector<Triangle>& tris, size_t tail_start) {
  std::vector<int> pool;
  for (size_t t = tail_start; t < tris.size(); ++t)
    for (int idx : tris[t].indices) pool.push_back(idx);
  std::vector<Triangle> head(tris.begin(), tris.begin() + tail_start);
  std::sort(pool.begin(), pool.end());

  std::vector<Triangle> chosen;
  auto ok_against = [&](const Triangle& cand) {
    std::vector<int> c(cand.indices.begin(), cand.indices.end());
    if (collinear(ps[c[0]], ps[c[1]], ps[c[2]])) return false;
    for (const auto& h : head) {
      std::vector<int> hh(h.indices.begin(), h.indices.end());
      if (!hulls_disjoint(ps, c, hh)) return false;
    }
    for (const auto& h : chosen) {
      std::vector<int> hh(h.indices.begin(), h.indices.end());
      if (!hulls_disjoint(ps, c, hh)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::vector<int> rest) -> bool {
    if (rest.empty()) return true;
    int anchor = rest[0];
    for (size_t i = 1; i < rest.size(); ++i) {
      for (size_t j = i + 1; j < rest.size(); ++j) {
        Triangle cand{{anchor, rest[i], rest[j]}};
        if (!ok_against(cand)) continue;
        chosen.push_back(cand);
        std::vector<int> next;
        for (size_t t = 1; t < rest.size(); ++t)
          if (t != i && t != j) next.push_back(rest[t]);
        if (self(self, std::move(next))) return true;
        chosen.pop_back();
      }
    }
    return false;
  };
  if (!search(search, pool)) return false;
  tris.resize(tail_start);
  tris.insert(tris.end(), chosen.begin(), chosen.end());
  return true;
}

}  // namespace

TrianglePartition repair_collinear_line(const PointSet& ps,
                                        const LineGroup& lambda) {
  int total = ps.size();
  if (total % 3 != 0 || total < 6)
    throw std::invalid_argument("repair_collinear_line: size must be 3n, n >= 2");
  int n = total / 3;
  if (lambda.size() != 2 * n - 1 && lambda.size() != 2 * n)
    throw std::invalid_argument(
        "repair_collinear_line: line must carry 2n-1 or 2n points");

  std::vector<int> on = lambda.members;  // already in line order
  std::vector<int> above, below;
  std::set<int> on_set(on.begin(), on.end());
  for (int i = 0; i < total; ++i) {
    if (on_set.count(i)) continue;
    int side = line_side(lambda.line, ps[i]);
    if (side == 0)
      throw std::invalid_argument("repair_collinear_line: line group not maximal");
    (side > 0 ? above : below).push_back(i);
  }

  // segments of two consecutive line points, last possibly of one
  std::vector<std::vector<int>> segs;
  for (size_t i = 0; i < on.size(); i += 2) {
    std::vector<int> s = {on[i]};
    if (i + 1 < on.size()) s.push_back(on[i + 1]);
    segs.push_back(s);
  }

  std::vector<Triangle> tris;
  std::vector<int> apex_of_seg;   // parallel to segs, -1 for the single segment
  std::vector<int> apex_side;     // +1 above, -1 below

  // max-angle apex: the candidate whose ray from the segment's right end
  // leans furthest backward over the already-consumed prefix
  auto pick_apex = [&](const Point& q2, std::vector<int>& pool, int side) {
    int best = -1;
    for (int cand : pool) {
      if (best < 0) {
        best = cand;
        continue;
      }
      Rational cross = (ps[best].x - q2.x) * (ps[cand].y - q2.y) -
                       (ps[best].y - q2.y) * (ps[cand].x - q2.x);
      int s = sgn(cross);
      bool better;
      if (s == 0) {
        better = dist2(ps[cand], q2) < dist2(ps[best], q2);
      } else {
        better = (side > 0) ? (s > 0) : (s < 0);
      }
      if (better) best = cand;
    }
    pool.erase(std::find(pool.begin(), pool.end(), best));
    return best;
  };

  for (size_t t = 0; t < segs.size(); ++t) {
    const auto& seg = segs[t];
    if (seg.size() == 2) {
      int side = !above.empty() ? +1 : -1;
      std::vector<int>& pool = side > 0 ? above : below;
      if (pool.empty())
        throw std::logic_error("repair_collinear_line: ran out of apex points");
      int apex = pick_apex(ps[seg[1]], pool, side);
      tris.push_back(Triangle{{seg[0], seg[1], apex}});
      apex_of_seg.push_back(apex);
      apex_side.push_back(side);
    } else {
      // lone last segment: two free points remain
      std::vector<int> rem = above;
      rem.insert(rem.end(), below.begin(), below.end());
      if (rem.size() != 2)
        throw std::logic_error("repair_collinear_line: unexpected leftover count");
      int f1 = rem[0], f2 = rem[1];
      bool same_side = (line_side(lambda.line, ps[f1]) ==
                        line_side(lambda.line, ps[f2]));
      if (same_side && !collinear(ps[seg[0]], ps[f1], ps[f2])) {
        tris.push_back(Triangle{{seg[0], f1, f2}});
      } else if (!same_side && segs.size() >= 2) {
        // swap with the previous segment's apex so both new triangles stay
        // one-sided
        int prev = static_cast<int>(t) - 1;
        int a = apex_of_seg[prev];
        int aside = apex_side[prev];
        int f_same = line_side(lambda.line, ps[f1]) == aside ? f1 : f2;
        int f_other = f_same == f1 ? f2 : f1;
        tris[prev] = Triangle{{segs[prev][0], segs[prev][1], f_other}};
        tris.push_back(Triangle{{a, f_same, seg[0]}});
      } else {
        tris.push_back(Triangle{{seg[0], f1, f2}});  // fixed by fix_tail below
      }
      apex_of_seg.push_back(-1);
      apex_side.push_back(0);
    }
  }

  TrianglePartition tp{tris};
  VerifyResult check = verify_partition(ps, tp);
  if (!check) {
    size_t tail = tris.size() >= 2 ? tris.size() - 2 : 0;
    if (!fix_tail(ps, tp.triangles, tail) &&
        !(tris.size() >= 3 && fix_tail(ps, tp.triangles, tris.size() - 3)))
      throw std::logic_error("repair_collinear_line: terminal fix-up failed: " +
                             check.reason);
    check = verify_partition(ps, tp);
    if (!check)
      throw std::logic_error("repair_collinear_line: verification failed: " +
                             check.reason);
  }
  return tp;
}

TrianglePartition repair_two_lines(const PointSet& ps, const LineGroup& l1,
                                   const LineGroup& l2, TriangleStats* stats) {
  int total = ps.size();
  if (total % 3 != 0 || total < 6)
    throw std::invalid_argument("repair_two_lines: size must be 3n, n >= 2");
  std::set<int> on_lines(l1.members.begin(), l1.members.end());
  on_lines.insert(l2.members.begin(), l2.members.end());

  Hull hull = convex_hull(ps);
  std::vector<int> candidates;
  for (int v : hull.vertices)
    if (on_lines.count(v)) candidates.push_back(v);
  for (int v : hull.vertices)
    if (!on_lines.count(v)) candidates.push_back(v);

  std::vector<int> all(total);
  std::iota(all.begin(), all.end(), 0);

  for (int pa : candidates) {
    std::vector<int> rest1;
    for (int v : all)
      if (v != pa) rest1.push_back(v);
    if (all_collinear_idx(ps, rest1)) continue;
    PointSet sub1 = ps.subset(rest1);
    Hull hull1 = convex_hull(sub1);
    std::vector<int> chain = facing_chain(sub1, hull1, ps[pa]);
    for (size_t i = 0; i < chain.size(); ++i) {
      for (size_t j = i + 1; j < chain.size(); ++j) {
        int pb = rest1[chain[i]];
        int pc = rest1[chain[j]];
        if (collinear(ps[pa], ps[pb], ps[pc])) continue;
        if (!visible_in(ps, all, pa, pb) || !visible_in(ps, all, pa, pc) ||
            !visible_in(ps, all, pb, pc))
          continue;
        std::vector<int> rest;
        for (int v : all)
          if (v != pa && v != pb && v != pc) rest.push_back(v);
        FeasibilityVerdict verdict = check_triangle_feasible(ps.subset(rest));
        if (!verdict.feasible) continue;
        std::vector<Triangle> out = {Triangle{{pa, pb, pc}}};
        if (!rest.empty()) {
          TriSolver solver(ps, stats);
          std::vector<Triangle> tail = solver.solve(rest);
          out.insert(out.end(), tail.begin(), tail.end());
        }
        TrianglePartition tp{out};
        VerifyResult check = verify_partition(ps, tp);
        if (!check)
          throw std::logic_error("repair_two_lines: verification failed: " +
                                 check.reason);
        return tp;
      }
    }
  }
  throw std::logic_error("repair_two_lines: no admissible re-selection found");
}

}  // namespace polypart
