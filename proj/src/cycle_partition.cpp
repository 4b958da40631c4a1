#include "polypart/cycle_partition.hpp"

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

}  // namespace

Matching noncrossing_matching(const PointSet& ps) {
  if (ps.size() < 2 || ps.size() % 2 != 0)
    throw std::invalid_argument("noncrossing_matching: needs an even set, >= 2");
  Matching m;
  std::vector<int> active(ps.size());
  std::iota(active.begin(), active.end(), 0);
  while (active.size() > 2) {
    PointSet sub = ps.subset(active);
    Hull hull = convex_hull(sub);
    int a = active[hull.boundary[0]];
    int b = active[hull.boundary[1]];
    m.pairs.emplace_back(a, b);
    std::vector<int> next;
    for (int v : active)
      if (v != a && v != b) next.push_back(v);
    active = std::move(next);
  }
  m.pairs.emplace_back(active[0], active[1]);
  return m;
}

Polygon star_polygon(const PointSet& ps, std::vector<int> members) {
  if (members.size() < 3)
    throw std::invalid_argument("star_polygon: needs at least 3 points");
  if (all_collinear_idx(ps, members))
    throw SeparationDegenerate("star_polygon: members are collinear");
  // anchor: lowest then leftmost member
  int anchor = members[0];
  for (int v : members) {
    int cy = cmp(ps[v].y, ps[anchor].y);
    if (cy < 0 || (cy == 0 && cmp(ps[v].x, ps[anchor].x) < 0)) anchor = v;
  }
  std::vector<int> rest;
  for (int v : members)
    if (v != anchor) rest.push_back(v);
  const Point& p = ps[anchor];
  auto cross_sign = [&](int a, int b) {
    Rational c = (ps[a].x - p.x) * (ps[b].y - p.y) -
                 (ps[a].y - p.y) * (ps[b].x - p.x);
    return sgn(c);
  };
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    int s = cross_sign(a, b);
    if (s != 0) return s > 0;  // a angularly before b
    return dist2(ps[a], p) < dist2(ps[b], p);
  });
  // final ray: walk outside-in so the closing edge returns from the nearest
  size_t tail = rest.size() - 1;
  while (tail > 0 && cross_sign(rest[tail - 1], rest.back()) == 0) --tail;
  std::reverse(rest.begin() + tail, rest.end());

  Polygon poly;
  poly.indices.push_back(anchor);
  poly.indices.insert(poly.indices.end(), rest.begin(), rest.end());
  return poly;
}

VerifyResult polygon_simple(const PointSet& ps, const Polygon& poly) {
  int k = poly.size();
  if (k < 3) return {false, "degenerate: fewer than 3 vertices"};
  std::set<int> uniq(poly.indices.begin(), poly.indices.end());
  if (static_cast<int>(uniq.size()) != k)
    return {false, "degenerate: repeated vertex"};
  if (all_collinear_idx(ps, poly.indices))
    return {false, "degenerate: all vertices collinear"};
  auto v = [&](int i) -> const Point& { return ps[poly.indices[(i % k + k) % k]]; };
  for (int i = 0; i < k; ++i) {
    // adjacent edges may be flat but must not fold back
    if (collinear(v(i - 1), v(i), v(i + 1))) {
      Rational dot = (v(i - 1).x - v(i).x) * (v(i + 1).x - v(i).x) +
                     (v(i - 1).y - v(i).y) * (v(i + 1).y - v(i).y);
      if (sgn(dot) > 0) return {false, "non-simple: edge folds back"};
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (adjacent) continue;
      if (segments_intersect(v(i), v(i + 1), v(j), v(j + 1)))
        return {false, "non-simple: edges intersect"};
    }
  }
  return {true, ""};
}

VerifyResult verify_cycles(const PointSet& ps, const CyclePartition& cp) {
  std::vector<int> got, want = cp.spec.sizes;
  for (const auto& poly : cp.polygons) got.push_back(poly.size());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) return {false, "size mismatch against spec"};
  std::vector<int> seen(ps.size(), 0);
  int covered = 0;
  for (const auto& poly : cp.polygons)
    for (int idx : poly.indices) {
      if (idx < 0 || idx >= ps.size()) return {false, "coverage: index out of range"};
      if (seen[idx]++) return {false, "overlap: index used twice"};
      ++covered;
    }
  if (covered != ps.size()) return {false, "coverage: not all points used"};
  for (const auto& poly : cp.polygons) {
    VerifyResult r = polygon_simple(ps, poly);
    if (!r) return r;
  }
  for (size_t i = 0; i < cp.polygons.size(); ++i)
    for (size_t j = i + 1; j < cp.polygons.size(); ++j)
      if (!hulls_disjoint(ps, cp.polygons[i].indices, cp.polygons[j].indices))
        return {false, "hull overlap between cycles"};
  return {true, ""};
}

namespace {

// Simple polygon around a prescribed anchor that sees all members within a
// wedge (anchor must be a hull vertex of a superset).
Polygon star_polygon_around(const PointSet& ps, const std::vector<int>& members,
                            int anchor) {
  if (all_collinear_idx(ps, members))
    throw SeparationDegenerate("cycle points are collinear");
  std::vector<int> rest;
  for (int v : members)
    if (v != anchor) rest.push_back(v);
  const Point& p = ps[anchor];
  auto cross_sign = [&](int a, int b) {
    Rational c = (ps[a].x - p.x) * (ps[b].y - p.y) -
                 (ps[a].y - p.y) * (ps[b].x - p.x);
    return sgn(c);
  };
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    int s = cross_sign(a, b);
    if (s != 0) return s > 0;
    return dist2(ps[a], p) < dist2(ps[b], p);
  });
  size_t tail = rest.size() - 1;
  while (tail > 0 && cross_sign(rest[tail - 1], rest.back()) == 0) --tail;
  std::reverse(rest.begin() + tail, rest.end());
  Polygon poly;
  poly.indices.push_back(anchor);
  poly.indices.insert(poly.indices.end(), rest.begin(), rest.end());
  return poly;
}

}  // namespace

Separation separate_cycle(const PointSet& ps, int L, int seed_offset) {
  if (L < 3) throw std::invalid_argument("separate_cycle: L must be >= 3");
  if (ps.size() <= L)
    throw std::invalid_argument("separate_cycle: need more than L points");
  std::vector<int> all(ps.size());
  std::iota(all.begin(), all.end(), 0);
  if (all_collinear_idx(ps, all))
    throw std::invalid_argument("separate_cycle: point set is all collinear");

  Hull hull = convex_hull(ps);
  int hv = static_cast<int>(hull.vertices.size());
  // seed order starts at the lowest-then-leftmost hull vertex
  int start = 0;
  for (int i = 1; i < hv; ++i) {
    const Point& a = ps[hull.vertices[i]];
    const Point& b = ps[hull.vertices[start]];
    int cy = cmp(a.y, b.y);
    if (cy < 0 || (cy == 0 && cmp(a.x, b.x) < 0)) start = i;
  }
  if (seed_offset >= hv)
    throw SeparationDegenerate("separate_cycle: seed offsets exhausted");
  int seed = hull.vertices[(start + seed_offset) % hv];
  const Point& sp = ps[seed];

  // Peel one point per step: the nearest remainder point on the current
  // left-tangent ray. The tangent angle from the seed never increases, so
  // the cycle occupies an angular wedge the remainder has left; consuming
  // the nearest point on the ray keeps the shared ray split cleanly.
  std::vector<int> cycle = {seed};
  std::vector<int> rem;
  for (int v : all)
    if (v != seed) rem.push_back(v);
  while (static_cast<int>(cycle.size()) < L) {
    PointSet sub = ps.subset(rem);
    Hull subhull = convex_hull(sub);
    auto [left, right] = hull_tangents(sub, subhull, sp);
    // nearest remainder point on the ray seed -> left tangent
    int pick = -1;
    for (size_t i = 0; i < rem.size(); ++i) {
      const Point& q = ps[rem[i]];
      if (orientation(sp, sub[left], q) != Orient::Collinear) continue;
      Rational dot = (q.x - sp.x) * (sub[left].x - sp.x) +
                     (q.y - sp.y) * (sub[left].y - sp.y);
      if (sgn(dot) <= 0) continue;  // wrong side of the seed
      if (pick < 0 || dist2(q, sp) < dist2(ps[pick], sp))
        pick = rem[static_cast<int>(i)];
    }
    if (pick < 0)
      throw std::logic_error("separate_cycle: tangent ray lost its point");
    cycle.push_back(pick);
    rem.erase(std::find(rem.begin(), rem.end(), pick));
  }
  Polygon poly = star_polygon_around(ps, cycle, seed);
  Separation sep{poly, rem};
  if (!hulls_disjoint(ps, cycle, rem))
    throw std::logic_error("separate_cycle: hull disjointness violated");
  return sep;
}

namespace {

// First candidate hit when rotating the ray (origin -> dir_point) around
// origin; ccw selects the rotation sense. Ties: nearer point first.
int first_hit_rotating(const PointSet& ps, const Point& origin,
                       const Point& dir_point, const std::vector<int>& cands,
                       bool ccw) {
  auto angle_class = [&](const Point& q) {
    // 0: on the ray; 1..: strictly increasing rotation angle buckets
    Rational cross = (dir_point.x - origin.x) * (q.y - origin.y) -
                     (dir_point.y - origin.y) * (q.x - origin.x);
    Rational dot = (dir_point.x - origin.x) * (q.x - origin.x) +
                   (dir_point.y - origin.y) * (q.y - origin.y);
    int cs = sgn(cross);
    if (!ccw) cs = -cs;
    int ds = sgn(dot);
    if (cs == 0) return ds > 0 ? 0 : 2;  // forward ray : backward ray
    return cs > 0 ? 1 : 3;               // rotating side : far side
  };
  int best = -1;
  int best_class = -1;
  for (int c : cands) {
    int cls = angle_class(ps[c]);
    if (best < 0) {
      best = c;
      best_class = cls;
      continue;
    }
    bool better = false;
    if (cls != best_class) {
      better = cls < best_class;
    } else if (cls == 1 || cls == 3) {
      // same open half-turn: smaller rotation angle wins
      Rational cr = (ps[best].x - origin.x) * (ps[c].y - origin.y) -
                    (ps[best].y - origin.y) * (ps[c].x - origin.x);
      int s = sgn(cr);
      if (!ccw) s = -s;
      if (s < 0)
        better = true;
      else if (s == 0)
        better = dist2(ps[c], origin) < dist2(ps[best], origin);
    } else {
      better = dist2(ps[c], origin) < dist2(ps[best], origin);
    }
    if (better) {
      best = c;
      best_class = cls;
    }
  }
  return best;
}

}  // namespace

CyclePartition bigline_partition(const PointSet& ps, const PartitionSpec& spec,
                                 const LineGroup& lambda) {
  int total = spec.total();
  int l = spec.count();
  if (ps.size() != total)
    throw std::invalid_argument("bigline_partition: point count mismatch");

  if (l == 1) {
    if (lambda.size() > total - 1)
      throw std::invalid_argument("bigline_partition: line too heavy for one cycle");
    std::vector<int> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    CyclePartition cp{{star_polygon(ps, all)}, spec};
    VerifyResult check = verify_cycles(ps, cp);
    if (!check)
      throw std::logic_error("bigline_partition: verification failed: " + check.reason);
    return cp;
  }

  // last cycle is the smallest; blocks take the rest, largest first
  std::vector<int> sizes = spec.sizes;  // ascending
  int last_size = sizes.front();
  std::vector<int> block_sizes(sizes.begin() + 1, sizes.end());
  std::sort(block_sizes.rbegin(), block_sizes.rend());

  int lower = total - last_size - l + 2;
  int upper = total - l;
  if (lambda.size() < lower || lambda.size() > upper)
    throw std::invalid_argument(
        "bigline_partition: line population outside the lemma band (" +
        std::to_string(lambda.size()) + " not in [" + std::to_string(lower) +
        "," + std::to_string(upper) + "])");

  const std::vector<int>& on = lambda.members;
  std::set<int> on_set(on.begin(), on.end());
  std::vector<int> above, below;
  for (int i = 0; i < ps.size(); ++i) {
    if (on_set.count(i)) continue;
    int side = line_side(lambda.line, ps[i]);
    if (side == 0)
      throw std::invalid_argument("bigline_partition: line group not maximal");
    (side > 0 ? above : below).push_back(i);
  }

  // carve blocks of consecutive line points
  std::vector<std::vector<int>> blocks;
  size_t pos = 0;
  for (int bs : block_sizes) {
    std::vector<int> blk(on.begin() + pos, on.begin() + pos + (bs - 1));
    pos += bs - 1;
    blocks.push_back(std::move(blk));
  }
  std::vector<int> m_last(on.begin() + pos, on.end());
  if (m_last.empty() || static_cast<int>(m_last.size()) > last_size - 1)
    throw std::logic_error("bigline_partition: leftover block out of range");

  bool both_big = static_cast<int>(above.size()) > l - 1 &&
                  static_cast<int>(below.size()) > l - 1;

  // apex assignment order: small side first, unless both sides are big, in
  // which case one side serves every block
  std::vector<int>* primary = &above;
  std::vector<int>* secondary = &below;
  if (!both_big && static_cast<int>(above.size()) > l - 1) {
    primary = &below;
    secondary = &above;
  }

  auto pick_apex = [&](const std::vector<int>& block, std::vector<int>& pool) {
    const Point& mfirst = ps[block.front()];
    const Point& mlast = ps[block.back()];
    int side = line_side(lambda.line, ps[pool.front()]);
    // empty-triangle filter over all same-side points
    const std::vector<int>& same_side = side > 0 ? above : below;
    std::vector<int> cands;
    for (int c : pool) {
      bool empty = true;
      for (int q : same_side) {
        if (q == c) continue;
        // strictly inside triangle (c, mfirst, mlast)
        Orient o1 = orientation(ps[c], mfirst, ps[q]);
        Orient o2 = orientation(mfirst, mlast, ps[q]);
        Orient o3 = orientation(mlast, ps[c], ps[q]);
        if (o1 != Orient::Collinear && o1 == o2 && o2 == o3) {
          empty = false;
          break;
        }
      }
      if (empty) cands.push_back(c);
    }
    if (cands.empty())
      throw std::logic_error("bigline_partition: no empty-triangle apex");
    // extreme ray: every other candidate on the trailing side of (mlast -> apex)
    int best = cands[0];
    for (size_t i = 1; i < cands.size(); ++i) {
      int c = cands[i];
      Rational cross = (ps[best].x - mlast.x) * (ps[c].y - mlast.y) -
                       (ps[best].y - mlast.y) * (ps[c].x - mlast.x);
      int s = sgn(cross);
      bool better;
      if (s == 0)
        better = dist2(ps[c], mlast) < dist2(ps[best], mlast);
      else
        better = (side > 0) ? (s > 0) : (s < 0);
      if (better) best = c;
    }
    pool.erase(std::find(pool.begin(), pool.end(), best));
    return best;
  };

  std::vector<Polygon> polys;
  std::vector<int> apex_of_block;
  for (auto& block : blocks) {
    std::vector<int>* pool;
    if (both_big)
      pool = &above;
    else
      pool = primary->empty() ? secondary : primary;
    if (pool->empty())
      throw std::logic_error("bigline_partition: apex pool exhausted");
    int apex = pick_apex(block, *pool);
    apex_of_block.push_back(apex);
    Polygon poly;
    poly.indices.push_back(apex);
    poly.indices.insert(poly.indices.end(), block.begin(), block.end());
    polys.push_back(poly);
  }

  std::vector<int> leftover = m_last;
  leftover.insert(leftover.end(), above.begin(), above.end());
  leftover.insert(leftover.end(), below.begin(), below.end());

  bool needs_release =
      all_collinear_idx(ps, leftover) || (both_big && m_last.size() == 1);
  if (needs_release) {
    // rotate the last block's closing ray to swap in a free point, releasing
    // the block's rightmost line point into the leftover
    int rb = static_cast<int>(blocks.size()) - 1;
    int released = blocks[rb].back();
    int apex = apex_of_block[rb];
    const Point& origin = ps[released];
    std::vector<int> frees = above;
    frees.insert(frees.end(), below.begin(), below.end());
    int swap_in = -1;
    for (bool ccw : {true, false}) {
      int cand = first_hit_rotating(ps, origin, ps[apex], frees, ccw);
      if (cand < 0) continue;
      Polygon replacement;
      replacement.indices.push_back(apex);
      replacement.indices.insert(replacement.indices.end(), blocks[rb].begin(),
                                 blocks[rb].end() - 1);
      replacement.indices.push_back(cand);
      if (polygon_simple(ps, replacement).ok) {
        polys[rb] = replacement;
        swap_in = cand;
        break;
      }
    }
    if (swap_in < 0)
      throw std::logic_error("bigline_partition: ray-rotation repair failed");
    std::vector<int> new_leftover;
    for (int v : leftover)
      if (v != swap_in) new_leftover.push_back(v);
    new_leftover.push_back(released);
    leftover = std::move(new_leftover);
    if (all_collinear_idx(ps, leftover))
      throw std::logic_error("bigline_partition: leftover still collinear");
  }

  polys.push_back(star_polygon(ps, leftover));
  CyclePartition cp{std::move(polys), spec};
  VerifyResult check = verify_cycles(ps, cp);
  if (!check)
    throw std::logic_error("bigline_partition: verification failed: " +
                           check.reason);
  return cp;
}

CyclePartition partition_cycles(const PointSet& ps, const PartitionSpec& spec) {
  if (ps.size() != spec.total())
    throw std::invalid_argument("partition_cycles: point count mismatch");
  if (spec.all_triangles()) {
    TrianglePartition tp = partition_triangles(ps);
    CyclePartition cp;
    cp.spec = spec;
    for (const auto& t : tp.triangles) {
      Polygon poly;
      poly.indices.assign(t.indices.begin(), t.indices.end());
      cp.polygons.push_back(poly);
    }
    return cp;
  }
  FeasibilityVerdict verdict = check_cycle_feasible(ps, spec);
  if (!verdict.feasible)
    throw InfeasibleError("partition_cycles: NC' violated", verdict);

  std::vector<int> active(ps.size());
  std::iota(active.begin(), active.end(), 0);
  std::vector<int> remaining = spec.sizes;  // ascending
  std::vector<Polygon> polys;

  while (remaining.size() > 1) {
    int L = remaining.front();
    PointSet sub = ps.subset(active);
    Hull subhull = convex_hull(sub);
    std::optional<Separation> sep;
    for (int offset = 0; offset < static_cast<int>(subhull.vertices.size());
         ++offset) {
      try {
        sep = separate_cycle(sub, L, offset);
        break;
      } catch (const SeparationDegenerate&) {
        continue;
      }
    }
    if (!sep)
      throw std::logic_error("partition_cycles: every separation seed degenerated");

    // residual NC' check decides between accepting the peel and bigline
    std::vector<int> rest_sizes(remaining.begin() + 1, remaining.end());
    PartitionSpec rest_spec = PartitionSpec::from(rest_sizes);
    std::vector<int> rem_orig;
    for (int v : sep->remainder) rem_orig.push_back(active[v]);
    auto [rem_col, rem_group] = max_collinear(ps.subset(sep->remainder));
    if (rem_col > rest_spec.collinear_bound()) {
      auto [col, group] = max_collinear(sub);
      PartitionSpec cur_spec = PartitionSpec::from(remaining);
      CyclePartition bcp = bigline_partition(sub, cur_spec, *group);
      for (const auto& poly : bcp.polygons) {
        Polygon mapped;
        for (int v : poly.indices) mapped.indices.push_back(active[v]);
        polys.push_back(mapped);
      }
      remaining.clear();
      active.clear();
      break;
    }
    Polygon mapped;
    for (int v : sep->cycle.indices) mapped.indices.push_back(active[v]);
    polys.push_back(mapped);
    active = std::move(rem_orig);
    remaining.erase(remaining.begin());
  }
  if (remaining.size() == 1) {
    PointSet sub = ps.subset(active);
    Polygon last = star_polygon(sub, [&] {
      std::vector<int> all(sub.size());
      std::iota(all.begin(), all.end(), 0);
      return all;
    }());
    Polygon mapped;
    for (int v : last.indices) mapped.indices.push_back(active[v]);
    polys.push_back(mapped);
  }
  CyclePartition cp{std::move(polys), spec};
  VerifyResult check = verify_cycles(ps, cp);
  if (!check)
    throw std::logic_error("partition_cycles: verification failed: " +
                           check.reason);
  return cp;
}

}  // namespace polypart
