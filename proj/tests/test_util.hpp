// Shared instance generators for the unit and acceptance suites.
#ifndef POLYPART_TEST_UTIL_HPP
#define POLYPART_TEST_UTIL_HPP

#include <random>
#include <set>
#include <vector>

#include "polypart/feasibility.hpp"
#include "polypart/sat_gadget.hpp"

namespace polypart::testutil {

inline PointSet make_points(std::initializer_list<std::pair<long, long>> coords) {
  std::vector<Point> pts;
  for (auto [x, y] : coords) pts.push_back(pt(x, y));
  return PointSet::from(std::move(pts));
}

// n distinct integer points in [0, range]^2
inline PointSet random_points(int n, std::mt19937& rng, int range = 20) {
  std::uniform_int_distribution<long> d(0, range);
  std::set<std::pair<long, long>> seen;
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    long x = d(rng), y = d(rng);
    if (seen.insert({x, y}).second) pts.push_back(pt(x, y));
  }
  return PointSet::from(std::move(pts));
}

// random set biased toward heavy collinear runs: `on_line` points on a
// random line plus the rest scattered
inline PointSet random_collinear_heavy(int n, int on_line, std::mt19937& rng,
                                       int range = 20) {
  std::uniform_int_distribution<long> d(0, range);
  std::uniform_int_distribution<long> ds(1, 3);
  std::set<std::pair<long, long>> seen;
  std::vector<Point> pts;
  long y0 = d(rng);
  long dx = ds(rng), dy = std::uniform_int_distribution<long>(-1, 1)(rng);
  long x = d(rng) % 5;
  for (int i = 0; i < on_line; ++i) {
    while (!seen.insert({x, y0}).second) x += dx;
    pts.push_back(pt(x, y0));
    x += dx;
    y0 += 0 * dy;
  }
  while (static_cast<int>(pts.size()) < n) {
    long px = d(rng), py = d(rng);
    if (seen.insert({px, py}).second) pts.push_back(pt(px, py));
  }
  return PointSet::from(std::move(pts));
}

// random spec with the given total, all sizes >= 3, optionally forcing a
// size >= 4
inline PartitionSpec random_spec(int total, bool force_big, std::mt19937& rng) {
  if (total < 3) throw std::invalid_argument("random_spec: total too small");
  for (int tries = 0; tries < 10000; ++tries) {
    std::vector<int> sizes;
    int left = total;
    bool stuck = false;
    while (left > 0) {
      std::vector<int> cands;
      for (int s = 3; s <= std::min(left, 9); ++s)
        if (left - s == 0 || left - s >= 3) cands.push_back(s);
      if (cands.empty()) {
        stuck = true;
        break;
      }
      int s = cands[rng() % cands.size()];
      sizes.push_back(s);
      left -= s;
    }
    if (stuck) continue;
    bool big = std::any_of(sizes.begin(), sizes.end(), [](int s) { return s >= 4; });
    if (force_big && !big) continue;
    return PartitionSpec::from(sizes);
  }
  // all-triangle totals cannot force a big cycle (e.g. total == 6)
  return PartitionSpec::from(std::vector<int>(total / 3, 3));
}

// directly-normalized random formula: m clauses, variables assigned to
// non-adjacent clause pairs/triples with both polarities
inline Formula random_normalized_formula(int max_vars, int max_clauses,
                                         std::mt19937& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    std::uniform_int_distribution<int> dm(4, std::max(4, max_clauses));
    int m = dm(rng);
    std::uniform_int_distribution<int> dn(2, std::max(2, max_vars));
    int n = dn(rng);
    std::vector<std::vector<int>> clauses(m);
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      std::uniform_int_distribution<int> d3(2, 3);
      int occ = d3(rng);
      // pick `occ` pairwise non-adjacent clauses with room (< 3 literals)
      std::vector<int> chosen;
      for (int t = 0; t < 200 && static_cast<int>(chosen.size()) < occ; ++t) {
        int c = std::uniform_int_distribution<int>(0, m - 1)(rng);
        bool fine = clauses[c].size() < 3;
        for (int cc : chosen)
          if (std::abs(cc - c) <= 1) fine = false;
        if (fine && std::find(chosen.begin(), chosen.end(), c) == chosen.end())
          chosen.push_back(c);
      }
      if (static_cast<int>(chosen.size()) < occ) {
        ok = false;
        break;
      }
      std::sort(chosen.begin(), chosen.end());
      // both polarities: one occurrence negative (random which)
      int neg_at = std::uniform_int_distribution<int>(0, occ - 1)(rng);
      for (int i = 0; i < occ; ++i)
        clauses[chosen[i]].push_back(i == neg_at ? -v : v);
    }
    if (!ok) continue;
    for (const auto& cl : clauses)
      if (cl.empty()) ok = false;
    if (!ok) continue;
    Formula f = Formula::from(n, clauses);
    std::string why;
    if (!f.is_normalized(&why)) continue;
    return f;
  }
  throw std::logic_error("random_normalized_formula: generation failed");
}

}  // namespace polypart::testutil

#endif
