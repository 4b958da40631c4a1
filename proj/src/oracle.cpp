#include "polypart/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace polypart {

namespace {

struct Budget {
  long long remaining;
  bool exhausted = false;

  bool tick() {
    if (exhausted || --remaining < 0) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

bool all_collinear_pts(const PointSet& ps, const std::vector<int>& idx) {
  if (idx.size() <= 2) return true;
  for (size_t i = 2; i < idx.size(); ++i)
    if (!collinear(ps[idx[0]], ps[idx[1]], ps[idx[i]])) return false;
  return true;
}

}  // namespace

// ==================== cycle partition ====================

namespace {

struct CycleSearch {
  const PointSet& ps;
  Budget& budget;
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<Point>> group_hulls;  // cached hull vertices
  // line-capacity prune: a cycle of length L holds at most L-1 points of one
  // line, so a line with more than sum(L_i - 1) remaining members kills the
  // branch (elementary pigeonhole, independent of the theorems under test)
  std::vector<std::vector<int>> point_lines;
  std::vector<int> line_remaining;

  CycleSearch(const PointSet& p, Budget& b) : ps(p), budget(b) {
    auto lines = line_groups(ps);
    point_lines.resize(ps.size());
    for (const auto& lg : lines) {
      if (lg.size() < 3) continue;
      int id = static_cast<int>(line_remaining.size());
      line_remaining.push_back(lg.size());
      for (int v : lg.members) point_lines[v].push_back(id);
    }
  }

  bool capacity_ok(const std::multiset<int>& sizes) const {
    int cap = 0;
    for (int L : sizes) cap += L - 1;
    for (int rem : line_remaining)
      if (rem > cap) return false;
    return true;
  }

  bool admissible(const std::vector<int>& group,
                  std::vector<Point>& hull_out) {
    if (all_collinear_pts(ps, group)) return false;
    hull_out = hull_points(ps, group);
    for (const auto& fixed : group_hulls)
      if (!convex_hulls_disjoint(hull_out, fixed)) return false;
    return true;
  }

  bool solve(std::vector<int> unassigned, std::multiset<int> sizes) {
    if (!budget.tick()) return false;
    if (unassigned.empty()) return true;
    if (!capacity_ok(sizes)) return false;
    int anchor = unassigned.front();
    std::vector<int> rest(unassigned.begin() + 1, unassigned.end());
    std::set<int> tried;
    for (int L : sizes) {
      if (tried.count(L)) continue;
      tried.insert(L);
      std::vector<int> comb;
      if (choose(rest, L - 1, 0, comb, anchor, sizes, L)) return true;
      if (budget.exhausted) return false;
    }
    return false;
  }

  bool choose(const std::vector<int>& rest, int need, size_t from,
              std::vector<int>& comb, int anchor, const std::multiset<int>& sizes,
              int L) {
    if (budget.exhausted) return false;
    if (need == 0) {
      std::vector<int> group = {anchor};
      group.insert(group.end(), comb.begin(), comb.end());
      std::vector<Point> hull;
      if (!admissible(group, hull)) return false;
      std::vector<int> next;
      std::set<int> used(group.begin(), group.end());
      for (int v : rest)
        if (!used.count(v)) next.push_back(v);
      std::multiset<int> nsizes = sizes;
      nsizes.erase(nsizes.find(L));
      groups.push_back(group);
      group_hulls.push_back(std::move(hull));
      for (int v : group)
        for (int id : point_lines[v]) --line_remaining[id];
      if (solve(next, nsizes)) return true;
      for (int v : group)
        for (int id : point_lines[v]) ++line_remaining[id];
      groups.pop_back();
      group_hulls.pop_back();
      return false;
    }
    for (size_t i = from; i + static_cast<size_t>(need) <= rest.size(); ++i) {
      if (!budget.tick()) return false;
      comb.push_back(rest[i]);
      if (choose(rest, need - 1, i + 1, comb, anchor, sizes, L)) return true;
      comb.pop_back();
      if (budget.exhausted) return false;
    }
    return false;
  }
};

}  // namespace

CycleOracleResult brute_force_cycle_partition(const PointSet& ps,
                                              const PartitionSpec& spec,
                                              const OracleBudget& budget) {
  if (ps.size() != spec.total())
    throw std::invalid_argument("cycle oracle: point count mismatch");
  if (ps.size() > budget.max_points) return {OracleStatus::Exhausted, std::nullopt};
  Budget b{budget.max_nodes};
  CycleSearch search(ps, b);
  std::vector<int> all(ps.size());
  std::iota(all.begin(), all.end(), 0);
  std::multiset<int> sizes(spec.sizes.begin(), spec.sizes.end());
  bool found = search.solve(all, sizes);
  if (b.exhausted) return {OracleStatus::Exhausted, std::nullopt};
  if (!found) return {OracleStatus::None, std::nullopt};
  CyclePartition cp;
  cp.spec = spec;
  for (const auto& group : search.groups)
    cp.polygons.push_back(star_polygon(ps, group));
  VerifyResult check = verify_cycles(ps, cp);
  if (!check)
    throw std::logic_error("cycle oracle: produced partition failed verification: " +
                           check.reason);
  return {OracleStatus::Found, cp};
}

// ==================== maximum independent set ====================

MisOracleResult brute_force_mis(const PointSet& ps, const OracleBudget& budget) {
  if (ps.size() > budget.max_points) return {OracleStatus::Exhausted, 0, {}};
  VisibilityGraph g = build_pvg(ps);
  Budget b{budget.max_nodes};
  std::vector<int> best, current;
  std::vector<int> all(ps.size());
  std::iota(all.begin(), all.end(), 0);

  auto recurse = [&](auto&& self, std::vector<int>& cand) -> void {
    if (b.exhausted) return;
    if (!b.tick()) return;
    if (current.size() + cand.size() <= best.size()) return;
    if (cand.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    int pick = cand[0], deg = -1;
    for (int v : cand) {
      int d = 0;
      for (int u : cand)
        if (g.visible(v, u)) ++d;
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    std::vector<int> incl;
    for (int u : cand)
      if (u != pick && !g.visible(pick, u)) incl.push_back(u);
    current.push_back(pick);
    self(self, incl);
    current.pop_back();
    std::vector<int> excl;
    for (int u : cand)
      if (u != pick) excl.push_back(u);
    self(self, excl);
  };
  recurse(recurse, all);
  if (b.exhausted) return {OracleStatus::Exhausted, 0, {}};
  std::sort(best.begin(), best.end());
  return {OracleStatus::Found, static_cast<int>(best.size()), best};
}

// ==================== SAT ====================

SatOracleResult brute_force_sat(const Formula& f) {
  if (f.num_vars > 24)
    throw std::invalid_argument("brute_force_sat: more than 24 variables");
  std::vector<int> value(f.num_vars + 1, -1);

  auto consistent = [&]() {
    for (const auto& cl : f.clauses) {
      bool sat = false, open = false;
      for (int lit : cl) {
        int v = std::abs(lit);
        if (value[v] < 0)
          open = true;
        else if ((lit > 0) == (value[v] == 1))
          sat = true;
      }
      if (!sat && !open) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, int var) -> bool {
    if (var > f.num_vars) return consistent();
    for (int val : {0, 1}) {  // false first: lexicographic order
      value[var] = val;
      if (consistent() && self(self, var + 1)) return true;
    }
    value[var] = -1;
    return false;
  };
  if (!dfs(dfs, 1)) return {false, {}};
  std::vector<bool> assignment(f.num_vars);
  for (int v = 1; v <= f.num_vars; ++v) assignment[v - 1] = value[v] == 1;
  return {true, assignment};
}

// ==================== clique partition: plain search ====================

namespace {

struct PlainCliqueSearch {
  const PointSet& ps;
  const VisibilityGraph& g;
  int k;
  Budget& budget;
  std::vector<uint8_t> assigned;
  std::vector<std::vector<int>> groups;
  // line-capacity prune data: lines with >= 3 members
  std::vector<std::vector<int>> point_lines;  // big-line ids per point
  std::vector<int> line_remaining;
  int groups_remaining;

  PlainCliqueSearch(const PointSet& p, const VisibilityGraph& gv, int kk,
                    Budget& b)
      : ps(p), g(gv), k(kk), budget(b), assigned(p.size(), 0) {
    auto lines = line_groups(ps);
    point_lines.resize(ps.size());
    for (const auto& lg : lines) {
      if (lg.size() < 3) continue;
      int id = static_cast<int>(line_remaining.size());
      line_remaining.push_back(lg.size());
      for (int v : lg.members) point_lines[v].push_back(id);
    }
    groups_remaining = ps.size() / k;
  }

  bool capacity_ok() const {
    for (int rem : line_remaining)
      if (rem > 2 * groups_remaining) return false;
    return true;
  }

  void mark(int v, int delta) {
    for (int id : point_lines[v]) line_remaining[id] += delta;
  }

  bool solve() {
    if (!budget.tick()) return false;
    int anchor = -1;
    for (int v = 0; v < ps.size(); ++v)
      if (!assigned[v]) {
        anchor = v;
        break;
      }
    if (anchor < 0) return true;
    std::vector<int> cands;
    for (int v = anchor + 1; v < ps.size(); ++v)
      if (!assigned[v] && g.visible(anchor, v)) cands.push_back(v);
    std::vector<int> member = {anchor};
    return extend(member, cands, 0);
  }

  bool extend(std::vector<int>& member, const std::vector<int>& cands,
              size_t from) {
    if (budget.exhausted) return false;
    if (static_cast<int>(member.size()) == k) {
      for (int v : member) {
        assigned[v] = 1;
        mark(v, -1);
      }
      --groups_remaining;
      bool good = capacity_ok() && solve();
      if (good) {
        groups.push_back(member);
        return true;
      }
      ++groups_remaining;
      for (int v : member) {
        assigned[v] = 0;
        mark(v, +1);
      }
      return false;
    }
    for (size_t i = from; i < cands.size(); ++i) {
      int v = cands[i];
      bool ok = true;
      for (int u : member)
        if (!g.visible(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (!budget.tick()) return false;
      member.push_back(v);
      if (extend(member, cands, i + 1)) return true;
      member.pop_back();
      if (budget.exhausted) return false;
    }
    return false;
  }
};

// ==================== clique partition: clone-quotient search ====================
//
// Points on a long line whose off-line neighborhoods coincide are
// interchangeable; contiguous stretches of such clones are tracked as
// counters. A group takes at most two points per line (an adjacent pair), so
// shapes over {explicit points} x {run counters} cover every clique exactly.

struct QuotientModel {
  const PointSet& ps;
  const VisibilityGraph& g;
  int k;

  std::vector<int> explicit_ids;  // ascending global ids
  struct Run {
    int line = -1;                  // host line id
    std::vector<int> interior;      // ids in line order
    int left_boundary = -1;         // explicit neighbour, -1 if none
    int right_boundary = -1;
  };
  std::vector<Run> runs;

  // adjacency: explicit x explicit from g. explicit x run and run x run are
  // uniform by cloning; same-line cases get special codes.
  enum Rel { INVIS = 0, VIS = 1, PIN_LEFT = 2, PIN_RIGHT = 3 };
  std::vector<std::vector<Rel>> expl_run;   // [explicit][run]
  std::vector<std::vector<uint8_t>> run_run;  // visibility between runs

  explicit QuotientModel(const PointSet& p, const VisibilityGraph& gv, int kk)
      : ps(p), g(gv), k(kk) {}

  bool build() {
    // host candidates are long axis-parallel lines (the clone structure this
    // search targets); exactness is preserved because every clone claim is
    // verified against the real visibility graph before use. Short
    // incidental collinearities must not disqualify anyone.
    std::vector<LineGroup> lines;
    {
      std::map<Rational, std::vector<int>> by_y, by_x;
      for (int v = 0; v < ps.size(); ++v) {
        by_y[ps[v].y].push_back(v);
        by_x[ps[v].x].push_back(v);
      }
      for (auto& [y, members] : by_y) {
        if (static_cast<int>(members.size()) < 6) continue;
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return lex_less(ps[a], ps[b]); });
        lines.push_back(LineGroup{LineKey{}, members});
      }
      for (auto& [x, members] : by_x) {
        if (static_cast<int>(members.size()) < 6) continue;
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return lex_less(ps[a], ps[b]); });
        lines.push_back(LineGroup{LineKey{}, members});
      }
    }
    std::vector<std::vector<int>> on_big(ps.size());
    for (size_t i = 0; i < lines.size(); ++i)
      for (int v : lines[i].members) on_big[v].push_back(static_cast<int>(i));
    std::vector<int> host(ps.size(), -1);
    for (int v = 0; v < ps.size(); ++v)
      if (on_big[v].size() == 1) host[v] = on_big[v][0];

    // off-host-line neighborhood signature
    int words = (ps.size() + 63) / 64;
    auto signature = [&](int v) {
      std::vector<uint64_t> sig(words, 0);
      const LineGroup& lg = lines[host[v]];
      std::set<int> online(lg.members.begin(), lg.members.end());
      for (int u = 0; u < ps.size(); ++u)
        if (u != v && !online.count(u) && g.visible(v, u))
          sig[u / 64] |= 1ull << (u % 64);
      return sig;
    };

    std::vector<uint8_t> in_run(ps.size(), 0);
    for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
      const auto& mem = lines[li].members;
      size_t i = 0;
      while (i < mem.size()) {
        if (host[mem[i]] != li) {
          ++i;
          continue;
        }
        size_t j = i;
        auto sig = signature(mem[i]);
        while (j + 1 < mem.size() && host[mem[j + 1]] == li &&
               signature(mem[j + 1]) == sig)
          ++j;
        // stretch [i..j]; boundaries stay explicit, interior becomes a run
        if (j - i + 1 >= 6) {
          Run r;
          r.line = li;
          r.left_boundary = mem[i];
          r.right_boundary = mem[j];
          for (size_t t = i + 1; t < j; ++t) r.interior.push_back(mem[t]);
          runs.push_back(std::move(r));
          for (size_t t = i + 1; t < j; ++t) in_run[mem[t]] = 1;
        }
        i = j + 1;
      }
    }
    for (int v = 0; v < ps.size(); ++v)
      if (!in_run[v]) explicit_ids.push_back(v);
    if (explicit_ids.size() > 72 || runs.empty()) return false;

    // relations
    expl_run.assign(explicit_ids.size(), std::vector<Rel>(runs.size(), INVIS));
    for (size_t e = 0; e < explicit_ids.size(); ++e) {
      int p = explicit_ids[e];
      for (size_t r = 0; r < runs.size(); ++r) {
        const Run& run = runs[r];
        if (p == run.left_boundary)
          expl_run[e][r] = PIN_LEFT;
        else if (p == run.right_boundary)
          expl_run[e][r] = PIN_RIGHT;
        else {
          // uniform by cloning: test the middle representative
          int rep = run.interior[run.interior.size() / 2];
          bool vis = g.visible(p, rep);
          // verify uniformity (cheap safety; quotient must be exact)
          if (g.visible(p, run.interior.front()) != vis ||
              g.visible(p, run.interior.back()) != vis)
            return false;
          expl_run[e][r] = vis ? VIS : INVIS;
        }
      }
    }
    run_run.assign(runs.size(), std::vector<uint8_t>(runs.size(), 0));
    for (size_t a = 0; a < runs.size(); ++a) {
      for (size_t b = 0; b < runs.size(); ++b) {
        if (a == b) {
          run_run[a][b] = 1;  // adjacent pair inside the run
          continue;
        }
        if (runs[a].line == runs[b].line) {
          run_run[a][b] = 0;
          continue;
        }
        int ra = runs[a].interior[runs[a].interior.size() / 2];
        int rb = runs[b].interior[runs[b].interior.size() / 2];
        bool vis = g.visible(ra, rb);
        if (g.visible(runs[a].interior.front(), rb) != vis ||
            g.visible(runs[a].interior.back(), rb) != vis)
          return false;
        run_run[a][b] = vis ? 1 : 0;
      }
    }
    return true;
  }
};

struct QuotientSearch {
  const QuotientModel& model;
  Budget& budget;

  // group in quotient form
  struct Shape {
    std::vector<int> expl;                      // positions into explicit_ids
    std::vector<std::pair<int, int>> classes;   // (run id, take 1|2)
    std::vector<std::pair<int, int>> pins;      // (run id, PIN_LEFT|PIN_RIGHT)
  };

  std::vector<uint8_t> assigned;
  std::vector<long> remaining;  // per run
  std::vector<uint8_t> left_pin_used, right_pin_used;
  std::vector<Shape> chosen;
  std::map<std::vector<long>, int> terminal_memo;
  std::vector<std::vector<std::pair<int, int>>> terminal_types;  // per type: (run, take)

  QuotientSearch(const QuotientModel& m, Budget& b) : model(m), budget(b) {
    assigned.assign(model.explicit_ids.size(), 0);
    remaining.resize(model.runs.size());
    for (size_t r = 0; r < model.runs.size(); ++r)
      remaining[r] = static_cast<long>(model.runs[r].interior.size());
    left_pin_used.assign(model.runs.size(), 0);
    right_pin_used.assign(model.runs.size(), 0);
    build_terminal_types();
  }

  void build_terminal_types() {
    int R = static_cast<int>(model.runs.size());
    std::vector<std::pair<int, int>> current;
    auto rec = [&](auto&& self, int r, int left) -> void {
      if (left == 0) {
        terminal_types.push_back(current);
        return;
      }
      if (r >= R) return;
      self(self, r + 1, left);  // take 0
      for (int take = 1; take <= 2 && take <= left; ++take) {
        bool ok = true;
        for (auto& [pr, pt] : current)
          if (!model.run_run[pr][r]) ok = false;
        if (!ok) break;
        current.emplace_back(r, take);
        self(self, r + 1, left - take);
        current.pop_back();
      }
    };
    rec(rec, 0, model.k);
  }

  bool terminal_feasible(std::vector<long> counts) {
    auto it = terminal_memo.find(counts);
    if (it != terminal_memo.end()) return it->second;
    if (std::all_of(counts.begin(), counts.end(), [](long c) { return c == 0; })) {
      terminal_memo[counts] = 1;
      return true;
    }
    if (!budget.tick()) return false;  // not memoized: result unknown
    bool result = false;
    for (const auto& type : terminal_types) {
      bool ok = true;
      std::vector<long> next = counts;
      for (auto& [r, take] : type) {
        if (next[r] < take) {
          ok = false;
          break;
        }
        next[r] -= take;
      }
      if (!ok) continue;
      if (terminal_feasible(next)) {
        result = true;
        break;
      }
    }
    if (budget.exhausted && !result) return false;
    terminal_memo[counts] = result ? 1 : 0;
    return result;
  }

  // reconstruct a concrete type sequence for the terminal counts
  bool terminal_reconstruct(std::vector<long> counts,
                            std::vector<std::vector<std::pair<int, int>>>& out) {
    if (std::all_of(counts.begin(), counts.end(), [](long c) { return c == 0; }))
      return true;
    for (const auto& type : terminal_types) {
      std::vector<long> next = counts;
      bool ok = true;
      for (auto& [r, take] : type) {
        if (next[r] < take) {
          ok = false;
          break;
        }
        next[r] -= take;
      }
      if (!ok) continue;
      if (!terminal_feasible(next)) continue;
      out.push_back(type);
      return terminal_reconstruct(next, out);
    }
    return false;
  }

  bool solve() {
    if (!budget.tick()) return false;
    int anchor = -1;
    for (size_t e = 0; e < assigned.size(); ++e)
      if (!assigned[e]) {
        anchor = static_cast<int>(e);
        break;
      }
    if (anchor < 0) return terminal_feasible(remaining);

    // enumerate shapes containing `anchor`: a mutually visible explicit
    // subset plus class slots
    std::vector<int> expl_cands;
    for (size_t e = anchor + 1; e < assigned.size(); ++e)
      if (!assigned[e] &&
          model.g.visible(model.explicit_ids[anchor], model.explicit_ids[e]))
        expl_cands.push_back(static_cast<int>(e));

    std::vector<int> members = {anchor};
    return try_explicit(members, expl_cands, 0);
  }

  bool try_explicit(std::vector<int>& members, const std::vector<int>& cands,
                    size_t from) {
    if (budget.exhausted) return false;
    int slots = model.k - static_cast<int>(members.size());
    if (slots >= 0 && fill_classes(members, slots)) return true;
    if (slots <= 0) return false;
    for (size_t i = from; i < cands.size(); ++i) {
      int e = cands[i];
      bool ok = true;
      for (int m : members)
        if (!model.g.visible(model.explicit_ids[m], model.explicit_ids[e])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (!budget.tick()) return false;
      members.push_back(e);
      if (try_explicit(members, cands, i + 1)) return true;
      members.pop_back();
      if (budget.exhausted) return false;
    }
    return false;
  }

  bool fill_classes(std::vector<int>& members, int slots) {
    // class slots: multiset over runs compatible with all chosen explicit
    // points; same-line pins allowed once per run end
    std::vector<std::pair<int, int>> taken;  // (run, take) generic
    std::vector<std::pair<int, int>> pins;   // (run, rel)
    auto rec = [&](auto&& self, int r, int left) -> bool {
      if (budget.exhausted) return false;
      if (left == 0) return commit(members, taken, pins);
      if (r >= static_cast<int>(model.runs.size())) return false;
      // option: skip run r
      if (self(self, r + 1, left)) return true;
      // compatibility of run r with chosen explicit members and taken runs
      bool vis_ok = true;
      bool pin_left = false, pin_right = false;
      for (int m : members) {
        QuotientModel::Rel rel = model.expl_run[m][r];
        if (rel == QuotientModel::VIS) continue;
        if (rel == QuotientModel::PIN_LEFT && !pin_left && !left_pin_used[r]) {
          pin_left = true;
          continue;
        }
        if (rel == QuotientModel::PIN_RIGHT && !pin_right && !right_pin_used[r]) {
          pin_right = true;
          continue;
        }
        vis_ok = false;
        break;
      }
      if (!vis_ok) return false;
      for (auto& [pr, pt] : taken)
        if (!model.run_run[pr][r]) return false;
      if (pin_left || pin_right) {
        // a boundary member sees exactly one interior point of its run, so a
        // pinned run contributes that single end point (two ends in one
        // group would give three collinear points)
        if (pin_left && pin_right) return false;
        if (remaining[r] < 1 || left < 1) return false;
        remaining[r] -= 1;
        if (pin_left) left_pin_used[r] = 1;
        if (pin_right) right_pin_used[r] = 1;
        pins.emplace_back(r, pin_left ? QuotientModel::PIN_LEFT
                                      : QuotientModel::PIN_RIGHT);
        if (self(self, r + 1, left - 1)) return true;
        pins.pop_back();
        if (pin_left) left_pin_used[r] = 0;
        if (pin_right) right_pin_used[r] = 0;
        remaining[r] += 1;
        if (budget.exhausted) return false;
        return false;
      }
      for (int take = 1; take <= std::min(left, 2); ++take) {
        if (remaining[r] < take) break;
        remaining[r] -= take;
        taken.emplace_back(r, take);
        if (self(self, r + 1, left - take)) return true;
        taken.pop_back();
        remaining[r] += take;
        if (budget.exhausted) return false;
      }
      return false;
    };
    return rec(rec, 0, slots);
  }

  bool commit(std::vector<int>& members, std::vector<std::pair<int, int>>& taken,
              std::vector<std::pair<int, int>>& pins) {
    Shape shape;
    shape.expl = members;
    shape.classes = taken;
    shape.pins = pins;
    for (int m : members) assigned[m] = 1;
    chosen.push_back(shape);
    bool good = solve();
    if (good) return true;
    chosen.pop_back();
    for (int m : members) assigned[m] = 0;
    return false;
  }

  // turn quotient shapes into concrete groups; pins claim their run end
  // first, generic consumption then walks inward from the right
  std::vector<std::vector<int>> materialize() {
    std::vector<std::vector<int>> groups;
    std::vector<long> left_at(model.runs.size(), 0);
    std::vector<long> right_at(model.runs.size());
    for (size_t r = 0; r < model.runs.size(); ++r)
      right_at[r] = static_cast<long>(model.runs[r].interior.size()) - 1;

    // reserve pinned ends (a boundary point only sees its run's end point)
    std::map<std::pair<size_t, int>, int> pin_point;  // (shape idx, run) -> id
    for (size_t s = 0; s < chosen.size(); ++s) {
      for (auto& [r, rel] : chosen[s].pins) {
        int id = rel == QuotientModel::PIN_LEFT
                     ? model.runs[r].interior[left_at[r]++]
                     : model.runs[r].interior[right_at[r]--];
        pin_point[{s, r}] = id;
      }
    }

    auto take_generic = [&](int r, int count) {
      std::vector<int> out;
      for (int t = 0; t < count; ++t)
        out.push_back(model.runs[r].interior[right_at[r]--]);
      return out;
    };

    for (size_t s = 0; s < chosen.size(); ++s) {
      const auto& shape = chosen[s];
      std::vector<int> group;
      for (int m : shape.expl) group.push_back(model.explicit_ids[m]);
      for (auto& [r, rel] : shape.pins) group.push_back(pin_point.at({s, r}));
      for (auto& [r, take] : shape.classes) {
        auto pts = take_generic(r, take);
        group.insert(group.end(), pts.begin(), pts.end());
      }
      groups.push_back(group);
    }
    // terminal groups from the remaining counts
    std::vector<long> counts(model.runs.size());
    for (size_t r = 0; r < model.runs.size(); ++r)
      counts[r] = right_at[r] - left_at[r] + 1;
    std::vector<std::vector<std::pair<int, int>>> types;
    if (!terminal_reconstruct(counts, types))
      throw std::logic_error("clique oracle: terminal reconstruction failed");
    for (const auto& type : types) {
      std::vector<int> group;
      for (auto& [r, take] : type) {
        auto pts = take_generic(r, take);
        group.insert(group.end(), pts.begin(), pts.end());
      }
      groups.push_back(group);
    }
    return groups;
  }
};

}  // namespace

CliqueOracleResult brute_force_clique_partition(const PointSet& ps, int k,
                                                const OracleBudget& budget) {
  if (k < 3) throw std::invalid_argument("clique oracle: k must be >= 3");
  if (ps.size() % k != 0)
    throw std::invalid_argument("clique oracle: size not divisible by k");
  VisibilityGraph g = build_pvg(ps);
  Budget b{budget.max_nodes};

  QuotientModel model(ps, g, k);
  bool quotient_ok = ps.size() > 36 && model.build();
  if (quotient_ok) {
    QuotientSearch search(model, b);
    bool found = search.solve();
    if (b.exhausted) return {OracleStatus::Exhausted, std::nullopt};
    if (!found) return {OracleStatus::None, std::nullopt};
    auto groups = search.materialize();
    for (const auto& grp : groups) {
      if (static_cast<int>(grp.size()) != k)
        throw std::logic_error("clique oracle: bad group size after quotient");
      for (size_t i = 0; i < grp.size(); ++i)
        for (size_t j = i + 1; j < grp.size(); ++j)
          if (!g.visible(grp[i], grp[j]))
            throw std::logic_error("clique oracle: quotient group not a clique");
    }
    return {OracleStatus::Found, groups};
  }

  if (ps.size() > budget.max_points) return {OracleStatus::Exhausted, std::nullopt};
  PlainCliqueSearch search(ps, g, k, b);
  if (!search.capacity_ok()) return {OracleStatus::None, std::nullopt};
  bool found = search.solve();
  if (b.exhausted) return {OracleStatus::Exhausted, std::nullopt};
  if (!found) return {OracleStatus::None, std::nullopt};
  std::reverse(search.groups.begin(), search.groups.end());
  return {OracleStatus::Found, search.groups};
}

}  // namespace polypart
