#include "polypart/visibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polypart {

int VisibilityGraph::degree(int v) const {
  int d = 0;
  for (int j = 0; j < n; ++j) d += adj[v * n + j];
  return d;
}

int VisibilityGraph::edge_count() const {
  int e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e += adj[i * n + j];
  return e;
}

std::vector<int> VisibilityGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (adj[v * n + j]) out.push_back(j);
  return out;
}

namespace {

// Scaled integer coordinates: X[i]/D, Y[i]/D equal the rational input.
// All predicates below run on integers, avoiding per-op gcd normalization.
// When every scaled coordinate fits well below 2^62 the predicates run on
// __int128 (cross products stay below 2^126), which is exact.
struct ScaledPoints {
  std::vector<BigInt> x;
  std::vector<BigInt> y;
  std::vector<__int128> xi;
  std::vector<__int128> yi;
  bool small = false;

  explicit ScaledPoints(const PointSet& ps) {
    int n = ps.size();
    BigInt den = 1;
    for (int i = 0; i < n; ++i)
      den = lcm(lcm(den, ps[i].x.get_den()), ps[i].y.get_den());
    x.resize(n);
    y.resize(n);
    for (int i = 0; i < n; ++i) {
      x[i] = ps[i].x.get_num() * (den / ps[i].x.get_den());
      y[i] = ps[i].y.get_num() * (den / ps[i].y.get_den());
    }
    small = true;
    for (int i = 0; i < n && small; ++i) {
      if (mpz_sizeinbase(x[i].get_mpz_t(), 2) > 60 ||
          mpz_sizeinbase(y[i].get_mpz_t(), 2) > 60)
        small = false;
    }
    if (small) {
      xi.resize(n);
      yi.resize(n);
      for (int i = 0; i < n; ++i) {
        xi[i] = static_cast<__int128>(x[i].get_si());
        yi[i] = static_cast<__int128>(y[i].get_si());
      }
    }
  }

  bool strictly_between(int k, int i, int j) const {
    if (small) {
      __int128 cross =
          (xi[j] - xi[i]) * (yi[k] - yi[i]) - (yi[j] - yi[i]) * (xi[k] - xi[i]);
      if (cross != 0) return false;
      __int128 dot =
          (xi[k] - xi[i]) * (xi[k] - xi[j]) + (yi[k] - yi[i]) * (yi[k] - yi[j]);
      return dot < 0;
    }
    BigInt cross = (x[j] - x[i]) * (y[k] - y[i]) - (y[j] - y[i]) * (x[k] - x[i]);
    if (cross != 0) return false;
    BigInt dot = (x[k] - x[i]) * (x[k] - x[j]) + (y[k] - y[i]) * (y[k] - y[j]);
    return dot < 0;
  }

  bool lex_less(int i, int j) const {
    if (small)
      return xi[i] < xi[j] || (xi[i] == xi[j] && yi[i] < yi[j]);
    int c = cmp(x[i], x[j]);
    if (c != 0) return c < 0;
    return y[i] < y[j];
  }
};

}  // namespace

VisibilityGraph build_pvg(const PointSet& ps) {
  if (ps.empty()) throw std::invalid_argument("build_pvg: empty point set");
  int n = ps.size();
  VisibilityGraph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n) * n, 0);
  g.blocker.assign(static_cast<size_t>(n) * n, -1);

  ScaledPoints sp(ps);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sp.lex_less(a, b); });

  // pairs indexed by positions in lex order; a blocker lies lex-strictly
  // between its endpoints, so only candidates in (pi, pj) need scanning
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int pi = 0; pi < n; ++pi)
    for (int pj = pi + 1; pj < n; ++pj) pairs.emplace_back(pi, pj);

#pragma omp parallel for schedule(dynamic, 64)
  for (long long t = 0; t < static_cast<long long>(pairs.size()); ++t) {
    auto [pi, pj] = pairs[t];
    int i = order[pi], j = order[pj];
    int witness = -1;
    for (int pk = pi + 1; pk < pj; ++pk) {
      int k = order[pk];
      if (sp.strictly_between(k, i, j)) {
        witness = k;
        break;
      }
    }
    if (witness < 0) {
      g.adj[i * n + j] = g.adj[j * n + i] = 1;
    } else {
      g.blocker[i * n + j] = g.blocker[j * n + i] = witness;
    }
  }
  return g;
}

VisibilityGraph build_pvg_serial(const PointSet& ps) {
  if (ps.empty()) throw std::invalid_argument("build_pvg: empty point set");
  int n = ps.size();
  VisibilityGraph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n) * n, 0);
  g.blocker.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int witness = -1;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (strictly_between(ps[k], ps[i], ps[j])) {
          if (witness < 0 || k < witness) witness = k;
        }
      }
      if (witness < 0) {
        g.adj[i * n + j] = g.adj[j * n + i] = 1;
      } else {
        g.blocker[i * n + j] = g.blocker[j * n + i] = witness;
      }
    }
  }
  return g;
}

std::vector<LineGroup> line_groups(const PointSet& ps) {
  std::map<LineKey, std::vector<int>> groups;
  int n = ps.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      LineKey key = line_through(ps[i], ps[j]);
      auto& mem = groups[key];
      if (mem.empty()) {
        // first pair on this line: collect every member once
        for (int k = 0; k < n; ++k)
          if (k == i || k == j || line_side(key, ps[k]) == 0) mem.push_back(k);
        std::sort(mem.begin(), mem.end(),
                  [&](int a, int b) { return lex_less(ps[a], ps[b]); });
      }
    }
  }
  std::vector<LineGroup> out;
  out.reserve(groups.size());
  for (auto& [key, mem] : groups) out.push_back(LineGroup{key, std::move(mem)});
  return out;
}

std::pair<int, std::optional<LineGroup>> max_collinear(const PointSet& ps) {
  if (ps.size() <= 1) return {ps.size(), std::nullopt};
  auto groups = line_groups(ps);
  const LineGroup* best = nullptr;
  for (const auto& g : groups)
    if (!best || g.size() > best->size()) best = &g;
  return {best->size(), *best};
}

IndependentSet max_independent_subset(const VisibilityGraph& g,
                                      const std::vector<int>& subset) {
  // branch and bound on the induced subgraph, greedy max-degree branching
  int m = static_cast<int>(subset.size());
  std::vector<uint8_t> sub_adj(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      sub_adj[a * m + b] = g.visible(subset[a], subset[b]) ? 1 : 0;

  std::vector<int> best;
  std::vector<int> current;
  std::vector<int> live(m);
  std::iota(live.begin(), live.end(), 0);

  auto recurse = [&](auto&& self, std::vector<int>& cand) -> void {
    if (current.size() + cand.size() <= best.size()) return;
    if (cand.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // pick the candidate with max degree inside cand; branching on it first
    int pick = -1, pick_deg = -1;
    for (int v : cand) {
      int d = 0;
      for (int u : cand)
        if (sub_adj[v * m + u]) ++d;
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    // include pick
    std::vector<int> next;
    for (int u : cand)
      if (u != pick && !sub_adj[pick * m + u]) next.push_back(u);
    current.push_back(pick);
    self(self, next);
    current.pop_back();
    // exclude pick
    std::vector<int> rest;
    for (int u : cand)
      if (u != pick) rest.push_back(u);
    self(self, rest);
  };
  recurse(recurse, live);

  IndependentSet out;
  out.size = static_cast<int>(best.size());
  for (int v : best) out.witness.push_back(subset[v]);
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

IndependentSet max_independent_structured(const PointSet& ps) {
  IndependentSet best;
  if (ps.size() == 0) return best;
  best.size = 1;
  best.witness = {0};
  if (ps.size() == 1) return best;

  auto groups = line_groups(ps);
  // single collinear run: alternating members, ceil(m/2)
  for (const auto& g : groups) {
    int take = (g.size() + 1) / 2;
    if (take > best.size) {
      best.size = take;
      best.witness.clear();
      for (int i = 0; i < g.size(); i += 2) best.witness.push_back(g.members[i]);
    }
  }

  // two hull-edge-supporting lines: exact search on the union subset
  Hull hull = convex_hull(ps);
  std::vector<LineKey> edge_lines;
  int hn = static_cast<int>(hull.vertices.size());
  if (hn >= 2) {
    int edges = hn == 2 ? 1 : hn;
    for (int e = 0; e < edges; ++e) {
      LineKey key = line_through(ps[hull.vertices[e]],
                                 ps[hull.vertices[(e + 1) % hn]]);
      if (std::find(edge_lines.begin(), edge_lines.end(), key) ==
          edge_lines.end())
        edge_lines.push_back(key);
    }
  }
  if (edge_lines.size() >= 2) {
    VisibilityGraph pvg = build_pvg(ps);
    std::map<LineKey, const LineGroup*> by_key;
    for (const auto& g : groups) by_key[g.line] = &g;
    for (size_t a = 0; a < edge_lines.size(); ++a) {
      for (size_t b = a + 1; b < edge_lines.size(); ++b) {
        std::vector<int> subset;
        auto add = [&](const LineKey& key) {
          auto it = by_key.find(key);
          if (it == by_key.end()) return;
          for (int v : it->second->members)
            if (std::find(subset.begin(), subset.end(), v) == subset.end())
              subset.push_back(v);
        };
        add(edge_lines[a]);
        add(edge_lines[b]);
        IndependentSet found = max_independent_subset(pvg, subset);
        if (found.size > best.size) best = found;
      }
    }
  }
  return best;
}

std::pair<int, std::vector<int>> longest_induced_path_atmost(
    const VisibilityGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("longest_induced_path_atmost: k < 1");
  int n = g.n;
  std::vector<int> best, path;
  // closed[v]: v is adjacent to some path vertex other than the last
  std::vector<int> closed(n, 0);
  std::vector<uint8_t> used(n, 0);

  auto dfs = [&](auto&& self, int last) -> bool {
    if (static_cast<int>(path.size()) > static_cast<int>(best.size()))
      best = path;
    if (static_cast<int>(best.size()) >= k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || !g.visible(last, v) || closed[v]) continue;
      used[v] = 1;
      path.push_back(v);
      std::vector<int> bumped;
      for (int u = 0; u < n; ++u) {
        if (u != v && g.visible(last, u)) {
          ++closed[u];
          bumped.push_back(u);
        }
      }
      bool done = self(self, v);
      for (int u : bumped) --closed[u];
      path.pop_back();
      used[v] = 0;
      if (done) return true;
    }
    return false;
  };

  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    if (dfs(dfs, s)) break;
    used[s] = 0;
  }
  return {static_cast<int>(best.size()), best};
}

}  // namespace polypart
