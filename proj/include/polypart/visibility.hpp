// Point visibility graphs, collinear-run statistics and independent-set
// machinery. The PVG builder has an OpenMP-parallel kernel and a naive
// serial reference used by tests and the benchmark.
#ifndef POLYPART_VISIBILITY_HPP
#define POLYPART_VISIBILITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polypart/geom.hpp"

namespace polypart {

struct VisibilityGraph {
  int n = 0;
  std::vector<uint8_t> adj;       // n*n, symmetric, diagonal false
  std::vector<int32_t> blocker;   // n*n, witness index for invisible pairs, -1 otherwise

  bool visible(int i, int j) const { return adj[i * n + j] != 0; }
  int blocker_witness(int i, int j) const { return blocker[i * n + j]; }
  int degree(int v) const;
  int edge_count() const;
  std::vector<int> neighbors(int v) const;
};

// Exact visibility relation; pairwise blocker scan over x-sorted candidates,
// parallelized over point pairs.
VisibilityGraph build_pvg(const PointSet& ps);

// Naive all-pairs all-blockers triple loop. Reference implementation; kept
// serial on purpose.
VisibilityGraph build_pvg_serial(const PointSet& ps);

// Maximal collinear subset of >= 2 points on one canonical line, members in
// line order.
struct LineGroup {
  LineKey line;
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
};

// Every maximal collinear subset of size >= 2; each point pair lies in
// exactly one group. Groups sorted by line key for determinism.
std::vector<LineGroup> line_groups(const PointSet& ps);

// Size of the largest collinear subset (0 or 1 for tiny sets, no group then).
std::pair<int, std::optional<LineGroup>> max_collinear(const PointSet& ps);

struct IndependentSet {
  int size = 0;
  std::vector<int> witness;
};

// Maximum independent set over the two structured shapes a maximum
// independent set can take: a single collinear run (alternation) or the
// points on two hull-edge-supporting lines (exact search on that subset
// under the full set's visibility relation).
IndependentSet max_independent_structured(const PointSet& ps);

// Exact maximum independent set of an induced subset of a visibility graph,
// by branch and bound. Returns witness in original indices.
IndependentSet max_independent_subset(const VisibilityGraph& g,
                                      const std::vector<int>& subset);

// Longest induced path with at most k vertices (depth-first search with
// adjacency-closure pruning, early exit once k is reached). Intended for
// small graphs. Throws if k < 1.
std::pair<int, std::vector<int>> longest_induced_path_atmost(
    const VisibilityGraph& g, int k);

}  // namespace polypart

#endif
