// Disjoint cycle partitions for general size specs: hull peeling, the
// big-line procedure and the non-crossing matching.
#ifndef POLYPART_CYCLE_PARTITION_HPP
#define POLYPART_CYCLE_PARTITION_HPP

#include <utility>
#include <vector>

#include "polypart/triangle_partition.hpp"

namespace polypart {

struct Polygon {
  std::vector<int> indices;  // cycle order

  int size() const { return static_cast<int>(indices.size()); }
};

struct CyclePartition {
  std::vector<Polygon> polygons;
  PartitionSpec spec;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;
};

// Raised when a separated cycle's points end up collinear; callers retry
// with the next seed vertex.
struct SeparationDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Perfect non-crossing matching by iterated hull-vertex pairing.
Matching noncrossing_matching(const PointSet& ps);

// Simple polygon over the given members: angular order around the
// lowest-then-leftmost member, ties by distance (nearer first, except the
// final ray which is walked outside-in). Throws SeparationDegenerate if all
// members are collinear.
Polygon star_polygon(const PointSet& ps, std::vector<int> members);

struct Separation {
  Polygon cycle;
  std::vector<int> remainder;
};

// Separates an L-cycle whose hull is disjoint from the remainder's hull.
// seed_offset picks the seed vertex (CCW from the lowest-then-leftmost hull
// vertex); callers advance it on SeparationDegenerate.
Separation separate_cycle(const PointSet& ps, int L, int seed_offset = 0);

// The big-line procedure: lambda holds between total - L_small - l + 2 and
// total - l points; blocks of consecutive line points get one off-line apex
// each by the empty-triangle leftmost-ray rule, the leftover forms the last
// cycle, with the two ray-rotation repairs.
CyclePartition bigline_partition(const PointSet& ps, const PartitionSpec& spec,
                                 const LineGroup& lambda);

// Full driver: peel ascending sizes while the residual satisfies NC';
// mandatory dispatch to bigline_partition at the first violation. All-3
// specs route through the triangle module.
CyclePartition partition_cycles(const PointSet& ps, const PartitionSpec& spec);

// Polygon invariants, spec multiset match, index coverage and pairwise hull
// disjointness; exact.
VerifyResult verify_cycles(const PointSet& ps, const CyclePartition& cp);

// Simple-polygon test on an index cycle (shared-vertex-free, proper edges,
// not all collinear, no vertex interior to another edge).
VerifyResult polygon_simple(const PointSet& ps, const Polygon& poly);

}  // namespace polypart

#endif
