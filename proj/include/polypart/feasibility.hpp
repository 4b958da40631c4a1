// Partitionability decisions with certificates for both outcomes.
#ifndef POLYPART_FEASIBILITY_HPP
#define POLYPART_FEASIBILITY_HPP

#include <optional>
#include <vector>

#include "polypart/visibility.hpp"

namespace polypart {

// Multiset of requested polygon sizes, each >= 3.
struct PartitionSpec {
  std::vector<int> sizes;

  static PartitionSpec from(std::vector<int> sizes);  // validates >= 3
  int total() const;
  int count() const { return static_cast<int>(sizes.size()); }
  bool all_triangles() const;
  // NC' bound: sum of sizes minus number of cycles.
  int collinear_bound() const { return total() - count(); }
};

struct FeasibilityVerdict {
  bool feasible = false;
  // exactly one certificate is set on infeasible verdicts
  std::optional<std::vector<int>> independent_witness;
  std::optional<LineGroup> collinear_witness;
};

// Triangle partition feasibility: a 3n-point set is partitionable iff it has
// no independent set of n+1 points; the structured search is exact for that
// question. Throws unless |ps| is a positive multiple of 3.
FeasibilityVerdict check_triangle_feasible(const PointSet& ps);

// General-spec feasibility. All-triangle specs route through the independent
// set condition; otherwise NC' (at most total-l collinear) decides. Throws on
// size mismatch.
FeasibilityVerdict check_cycle_feasible(const PointSet& ps,
                                        const PartitionSpec& spec);

}  // namespace polypart

#endif
