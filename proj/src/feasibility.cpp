#include "polypart/feasibility.hpp"

#include <algorithm>
#include <numeric>

namespace polypart {

PartitionSpec PartitionSpec::from(std::vector<int> sizes) {
  if (sizes.empty())
    throw std::invalid_argument("partition spec needs at least one size");
  for (int s : sizes)
    if (s < 3) throw std::invalid_argument("partition spec sizes must be >= 3");
  std::sort(sizes.begin(), sizes.end());
  return PartitionSpec{std::move(sizes)};
}

int PartitionSpec::total() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

bool PartitionSpec::all_triangles() const {
  return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 3; });
}

FeasibilityVerdict check_triangle_feasible(const PointSet& ps) {
  if (ps.size() < 3 || ps.size() % 3 != 0)
    throw std::invalid_argument(
        "check_triangle_feasible: size must be a positive multiple of 3");
  int n = ps.size() / 3;
  IndependentSet found = max_independent_structured(ps);
  FeasibilityVerdict v;
  if (found.size <= n) {
    v.feasible = true;
  } else {
    v.feasible = false;
    // trim the witness to exactly n+1 points
    found.witness.resize(n + 1);
    v.independent_witness = found.witness;
  }
  return v;
}

FeasibilityVerdict check_cycle_feasible(const PointSet& ps,
                                        const PartitionSpec& spec) {
  if (ps.size() != spec.total())
    throw std::invalid_argument(
        "check_cycle_feasible: point count does not match spec total");
  if (spec.all_triangles()) return check_triangle_feasible(ps);
  auto [count, group] = max_collinear(ps);
  FeasibilityVerdict v;
  if (count <= spec.collinear_bound()) {
    v.feasible = true;
  } else {
    v.feasible = false;
    v.collinear_witness = group;
  }
  return v;
}

}  // namespace polypart
