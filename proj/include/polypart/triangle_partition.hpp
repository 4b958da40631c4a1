// Disjoint triangle partition construction: recursive hull-vertex removal
// with the two collinear-heavy repair procedures.
#ifndef POLYPART_TRIANGLE_PARTITION_HPP
#define POLYPART_TRIANGLE_PARTITION_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "polypart/feasibility.hpp"

namespace polypart {

struct Triangle {
  std::array<int, 3> indices;
};

struct TrianglePartition {
  std::vector<Triangle> triangles;
};

struct VerifyResult {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Raised when a constructive routine is handed an infeasible input; carries
// the re-checkable certificate.
struct InfeasibleError : std::runtime_error {
  FeasibilityVerdict verdict;

  InfeasibleError(const std::string& msg, FeasibilityVerdict v)
      : std::runtime_error(msg), verdict(std::move(v)) {}
};

// Counters exposed for the polynomial-behavior tests.
struct TriangleStats {
  int steps = 0;
  int repair_collinear_calls = 0;
  int repair_two_lines_calls = 0;
  long long candidate_checks = 0;
};

// Constructs a disjoint triangle partition of a feasible 3n-point set.
// Throws InfeasibleError when check_triangle_feasible rejects the input.
TrianglePartition partition_triangles(const PointSet& ps,
                                      TriangleStats* stats = nullptr);

// Repair case: an independent set of n points sits on one line carrying
// 2n-1 or 2n of the 3n points. Consumes the whole set segment by segment
// with maximum-angle apex selection.
TrianglePartition repair_collinear_line(const PointSet& ps,
                                        const LineGroup& lambda);

// Repair case: the near-violation witness sits on two hull-edge lines;
// re-selects the removed triple from the other end of the lines and recurses.
TrianglePartition repair_two_lines(const PointSet& ps, const LineGroup& l1,
                                   const LineGroup& l2,
                                   TriangleStats* stats = nullptr);

// Coverage, disjoint index sets, non-degeneracy and pairwise hull
// disjointness, all exact.
VerifyResult verify_partition(const PointSet& ps, const TrianglePartition& tp);

// Exact convex-hull disjointness of two index subsets.
bool hulls_disjoint(const PointSet& ps, const std::vector<int>& a,
                    const std::vector<int>& b);

// Fast-path helpers: hull vertex list (CCW, 1 or 2 entries when degenerate)
// and exact disjointness of two such hulls.
std::vector<Point> hull_points(const PointSet& ps, const std::vector<int>& idx);
bool convex_hulls_disjoint(const std::vector<Point>& ha,
                           const std::vector<Point>& hb);

}  // namespace polypart

#endif
