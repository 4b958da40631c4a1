// Exhaustive ground-truth solvers used by tests and acceptance: disjoint
// cycle partitions, clique partitions, maximum independent set, SAT.
#ifndef POLYPART_ORACLE_HPP
#define POLYPART_ORACLE_HPP

#include <optional>

#include "polypart/cycle_partition.hpp"
#include "polypart/sat_gadget.hpp"

namespace polypart {

struct OracleBudget {
  int max_points = 24;
  long long max_nodes = 50'000'000;
};

enum class OracleStatus { Found, None, Exhausted };

struct CycleOracleResult {
  OracleStatus status = OracleStatus::None;
  std::optional<CyclePartition> partition;
};

// Exhaustive search over index partitions into groups of the spec's sizes;
// a group is admissible when not all collinear (then a simple polygonization
// always exists) and group hulls stay pairwise disjoint.
CycleOracleResult brute_force_cycle_partition(const PointSet& ps,
                                              const PartitionSpec& spec,
                                              const OracleBudget& budget = {});

struct CliqueOracleResult {
  OracleStatus status = OracleStatus::None;
  std::optional<std::vector<std::vector<int>>> partition;
};

// Exhaustive search over partitions into k-sets of pairwise-visible points
// (visibility with respect to the whole set). Large instances with repeated
// line structure are solved exactly through a clone-quotient search; the
// plain backtracking handles everything else within budget.
CliqueOracleResult brute_force_clique_partition(const PointSet& ps, int k,
                                                const OracleBudget& budget = {});

struct MisOracleResult {
  OracleStatus status = OracleStatus::None;
  int size = 0;
  std::vector<int> witness;
};

// Exact maximum independent set of the PVG by branch and bound.
MisOracleResult brute_force_mis(const PointSet& ps, const OracleBudget& budget = {});

struct SatOracleResult {
  bool satisfiable = false;
  std::vector<bool> assignment;
};

// First satisfying assignment in lexicographic order (false < true, variable
// 1 most significant), or none. Throws when the formula has more than 24
// variables.
SatOracleResult brute_force_sat(const Formula& f);

}  // namespace polypart

#endif
