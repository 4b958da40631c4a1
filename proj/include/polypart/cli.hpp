// Command dispatch shared by the polypart binary and the tests.
#ifndef POLYPART_CLI_HPP
#define POLYPART_CLI_HPP

#include <iosfwd>
#include <string>

#include "polypart/feasibility.hpp"

namespace polypart {

struct RunConfig {
  std::string subcommand;
  std::string input;         // point file or CNF path
  std::string spec;          // "3,4,5" or "triangles"
  std::string output;        // empty: stdout
  std::string aux_input;     // partition file (verify/render), roles file (render)
  std::string roles_output;  // gadget sidecar path
  long seed = 0;
  bool verify = false;
};

// Exit codes: 0 success/feasible, 2 infeasible/unsat, 3 input error,
// 4 internal audit failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// "3,3,4" or "triangles" (needs total divisible by 3).
PartitionSpec parse_spec(const std::string& text, int total_points);

}  // namespace polypart

#endif
