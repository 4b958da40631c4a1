// 3-occurrence SAT to K5-partition gadget compiler: formula normalization,
// parameter arithmetic, exact point placement with a perturbation audit,
// partition extraction in both directions, and the k >= 6 extensions.
#ifndef POLYPART_SAT_GADGET_HPP
#define POLYPART_SAT_GADGET_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "polypart/visibility.hpp"

namespace polypart {

// CNF with 1-based variables; literal +v / -v.
struct Formula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  static Formula from(int num_vars, std::vector<std::vector<int>> clauses);

  int clause_count() const { return static_cast<int>(clauses.size()); }
  // occurrence list per variable: (clause index, positive?)
  std::vector<std::vector<std::pair<int, bool>>> occurrences() const;
  int count_occurring(int times) const;  // variables with exactly `times` occurrences
  bool satisfies(const std::vector<bool>& assignment) const;
  // paper-shape invariants: every var 2..3 occurrences with both polarities,
  // consecutive clauses variable-disjoint, no duplicate/tautological clauses
  bool is_normalized(std::string* why = nullptr) const;
};

// Equisatisfiable normalized formula plus the certificate mapping
// assignments back to the original variable space.
struct NormalizedFormula {
  Formula formula;
  int original_vars = 0;
  // original var -> value forced during simplification (-1 if free)
  std::vector<int> forced;
  // original var -> variable id in `formula` (0 if eliminated)
  std::vector<int> image;
  std::vector<std::string> log;

  std::vector<bool> to_original(const std::vector<bool>& assignment) const;
};

// Rejects empty formulas and any variable occurring more than 3 times.
NormalizedFormula normalize_formula(const Formula& raw);

struct GadgetParams {
  long v = 0;    // variable-line points
  long b_n = 0;  // step (e)/(f) blockers
  long e = 0;    // extra-line points
  long b = 0;    // initial blocking-line points
  long c = 0;    // padding points on the clause-line
  int m = 0;
  int n = 0;
  int n1 = 0;
  int n2 = 0;
};

// The step-(a) closed forms, verbatim.
GadgetParams gadget_params(int n1, int n2, int m);
GadgetParams gadget_params(const Formula& f);

// Parameters the builder actually uses: the blocker count is derived from
// the placement rules (one blocker per cut sightline) and e, c follow from
// the exhaustion identities; b = m + e - 1 as in the paper.
GadgetParams gadget_params_as_built(const Formula& f);

enum class Role { Clause, Extra, Blocking, Variable, VariableBlocker, Padding, AuxLine };

const char* role_name(Role r);

// One literal occurrence: the two variable points that may join the
// occurrence's clause-point in a K5.
struct OccurrenceBinding {
  int var = 0;
  bool positive = true;
  int clause = 0;
  std::array<int, 2> pair{-1, -1};
};

struct Gadget {
  PointSet points;
  std::vector<Role> roles;
  std::vector<OccurrenceBinding> bindings;
  GadgetParams params;  // as built
  Formula formula;
  int k = 5;

  // role index lists in left-to-right order
  std::vector<int> clause_points;
  std::vector<int> extra_points;
  std::vector<int> blocking_points;
  std::vector<int> variable_line_points;  // occurrence points and blockers
  std::vector<int> padding_points;
  std::vector<int> aux_points;

  // allowed clause-points per variable-line point
  std::map<int, std::vector<int>> sees_clauses;
};

// Builds the k=5 gadget for a normalized formula. Placement is exact
// rational; every blocker cuts exactly one sightline (audited, with
// re-perturbation on collisions).
Gadget build_gadget(const Formula& normalized);

struct GadgetAudit {
  bool ok = true;
  std::vector<std::string> report;
  std::vector<std::string> failures;
};

// Structural audit: role counts vs params, 5y size, clause/extra
// invisibility, binding sightlines, blocker uniqueness, padding visibility,
// coordinate bit-length bound.
GadgetAudit audit_gadget(const Gadget& g);

// Documented coordinate-size bound: every numerator/denominator fits in
// coord_bit_bound(m, n) bits.
long coord_bit_bound(int m, int n);

struct PartialGrid {
  int p = 0;
  int q = 0;
  PointSet points;
  std::vector<int> top;
  std::vector<int> mid;
  std::vector<int> bottom;
};

// Minimum mid-row blocking the whole top/bottom visibility: p+q-1 points at
// consecutive half-integer positions. (The source lemma understates this
// count; p+q-1 is what completeness and minimality force, and it matches the
// blocking-line population b = m+e-1 used by the gadget.)
std::pair<int, PartialGrid> partial_grid_min_blockers(int p, int q);

// Canonical K5 partition from a satisfying assignment (leftmost-first
// exhaustion); throws on a non-satisfying assignment.
std::vector<std::vector<int>> build_partition_from_assignment(
    const Gadget& g, const std::vector<bool>& assignment);

// Satisfying assignment from a verified K5 partition; throws on malformed
// partitions (a clause-point grouped without its variable points).
std::vector<bool> extract_assignment(const Gadget& g,
                                     const std::vector<std::vector<int>>& partition);

// k >= 6: odd k adds (k-5)/2 auxiliary lines of 2y points; even k rebuilds
// with the unit-spaced blocking line (parity visibility) and then adds lines.
Gadget extend_gadget(const Gadget& g, int k);

// True iff points i and j of the set see each other (no third point on the
// open segment).
bool pair_visible(const PointSet& ps, int i, int j);

}  // namespace polypart

#endif
