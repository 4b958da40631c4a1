// Deterministic SVG rendering of point sets, partitions and gadgets.
#ifndef POLYPART_SVG_HPP
#define POLYPART_SVG_HPP

#include <optional>
#include <string>

#include "polypart/cycle_partition.hpp"
#include "polypart/sat_gadget.hpp"

namespace polypart {

// Points as 3px circles; polygons filled at 30% opacity with distinct hues;
// viewBox fitted with a 5% margin. Coordinates rendered as decimal
// expansions truncated at 12 digits (display only).
std::string render_svg(const PointSet& ps,
                       const std::optional<CyclePartition>& cp);

// Role-colored gadget rendering (clause red, blocking gray, variable blue,
// extra green, padding black).
std::string render_svg_roles(const PointSet& ps, const std::vector<Role>& roles);

}  // namespace polypart

#endif
