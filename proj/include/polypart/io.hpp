// Text formats: point files, DIMACS CNF, partition files, gadget role maps.
#ifndef POLYPART_IO_HPP
#define POLYPART_IO_HPP

#include <iosfwd>
#include <string>

#include "polypart/cycle_partition.hpp"
#include "polypart/sat_gadget.hpp"

namespace polypart {

// Raised on malformed input; message carries a line number.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One point per line "x y", coordinates decimal integers or "p/q" rationals;
// '#' starts a comment, blank lines ignored.
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);
std::string write_points(const PointSet& ps);

// DIMACS CNF.
Formula read_dimacs(std::istream& in);
Formula read_dimacs_file(const std::string& path);

// One polygon per line (indices in cycle order); '#' comments; the header
// echoes the spec sizes.
std::string write_partition(const CyclePartition& cp);
CyclePartition read_partition(std::istream& in);

// Gadget sidecar: "index role [var sign clause]" per line.
std::string write_roles(const Gadget& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace polypart

#endif
