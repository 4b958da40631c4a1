#include "polypart/io.hpp"

#include <fstream>
#include <sstream>

namespace polypart {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

PointSet read_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ss(t);
    std::string xs, ys, extra;
    if (!(ss >> xs >> ys) || (ss >> extra))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected exactly two coordinates");
    auto x = parse_rational(xs);
    auto y = parse_rational(ys);
    if (!x || !y)
      throw ParseError("line " + std::to_string(lineno) + ": bad coordinate");
    pts.push_back(Point{*x, *y});
  }
  if (pts.empty()) throw ParseError("point file contains no points");
  try {
    return PointSet::from(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_points(in);
}

std::string write_points(const PointSet& ps) {
  std::ostringstream out;
  for (int i = 0; i < ps.size(); ++i) {
    const Rational& x = ps[i].x;
    const Rational& y = ps[i].y;
    auto fmt = [](const Rational& q) {
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    };
    out << fmt(x) << " " << fmt(y) << "\n";
  }
  return out.str();
}

Formula read_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  int vars = -1, clauses_expected = -1;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == 'c' || t[0] == '%') continue;
    if (t[0] == 'p') {
      std::istringstream ss(t);
      std::string p, fmt;
      if (!(ss >> p >> fmt >> vars >> clauses_expected) || fmt != "cnf")
        throw ParseError("line " + std::to_string(lineno) + ": bad problem line");
      continue;
    }
    std::istringstream ss(t);
    int lit;
    while (ss >> lit) {
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
    if (!ss.eof())
      throw ParseError("line " + std::to_string(lineno) + ": bad literal");
  }
  if (!current.empty()) clauses.push_back(current);
  if (vars < 0) throw ParseError("missing DIMACS problem line");
  try {
    return Formula::from(vars, std::move(clauses));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Formula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_dimacs(in);
}

std::string write_partition(const CyclePartition& cp) {
  std::ostringstream out;
  out << "# spec";
  for (int s : cp.spec.sizes) out << " " << s;
  out << "\n";
  for (const auto& poly : cp.polygons) {
    for (size_t i = 0; i < poly.indices.size(); ++i)
      out << (i ? " " : "") << poly.indices[i];
    out << "\n";
  }
  return out.str();
}

CyclePartition read_partition(std::istream& in) {
  CyclePartition cp;
  std::string line;
  int lineno = 0;
  std::vector<int> sizes;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') continue;
    std::istringstream ss(t);
    Polygon poly;
    int idx;
    while (ss >> idx) poly.indices.push_back(idx);
    if (!ss.eof())
      throw ParseError("line " + std::to_string(lineno) + ": bad index");
    if (poly.indices.size() < 3)
      throw ParseError("line " + std::to_string(lineno) + ": polygon too small");
    sizes.push_back(poly.size());
    cp.polygons.push_back(std::move(poly));
  }
  if (cp.polygons.empty()) throw ParseError("partition file contains no polygons");
  cp.spec = PartitionSpec::from(sizes);
  return cp;
}

std::string write_roles(const Gadget& g) {
  std::ostringstream out;
  out << "# index role [var sign clause]\n";
  // occurrence lookup per point
  std::map<int, std::vector<const OccurrenceBinding*>> at;
  for (const auto& b : g.bindings) {
    at[b.pair[0]].push_back(&b);
    at[b.pair[1]].push_back(&b);
  }
  for (int i = 0; i < g.points.size(); ++i) {
    out << i << " " << role_name(g.roles[i]);
    auto it = at.find(i);
    if (it != at.end()) {
      for (const auto* b : it->second)
        out << " " << b->var << (b->positive ? " + " : " - ") << b->clause;
    }
    out << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace polypart
