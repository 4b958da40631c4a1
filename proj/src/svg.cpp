#include "polypart/svg.hpp"

#include <sstream>

namespace polypart {

namespace {

struct Box {
  Rational xmin, xmax, ymin, ymax;
};

Box bounds(const PointSet& ps) {
  Box b{ps[0].x, ps[0].x, ps[0].y, ps[0].y};
  for (int i = 1; i < ps.size(); ++i) {
    if (ps[i].x < b.xmin) b.xmin = ps[i].x;
    if (ps[i].x > b.xmax) b.xmax = ps[i].x;
    if (ps[i].y < b.ymin) b.ymin = ps[i].y;
    if (ps[i].y > b.ymax) b.ymax = ps[i].y;
  }
  return b;
}

// y is flipped so the drawing matches the usual math orientation
std::string coord(const Rational& v) { return decimal_string(v, 12); }

const char* kHues[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                       "#46f0f0", "#f032e6", "#bcf60c", "#008080", "#9a6324"};

std::string svg_header(const Box& b) {
  Rational w = b.xmax - b.xmin;
  Rational h = b.ymax - b.ymin;
  if (w == 0) w = 1;
  if (h == 0) h = 1;
  Rational mx = w / 20;
  Rational my = h / 20;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << coord(b.xmin - mx) << " " << coord(-(b.ymax + my)) << " "
      << coord(w + 2 * mx) << " " << coord(h + 2 * my) << "\">\n";
  return out.str();
}

}  // namespace

std::string render_svg(const PointSet& ps,
                       const std::optional<CyclePartition>& cp) {
  Box b = bounds(ps);
  Rational span = b.xmax - b.xmin;
  Rational yspan = b.ymax - b.ymin;
  if (yspan > span) span = yspan;
  if (span == 0) span = 1;
  Rational r = span / 100;

  std::ostringstream out;
  out << svg_header(b);
  if (cp) {
    int hue = 0;
    for (const auto& poly : cp->polygons) {
      out << "<polygon points=\"";
      for (size_t i = 0; i < poly.indices.size(); ++i) {
        const Point& p = ps[poly.indices[i]];
        out << (i ? " " : "") << coord(p.x) << "," << coord(-p.y);
      }
      out << "\" fill=\"" << kHues[hue % 10]
          << "\" fill-opacity=\"0.3\" stroke=\"" << kHues[hue % 10]
          << "\" stroke-width=\"" << coord(r / 2) << "\"/>\n";
      ++hue;
    }
  }
  for (int i = 0; i < ps.size(); ++i) {
    out << "<circle cx=\"" << coord(ps[i].x) << "\" cy=\"" << coord(-ps[i].y)
        << "\" r=\"" << coord(3 * r) << "\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg_roles(const PointSet& ps, const std::vector<Role>& roles) {
  Box b = bounds(ps);
  Rational span = b.xmax - b.xmin;
  Rational yspan = b.ymax - b.ymin;
  if (yspan > span) span = yspan;
  if (span == 0) span = 1;
  Rational r = span / 200;

  auto color = [](Role role) {
    switch (role) {
      case Role::Clause: return "#d62728";
      case Role::Blocking: return "#7f7f7f";
      case Role::Variable: return "#1f77b4";
      case Role::VariableBlocker: return "#9467bd";
      case Role::Extra: return "#2ca02c";
      case Role::Padding: return "#000000";
      case Role::AuxLine: return "#ff7f0e";
    }
    return "#000000";
  };

  std::ostringstream out;
  out << svg_header(b);
  for (int i = 0; i < ps.size(); ++i) {
    out << "<circle cx=\"" << coord(ps[i].x) << "\" cy=\"" << coord(-ps[i].y)
        << "\" r=\"" << coord(3 * r) << "\" fill=\"" << color(roles[i])
        << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polypart
