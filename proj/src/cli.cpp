#include "polypart/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "polypart/io.hpp"
#include "polypart/oracle.hpp"
#include "polypart/svg.hpp"

namespace polypart {

PartitionSpec parse_spec(const std::string& text, int total_points) {
  if (text.empty()) throw ParseError("missing --spec");
  if (text == "triangles") {
    if (total_points % 3 != 0)
      throw ParseError("spec 'triangles' needs a point count divisible by 3");
    return PartitionSpec::from(std::vector<int>(total_points / 3, 3));
  }
  std::vector<int> sizes;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad spec entry '" + item + "'");
    }
  }
  try {
    return PartitionSpec::from(sizes);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

namespace {

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_text_file(cfg.output, text);
  }
}

int cmd_pvg(const RunConfig& cfg, std::ostream& out) {
  PointSet ps = read_points_file(cfg.input);
  VisibilityGraph g = build_pvg(ps);
  std::ostringstream text;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.visible(i, j)) text << i << " " << j << "\n";
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!g.visible(i, j))
        text << "# blocked " << i << " " << j << " by " << g.blocker_witness(i, j)
             << "\n";
  emit(cfg, out, text.str());
  return 0;
}

std::string verdict_text(const FeasibilityVerdict& v, const std::string& prefix) {
  std::ostringstream text;
  if (v.feasible) {
    text << prefix << "feasible\n";
  } else {
    text << prefix << "infeasible\n";
    if (v.independent_witness) {
      text << prefix << "certificate independent-set";
      for (int idx : *v.independent_witness) text << " " << idx;
      text << "\n";
    } else if (v.collinear_witness) {
      text << prefix << "certificate collinear";
      for (int idx : v.collinear_witness->members) text << " " << idx;
      text << "\n";
    }
  }
  return text.str();
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  PointSet ps = read_points_file(cfg.input);
  PartitionSpec spec = parse_spec(cfg.spec, ps.size());
  if (spec.total() != ps.size())
    throw ParseError("spec total " + std::to_string(spec.total()) +
                     " does not match point count " + std::to_string(ps.size()));
  FeasibilityVerdict v = check_cycle_feasible(ps, spec);
  emit(cfg, out, verdict_text(v, ""));
  return v.feasible ? 0 : 2;
}

int cmd_partition(const RunConfig& cfg, std::ostream& out) {
  PointSet ps = read_points_file(cfg.input);
  PartitionSpec spec = parse_spec(cfg.spec, ps.size());
  if (spec.total() != ps.size())
    throw ParseError("spec total does not match point count");
  try {
    CyclePartition cp = partition_cycles(ps, spec);
    VerifyResult check = verify_cycles(ps, cp);
    if (!check) throw std::logic_error("partition failed verification: " + check.reason);
    emit(cfg, out, write_partition(cp));
    return 0;
  } catch (const InfeasibleError& e) {
    emit(cfg, out, verdict_text(e.verdict, ""));
    return 2;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  PointSet ps = read_points_file(cfg.input);
  std::ifstream in(cfg.aux_input);
  if (!in) throw ParseError("cannot open " + cfg.aux_input);
  CyclePartition cp = read_partition(in);
  VerifyResult res = verify_cycles(ps, cp);
  std::ostringstream text;
  text << (res.ok ? "valid" : "invalid: " + res.reason) << "\n";
  emit(cfg, out, text.str());
  return res.ok ? 0 : 2;
}

int cmd_gadget(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Formula raw = read_dimacs_file(cfg.input);
  NormalizedFormula norm = normalize_formula(raw);
  Gadget g = build_gadget(norm.formula);
  std::ostringstream text;
  text << "# gadget k=5 points=" << g.points.size() << " m=" << g.params.m
       << " n=" << g.params.n << " v=" << g.params.v << " e=" << g.params.e
       << " b=" << g.params.b << " b_n=" << g.params.b_n << " c=" << g.params.c
       << "\n";
  text << write_points(g.points);
  emit(cfg, out, text.str());
  std::string roles_path = cfg.roles_output;
  if (roles_path.empty() && !cfg.output.empty()) roles_path = cfg.output + ".roles";
  if (!roles_path.empty()) write_text_file(roles_path, write_roles(g));
  if (cfg.verify) {
    GadgetAudit audit = audit_gadget(g);
    for (const auto& line : audit.report) err << line << "\n";
    if (!audit.ok) return 4;
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  PointSet ps = read_points_file(cfg.input);
  PartitionSpec spec = parse_spec(cfg.spec, ps.size());
  if (spec.total() != ps.size())
    throw ParseError("spec total does not match point count");
  OracleBudget budget;
  budget.max_points = 32;
  CycleOracleResult res = brute_force_cycle_partition(ps, spec, budget);
  std::ostringstream text;
  if (res.status == OracleStatus::Exhausted) {
    text << "oracle: exhausted\n";
    emit(cfg, out, text.str());
    return 4;
  }
  if (res.status == OracleStatus::None) {
    text << "oracle: infeasible\n";
    emit(cfg, out, text.str());
    return 2;
  }
  text << "oracle: feasible\n" << write_partition(*res.partition);
  emit(cfg, out, text.str());
  return 0;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  PointSet ps = read_points_file(cfg.input);
  std::string svg;
  if (!cfg.aux_input.empty() && cfg.aux_input.size() > 6 &&
      cfg.aux_input.substr(cfg.aux_input.size() - 6) == ".roles") {
    // role map: second column names the role
    std::istringstream in(read_text_file(cfg.aux_input));
    std::vector<Role> roles(ps.size(), Role::Padding);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ss(line);
      int idx;
      std::string name;
      if (!(ss >> idx >> name)) continue;
      Role r = Role::Padding;
      if (name == "clause") r = Role::Clause;
      else if (name == "extra") r = Role::Extra;
      else if (name == "blocking") r = Role::Blocking;
      else if (name == "variable") r = Role::Variable;
      else if (name == "variable_blocker") r = Role::VariableBlocker;
      else if (name == "aux") r = Role::AuxLine;
      if (idx >= 0 && idx < ps.size()) roles[idx] = r;
    }
    svg = render_svg_roles(ps, roles);
  } else if (!cfg.aux_input.empty()) {
    std::ifstream in(cfg.aux_input);
    if (!in) throw ParseError("cannot open " + cfg.aux_input);
    CyclePartition cp = read_partition(in);
    svg = render_svg(ps, cp);
  } else {
    svg = render_svg(ps, std::nullopt);
  }
  emit(cfg, out, svg);
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "pvg") return cmd_pvg(cfg, out);
    if (cfg.subcommand == "check") return cmd_check(cfg, out);
    if (cfg.subcommand == "partition") return cmd_partition(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    if (cfg.subcommand == "gadget") return cmd_gadget(cfg, out, err);
    if (cfg.subcommand == "oracle") return cmd_oracle(cfg, out);
    if (cfg.subcommand == "render") return cmd_render(cfg, out);
    err << "unknown subcommand '" << cfg.subcommand << "'\n";
    return 3;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    err << "internal audit failure: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace polypart
