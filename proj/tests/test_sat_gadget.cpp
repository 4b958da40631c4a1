#include <doctest.h>

#include <random>

#include "polypart/oracle.hpp"
#include "polypart/sat_gadget.hpp"
#include "test_util.hpp"

using namespace polypart;

TEST_CASE("formula basics") {
  Formula f = Formula::from(2, {{1, 2}, {-1, -2}});
  CHECK(f.clause_count() == 2);
  CHECK(f.count_occurring(2) == 2);
  CHECK(f.satisfies({true, false}));
  CHECK_FALSE(f.satisfies({true, true}));
  CHECK_THROWS_AS(Formula::from(1, {{1}, {1}, {1}, {1}}), std::invalid_argument);
}

TEST_CASE("normalize: consecutive clauses sharing variables get separators") {
  Formula raw = Formula::from(2, {{1, 2}, {-1, -2}});
  NormalizedFormula norm = normalize_formula(raw);
  std::string why;
  CHECK(norm.formula.is_normalized(&why));
  INFO(why);
  // equisatisfiable both ways
  SatOracleResult raw_sat = brute_force_sat(raw);
  SatOracleResult norm_sat = brute_force_sat(norm.formula);
  CHECK(raw_sat.satisfiable == norm_sat.satisfiable);
  if (norm_sat.satisfiable)
    CHECK(raw.satisfies(norm.to_original(norm_sat.assignment)));
}

TEST_CASE("normalize: one-sided variable gets an auxiliary occurrence") {
  Formula raw = Formula::from(1, {{1}});
  NormalizedFormula norm = normalize_formula(raw);
  CHECK(norm.formula.is_normalized());
  SatOracleResult norm_sat = brute_force_sat(norm.formula);
  CHECK(norm_sat.satisfiable);
  CHECK(raw.satisfies(norm.to_original(norm_sat.assignment)));
}

TEST_CASE("normalize: unsatisfiable cores stay unsatisfiable") {
  Formula raw = Formula::from(1, {{1}, {-1}});
  NormalizedFormula norm = normalize_formula(raw);
  CHECK(norm.formula.is_normalized());
  CHECK_FALSE(brute_force_sat(norm.formula).satisfiable);
}

TEST_CASE("normalize: empty formula rejected") {
  Formula empty;
  CHECK_THROWS_AS(normalize_formula(empty), std::invalid_argument);
}

TEST_CASE("normalize: random 3-occurrence formulas stay equisatisfiable") {
  std::mt19937 rng(404);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + t % 3;
    int m = 2 + t % 3;
    std::vector<std::vector<int>> clauses;
    std::vector<int> occ(n + 1, 0);
    for (int c = 0; c < m; ++c) {
      std::vector<int> cl;
      int width = 1 + static_cast<int>(rng() % 3);
      for (int w = 0; w < width; ++w) {
        int v = 1 + static_cast<int>(rng() % n);
        if (occ[v] >= 3) continue;
        int lit = (rng() % 2) ? v : -v;
        if (std::find(cl.begin(), cl.end(), lit) != cl.end()) continue;
        if (std::find(cl.begin(), cl.end(), -lit) != cl.end()) continue;
        cl.push_back(lit);
        ++occ[v];
      }
      if (!cl.empty()) clauses.push_back(cl);
    }
    if (clauses.empty()) continue;
    Formula raw = Formula::from(n, clauses);
    NormalizedFormula norm = normalize_formula(raw);
    CHECK(norm.formula.is_normalized());
    SatOracleResult a = brute_force_sat(raw);
    SatOracleResult b = brute_force_sat(norm.formula);
    CHECK(a.satisfiable == b.satisfiable);
    if (b.satisfiable) CHECK(raw.satisfies(norm.to_original(b.assignment)));
  }
}

TEST_CASE("gadget params: the step-(a) closed forms") {
  GadgetParams p = gadget_params(2, 0, 2);
  CHECK(p.v == 7);
  CHECK(p.b_n == 4);
  CHECK(p.e == 15);
  CHECK(p.b == 16);
  CHECK(p.c == 5);
}

TEST_CASE("as-built params satisfy the exhaustion identities") {
  std::mt19937 rng(405);
  for (int t = 0; t < 20; ++t) {
    Formula f = testutil::random_normalized_formula(5, 6, rng);
    GadgetParams p = gadget_params_as_built(f);
    CHECK(p.b == p.m + p.e - 1);
    // all three phases exhaust exactly
    long groups = p.m + (p.v - 2 * p.m) + (p.e - 2 * (p.v - 2 * p.m));
    long total = (p.m + p.c) + p.e + (p.b + p.b_n) + p.v;
    CHECK(total == 5 * groups);
    CHECK(p.c == 2 * (p.e - 2 * (p.v - 2 * p.m)));
  }
}

TEST_CASE("build_gadget: audited structure") {
  NormalizedFormula norm =
      normalize_formula(Formula::from(2, {{1, 2}, {-1, -2}}));
  Gadget g = build_gadget(norm.formula);
  CHECK(g.points.size() % 5 == 0);
  GadgetAudit audit = audit_gadget(g);
  for (const auto& f : audit.failures) {
    INFO(f);
    CHECK(false);
  }
  CHECK(audit.ok);
  // no clause-point sees any extra-point (targeted double check)
  for (int cp : g.clause_points)
    for (int ex : g.extra_points) CHECK_FALSE(pair_visible(g.points, cp, ex));
}

TEST_CASE("partition round trip on a satisfiable instance") {
  NormalizedFormula norm =
      normalize_formula(Formula::from(2, {{1, 2}, {-1, -2}}));
  Gadget g = build_gadget(norm.formula);
  SatOracleResult sat = brute_force_sat(norm.formula);
  REQUIRE(sat.satisfiable);
  auto partition = build_partition_from_assignment(g, sat.assignment);
  CHECK(partition.size() == g.points.size() / 5u);
  std::vector<bool> extracted = extract_assignment(g, partition);
  CHECK(norm.formula.satisfies(extracted));
}

TEST_CASE("extract_assignment rejects mangled partitions") {
  NormalizedFormula norm =
      normalize_formula(Formula::from(2, {{1, 2}, {-1, -2}}));
  Gadget g = build_gadget(norm.formula);
  SatOracleResult sat = brute_force_sat(norm.formula);
  REQUIRE(sat.satisfiable);
  auto partition = build_partition_from_assignment(g, sat.assignment);
  // swap a variable point out of a clause group for a blocking point
  int clause_grp = -1, other_grp = -1;
  for (size_t i = 0; i < partition.size(); ++i) {
    bool has_clause = false, has_var = false;
    for (int idx : partition[i]) {
      if (g.roles[idx] == Role::Clause) has_clause = true;
      if (g.roles[idx] == Role::Variable) has_var = true;
    }
    if (has_clause && has_var && clause_grp < 0) clause_grp = static_cast<int>(i);
    if (!has_clause && other_grp < 0 && has_var) other_grp = static_cast<int>(i);
  }
  REQUIRE(clause_grp >= 0);
  auto mangled = partition;
  // replace the clause group's variable points with arbitrary other points
  std::vector<int> replacement;
  for (int idx : mangled[clause_grp])
    if (g.roles[idx] != Role::Variable) replacement.push_back(idx);
  int needed = 5 - static_cast<int>(replacement.size());
  for (int idx : mangled[(clause_grp + 1) % mangled.size()]) {
    if (needed == 0) break;
    replacement.push_back(idx);
    --needed;
  }
  mangled[clause_grp] = replacement;
  CHECK_THROWS_AS(extract_assignment(g, mangled), std::invalid_argument);
}

TEST_CASE("partial grid: corrected minimum blocker count") {
  auto [c11, g11] = partial_grid_min_blockers(1, 1);
  CHECK(c11 == 1);
  auto [c22, g22] = partial_grid_min_blockers(2, 2);
  CHECK(c22 == 3);  // floor((p+q)/2) = 2 leaves the pair (1,1)-(1,-1) exposed

  // completeness and minimality for a small sweep
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      auto [count, grid] = partial_grid_min_blockers(p, q);
      CHECK(count == p + q - 1);
      for (int t : grid.top)
        for (int b : grid.bottom)
          CHECK_FALSE(pair_visible(grid.points, t, b));
      // removing any single mid point exposes at least one pair
      for (int skip : grid.mid) {
        std::vector<Point> pts;
        std::vector<int> top, bottom;
        for (int i = 0; i < grid.points.size(); ++i) {
          if (i == skip) continue;
          if (std::find(grid.top.begin(), grid.top.end(), i) != grid.top.end())
            top.push_back(static_cast<int>(pts.size()));
          if (std::find(grid.bottom.begin(), grid.bottom.end(), i) !=
              grid.bottom.end())
            bottom.push_back(static_cast<int>(pts.size()));
          pts.push_back(grid.points[i]);
        }
        PointSet reduced = PointSet::from(std::move(pts));
        bool exposed = false;
        for (int t : top)
          for (int b : bottom)
            if (pair_visible(reduced, t, b)) exposed = true;
        CHECK(exposed);
      }
    }
  }
}

TEST_CASE("extend_gadget: odd k adds audited auxiliary lines") {
  NormalizedFormula norm =
      normalize_formula(Formula::from(2, {{1, 2}, {-1, -2}}));
  Gadget g5 = build_gadget(norm.formula);
  Gadget g7 = extend_gadget(g5, 7);
  CHECK(g7.k == 7);
  CHECK(g7.aux_points.size() == 2 * (g5.points.size() / 5));
  // every aux point sees every original point
  for (int a : g7.aux_points)
    for (int o = 0; o < g5.points.size(); ++o)
      CHECK(pair_visible(g7.points, a, o));
  CHECK_THROWS_AS(extend_gadget(g5, 5), std::invalid_argument);
}

TEST_CASE("extend_gadget: k=6 parameterization") {
  NormalizedFormula norm =
      normalize_formula(Formula::from(2, {{1, 2}, {-1, -2}}));
  Gadget g5 = build_gadget(norm.formula);
  Gadget g6 = extend_gadget(g5, 6);
  CHECK(g6.k == 6);
  CHECK(g6.params.b == g6.params.b_n);
  CHECK(g6.params.e == 2 * g6.params.b_n - g6.params.m);
  CHECK(g6.params.c == 2 * g6.params.b_n - g6.params.v);
  CHECK(2 * g6.params.b == g6.params.m + g6.params.e);
  CHECK(g6.points.size() % 6 == 0);
  GadgetAudit audit = audit_gadget(g6);
  for (const auto& f : audit.failures) {
    INFO(f);
    CHECK(false);
  }
}

TEST_CASE("coordinate bit bound documented and enforced") {
  std::mt19937 rng(505);
  Formula f = testutil::random_normalized_formula(4, 6, rng);
  Gadget g = build_gadget(f);
  long bound = coord_bit_bound(g.params.m, g.params.n);
  for (int i = 0; i < g.points.size(); ++i) {
    CHECK(static_cast<long>(mpz_sizeinbase(g.points[i].x.get_num_mpz_t(), 2)) <=
          bound);
    CHECK(static_cast<long>(mpz_sizeinbase(g.points[i].x.get_den_mpz_t(), 2)) <=
          bound);
  }
}
