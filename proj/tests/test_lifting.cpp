#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gp/lifting.hpp"
#include "support/generators.hpp"

using namespace gp;
using namespace gp::lift;

namespace {

// Reachability closure by plain DFS, the comparison oracle for Warshall.
std::vector<std::vector<bool>> dfs_closure(const std::vector<std::vector<bool>>& adj) {
  int m = static_cast<int>(adj.size());
  std::vector<std::vector<bool>> out(m, std::vector<bool>(m, false));
  for (int s = 0; s < m; ++s) {
    std::vector<int> stack{s};
    std::vector<bool> seen(m, false);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < m; ++w) {
        if (adj[v][w] && !seen[w]) {
          seen[w] = true;
          out[s][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

Region region_of_value(const Rational& v) {
  return v < 0 ? Region::kNeg : v < 1 ? Region::kMid : Region::kPos;
}

}  // namespace

TEST_CASE("f evaluation") {
  CHECK(f_eval(Rational(2)) == Rational(-1));
  CHECK(f_eval(Rational(-1)) == Rational(1, 2));
  CHECK(f_eval(Rational(1, 2)) == Rational(2));
  CHECK_THROWS_AS(f_eval(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(f_eval(Rational(0)), std::domain_error);

  testing::Rng rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    Rational t = testing::rand_rational_star(rng);
    CHECK(f_eval(f_eval(f_eval(t))) == t);
    CHECK(region_of_value(f_eval(t)) == f_region(region_of_value(t)));
  }
  // f(3) < 0: Pos maps into Neg
  CHECK(f_eval(Rational(3)) == Rational(-1, 2));
}

TEST_CASE("f is increasing within each region") {
  testing::Rng rng(6);
  int checked = 0;
  while (checked < 300) {
    Rational a = testing::rand_rational_star(rng), b = testing::rand_rational_star(rng);
    if (a == b || region_of_value(a) != region_of_value(b)) continue;
    if (a > b) std::swap(a, b);
    CHECK(f_eval(a) < f_eval(b));
    ++checked;
  }
}

TEST_CASE("region_of") {
  auto p = core::parse_tagged("0 1 z o | z 0 o 1 | z o 0 1");
  CHECK(region_of(VarId{0, 0}, p) == Region::kNeg);
  CHECK(region_of(VarId{0, 1}, p) == Region::kNeg);
  CHECK(region_of(VarId{1, 0}, p) == Region::kMid);
  CHECK(region_of(VarId{1, 1}, p) == Region::kPos);
  CHECK(region_of(VarId{2, 0}, p) == Region::kPos);
  CHECK(region_of(VarId{2, 1}, p) == Region::kPos);
}

TEST_CASE("rep shifts") {
  CHECK(rep_shift(Region::kPos) == 0);
  CHECK(rep_shift(Region::kMid) == 1);
  CHECK(rep_shift(Region::kNeg) == 2);
  // vertex encodings
  int n = 4;
  CHECK(VarId{0, 2}.encode(n) == 2);
  CHECK(VarId{1, 1}.encode(n) == n + 1);
  CHECK(VarId{2, 0}.encode(n) == 2 * n);
}

TEST_CASE("base_graph") {
  // n = 1: no same-line pair at all
  auto p1 = core::parse_tagged("z 0 o | 0 z o | z o 0");
  RepGraph g1 = base_graph(p1);
  for (int v = 0; v < 3; ++v)
    for (int w = 0; w < 3; ++w) CHECK_FALSE(g1.edge(v, w));

  // both elements of line x in Neg: edge x0 -> x1
  auto p2 = core::parse_tagged("0 1 z o | z o 0 1 | z o 0 1");
  RepGraph g2 = base_graph(p2);
  CHECK(g2.edge(0, 1));
  CHECK_FALSE(g2.edge(1, 0));

  // different regions on line x: no x-edges
  auto p3 = core::parse_tagged("0 z 1 o | z o 0 1 | z o 0 1");
  RepGraph g3 = base_graph(p3);
  CHECK_FALSE(g3.edge(0, 1));
  CHECK_FALSE(g3.edge(1, 0));
}

TEST_CASE("base_graph edges are exactly same-line same-region precedence") {
  testing::Rng rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    int n = testing::rand_int(rng, 1, 6);
    auto p = testing::rand_pattern(rng, n);
    LiftContext ctx = make_context(p);
    RepGraph g = base_graph(ctx);
    CHECK(g.acyclic());
    CHECK(g.is_transitively_closed());
    for (int v = 0; v < 3 * n; ++v) {
      for (int w = 0; w < 3 * n; ++w) {
        bool expect = v / n == w / n && v != w && ctx.region[v] == ctx.region[w] &&
                      ctx.rank[v] < ctx.rank[w];
        CHECK(g.edge(v, w) == expect);
      }
    }
  }
}

TEST_CASE("add_edge_closure") {
  RepGraph g(2);   // 6 vertices
  CHECK(g.add_edge_closure(0, 1) == RepGraph::AddEdge::kAdded);
  CHECK(g.add_edge_closure(1, 2) == RepGraph::AddEdge::kAdded);
  CHECK(g.edge(0, 2));   // closure restored
  CHECK(g.add_edge_closure(0, 2) == RepGraph::AddEdge::kPresent);
  CHECK(g.add_edge_closure(2, 0) == RepGraph::AddEdge::kCycle);
  CHECK(g.acyclic());
  CHECK(g.is_transitively_closed());
}

TEST_CASE("warshall closure against DFS oracle") {
  testing::Rng rng(9);
  for (int iter = 0; iter < 200; ++iter) {
    int n = testing::rand_int(rng, 1, 5);
    int verts = 3 * n;
    std::vector<std::vector<bool>> adj(verts, std::vector<bool>(verts, false));
    RepGraph g(n);
    // random DAG: edges only forward in a random vertex order
    std::vector<int> order = testing::rand_word(rng, verts);
    for (int a = 0; a < verts; ++a)
      for (int b = a + 1; b < verts; ++b)
        if (testing::rand_int(rng, 0, 3) == 0) {
          adj[order[a]][order[b]] = true;
          g.set_edge(order[a], order[b]);
        }
    CHECK(g.close_acyclic());
    auto oracle = dfs_closure(adj);
    for (int v = 0; v < verts; ++v)
      for (int w = 0; w < verts; ++w) CHECK(g.edge(v, w) == oracle[v][w]);
  }
  // cycles are reported
  RepGraph bad(1);
  bad.set_edge(0, 1);
  bad.set_edge(1, 2);
  bad.set_edge(2, 0);
  CHECK_FALSE(bad.close_acyclic());
  RepGraph empty(2);
  CHECK(empty.close_acyclic());
}

TEST_CASE("topological_sort") {
  RepGraph g(1);
  CHECK(g.topological_sort() == std::vector<int>{0, 1, 2});   // tie-break: smallest id

  RepGraph chain(1);
  chain.set_edge(2, 1);
  chain.set_edge(1, 0);
  chain.set_edge(2, 0);
  CHECK(chain.topological_sort() == std::vector<int>{2, 1, 0});

  testing::Rng rng(10);
  for (int iter = 0; iter < 100; ++iter) {
    int n = testing::rand_int(rng, 1, 5);
    RepGraph r(n);
    std::vector<int> order = testing::rand_word(rng, 3 * n);
    for (int a = 0; a < 3 * n; ++a)
      for (int b = a + 1; b < 3 * n; ++b)
        if (testing::rand_int(rng, 0, 2) == 0) r.set_edge(order[a], order[b]);
    REQUIRE(r.close_acyclic());
    std::vector<int> topo = r.topological_sort();
    std::vector<int> pos(3 * n);
    for (int k = 0; k < 3 * n; ++k) pos[topo[k]] = k;
    for (int v = 0; v < 3 * n; ++v)
      for (int w = 0; w < 3 * n; ++w)
        if (r.edge(v, w)) CHECK(pos[v] < pos[w]);
  }

  RepGraph cyc(1);
  cyc.set_edge(0, 1);
  cyc.set_edge(1, 0);
  CHECK_THROWS_AS(cyc.topological_sort(), std::logic_error);
}

TEST_CASE("compare_with_f") {
  auto p = core::parse_tagged("0 1 z o | z 0 o 1 | z o 0 1");
  LiftContext ctx = make_context(p);
  RepGraph g = base_graph(ctx);
  // u = x_0 (Neg), w = y_1 (Pos): f(w) in Neg, same region, no edge
  CHECK(compare_with_f(g, ctx, VarId{0, 0}, VarId{1, 1}) == Cmp::kUnknown);
  // u = x_0 (Neg), w = y_0 (Mid): f(w) in Pos
  CHECK(compare_with_f(g, ctx, VarId{0, 0}, VarId{1, 0}) == Cmp::kLess);
  // u = z_0 (Pos), w = x_0 (Neg): f(w) in Mid
  CHECK(compare_with_f(g, ctx, VarId{2, 0}, VarId{0, 0}) == Cmp::kGreater);
  // same region with an edge decides
  RepGraph g2 = g;
  REQUIRE(g2.add_edge_closure(VarId{0, 0}.encode(2), VarId{1, 1}.encode(2)) ==
          RepGraph::AddEdge::kAdded);
  CHECK(compare_with_f(g2, ctx, VarId{0, 0}, VarId{1, 1}) == Cmp::kLess);
}

TEST_CASE("validate_lifted_order") {
  testing::Rng rng(12);
  // orders induced by concrete points are valid
  for (int iter = 0; iter < 300; ++iter) {
    int n = testing::rand_int(rng, 1, 3);
    auto cfg = testing::rand_config(rng, n);
    CHECK(validate_lifted_order(cell_from_point(cfg.coords)));
  }
  // two variables of one block above 1: violates (i)
  CellOrder bad;
  bad.n = 1;
  bad.order = {3, 6, 2, 4, 7, 5, 0, 1, 8};
  bad.pos_zero = 3;
  bad.pos_one = 6;
  CHECK_FALSE(validate_lifted_order(bad));

  // a valid cell, then an f-inversion without a 1-separation: violates (ii)
  std::vector<Region> regions = {Region::kPos, Region::kPos, Region::kPos};
  CellOrder good = cell_from_rep_order(regions, {0, 1, 2});
  CHECK(validate_lifted_order(good));
  CellOrder twisted = good;
  // swap two representatives but not their images: breaks monotonicity of f
  std::swap(twisted.order[6], twisted.order[7]);
  CHECK_FALSE(validate_lifted_order(twisted));
}

TEST_CASE("witness examples") {
  // n = 1, all three variables Pos, order x < y < z
  std::vector<Region> regions = {Region::kPos, Region::kPos, Region::kPos};
  auto w = witness_from_order(cell_from_rep_order(regions, {0, 1, 2}));
  CHECK(w == std::vector<Rational>{2, 3, 4});

  // Pos-rank k (1-based) with region Mid gets k/(k+1), with Neg -1/k
  std::vector<Region> mixed = {Region::kMid, Region::kNeg, Region::kPos};
  auto w2 = witness_from_order(cell_from_rep_order(mixed, {0, 1, 2}));
  CHECK(w2[0] == Rational(1, 2));    // rank 1, Mid
  CHECK(w2[1] == Rational(-1, 2));   // rank 2, Neg
  CHECK(w2[2] == Rational(4));       // rank 3, Pos

  CellOrder junk;
  junk.n = 1;
  junk.order = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  junk.pos_zero = 0;
  junk.pos_one = 0;
  CHECK_THROWS_AS(witness_from_order(junk), std::invalid_argument);
}

TEST_CASE("witness round-trip, exhaustive n=1") {
  std::vector<int> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  int checked = 0;
  do {
    for (int r0 = 0; r0 < 3; ++r0)
      for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = 0; r2 < 3; ++r2) {
          std::vector<Region> regions = {static_cast<Region>(r0), static_cast<Region>(r1),
                                         static_cast<Region>(r2)};
          CellOrder cell = cell_from_rep_order(regions, perm);
          REQUIRE(validate_lifted_order(cell));
          auto coords = witness_from_order(cell);
          CellOrder back = cell_from_point(coords);
          CHECK(back.order == cell.order);
          CHECK(back.pos_zero == cell.pos_zero);
          CHECK(back.pos_one == cell.pos_one);
          ++checked;
        }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(checked == 162);
}

TEST_CASE("witness round-trip, sampled n=2..3") {
  testing::Rng rng(13);
  for (int iter = 0; iter < 500; ++iter) {
    int n = testing::rand_int(rng, 2, 3);
    std::vector<Region> regions(3 * n);
    for (auto& r : regions) r = static_cast<Region>(testing::rand_int(rng, 0, 2));
    std::vector<int> order = testing::rand_word(rng, 3 * n);
    CellOrder cell = cell_from_rep_order(regions, order);
    REQUIRE(validate_lifted_order(cell));
    auto coords = witness_from_order(cell);
    CellOrder back = cell_from_point(coords);
    CHECK(back.order == cell.order);
    CHECK(back.pos_zero == cell.pos_zero);
    CHECK(back.pos_one == cell.pos_one);
  }
}
