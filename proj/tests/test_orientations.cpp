#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gp/geometry.hpp"
#include "gp/orientations.hpp"
#include "support/generators.hpp"

using namespace gp;
using namespace gp::orient;

namespace {

// Total-order representative graph of a concrete configuration; nullopt on
// a representative collision.
std::optional<lift::RepGraph> total_order_graph(const geom::TriangleConfig& cfg,
                                                const lift::LiftContext& ctx) {
  int n = cfg.n;
  std::vector<Rational> rep(3 * n);
  for (int v = 0; v < 3 * n; ++v)
    rep[v] = lift::f_iterate(cfg.coords[v], lift::rep_shift(ctx.region[v]));
  lift::RepGraph g(n);
  for (int v = 0; v < 3 * n; ++v)
    for (int w = 0; w < 3 * n; ++w) {
      if (v != w && rep[v] == rep[w]) return std::nullopt;
      if (rep[v] < rep[w]) g.set_edge(v, w);
    }
  REQUIRE(g.close_acyclic());
  return g;
}

int concrete_orient(const geom::TriangleConfig& cfg, int a, int b, int c, int d) {
  return geom::orient4(cfg.vertex(a), cfg.vertex(b), cfg.vertex(c), cfg.vertex(d));
}

}  // namespace

TEST_CASE("associated_vertex") {
  int n = 8;
  CHECK(associated_vertex(3, n) == 2 * n + 3);        // x_3 -> z_3
  CHECK(associated_vertex(n + 0, n) == 0);            // y_0 -> x_0
  CHECK(associated_vertex(2 * n + 7, n) == n + 7);    // z_7 -> y_7
}

TEST_CASE("initial_orientation determined instance") {
  auto p = core::parse_tagged("0 1 z o | 0 1 z o | 0 1 z o");
  lift::LiftContext ctx = lift::make_context(p);
  std::vector<int> unknowns;
  SignVector sv = initial_sign_vector(0, 1, ctx, &unknowns);
  CHECK(unknowns.empty());
  for (int l = 0; l < 3; ++l) {
    CHECK(sv[l].determined());
    CHECK(sv[l].sign == -1);
    CHECK(sv[3 + l].determined());
    CHECK(sv[3 + l].sign == 1);
  }
}

TEST_CASE("initial_orientation pending instance") {
  auto p = core::parse_tagged("0 1 z o | 0 1 z o | z 0 o 1");
  lift::LiftContext ctx = lift::make_context(p);
  std::vector<int> unknowns;
  SignVector sv = initial_sign_vector(0, 1, ctx, &unknowns);
  int n = 2;
  // i side, l = 0: z_0 - f(y_0) undecided (both Mid)
  CHECK_FALSE(sv[0].determined());
  CHECK(sv[0].sign == 1);
  CHECK(sv[0].pending == 2 * n + 0);
  CHECK(sv[1].determined());
  CHECK(sv[1].sign == -1);
  CHECK(sv[2].determined());
  CHECK(sv[2].sign == -1);
  // j side, l = 1: x_1 - f(z_1) undecided
  CHECK(sv[3].determined());
  CHECK(sv[3].sign == -1);
  CHECK_FALSE(sv[4].determined());
  CHECK(sv[4].sign == 1);
  CHECK(sv[4].pending == 1);
  CHECK(sv[5].determined());
  CHECK(sv[5].sign == 1);
  CHECK(unknowns == std::vector<int>{2 * n + 0, 1});
}

TEST_CASE("pending entries pair same-index variables") {
  testing::Rng rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    int n = testing::rand_int(rng, 2, 5);
    auto p = testing::rand_pattern(rng, n);
    lift::LiftContext ctx = lift::make_context(p);
    std::vector<int> unknowns;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        SignVector sv = initial_sign_vector(i, j, ctx, &unknowns);
        for (int k = 0; k < 6; ++k) {
          if (sv[k].determined()) continue;
          int v = sv[k].pending;
          CHECK(v % n == (k < 3 ? i : j));
          CHECK(associated_vertex(v, n) % n == v % n);
        }
      }
    CHECK(unknowns.size() <= 3u * n);
  }
}

TEST_CASE("rename_guigue identity case") {
  std::array<std::int8_t, 6> sv = {1, -1, -1, 1, -1, -1};
  RenamedPair r = rename_guigue(sv, 0, 1, 2);
  CHECK(r.vertex == std::array<int, 6>{0, 2, 4, 1, 3, 5});

  std::array<std::int8_t, 6> constant = {1, 1, 1, -1, 1, -1};
  CHECK_THROWS_AS(rename_guigue(constant, 0, 1, 2), std::logic_error);
}

TEST_CASE("rename_guigue always produces (1,-1,-1,1,-1,-1) on concrete configs") {
  testing::Rng rng(19);
  int done = 0;
  while (done < 400) {
    int n = testing::rand_int(rng, 2, 4);
    auto cfg = testing::rand_config(rng, n);
    int i = 0, j = testing::rand_int(rng, 1, n - 1);
    std::array<std::int8_t, 6> sv;
    bool degenerate = false;
    for (int k = 0; k < 6; ++k) {
      int o = k < 3 ? concrete_orient(cfg, i, n + i, 2 * n + i, (k % 3) * n + j)
                    : concrete_orient(cfg, j, n + j, 2 * n + j, (k % 3) * n + i);
      if (o == 0) degenerate = true;
      sv[k] = static_cast<std::int8_t>(o);
    }
    if (degenerate) continue;
    if ((sv[0] == sv[1] && sv[1] == sv[2]) || (sv[3] == sv[4] && sv[4] == sv[5])) continue;
    RenamedPair r = rename_guigue(sv, i, j, n);
    const auto& v = r.vertex;
    CHECK(concrete_orient(cfg, v[0], v[1], v[2], v[3]) == 1);
    CHECK(concrete_orient(cfg, v[0], v[1], v[2], v[4]) == -1);
    CHECK(concrete_orient(cfg, v[0], v[1], v[2], v[5]) == -1);
    CHECK(concrete_orient(cfg, v[3], v[4], v[5], v[0]) == 1);
    CHECK(concrete_orient(cfg, v[3], v[4], v[5], v[1]) == -1);
    CHECK(concrete_orient(cfg, v[3], v[4], v[5], v[2]) == -1);
    ++done;
  }
}

TEST_CASE("final_orientation matches the determinant on total orders") {
  testing::Rng rng(21);
  int done = 0;
  while (done < 4000) {
    int n = testing::rand_int(rng, 2, 4);
    auto cfg = testing::rand_config(rng, n);
    auto p = testing::pattern_of_config(cfg);
    lift::LiftContext ctx = lift::make_context(p);
    auto graph = total_order_graph(cfg, ctx);
    if (!graph) continue;
    const lift::RepGraph& g = *graph;

    int i = 0, j = testing::rand_int(rng, 1, n - 1);
    // two vertices from each triangle, on any line pair, in shuffled order
    int la = testing::rand_int(rng, 0, 2), lb = (la + 1 + testing::rand_int(rng, 0, 1)) % 3;
    int lc = testing::rand_int(rng, 0, 2), ld = (lc + 1 + testing::rand_int(rng, 0, 1)) % 3;
    std::array<int, 4> quad = {la * n + i, lb * n + i, lc * n + j, ld * n + j};
    std::shuffle(quad.begin(), quad.end(), rng);

    int expect = concrete_orient(cfg, quad[0], quad[1], quad[2], quad[3]);
    if (expect == 0) continue;
    FinalOrientation fo = final_orientation(quad, g, ctx);
    REQUIRE(fo.determined());
    CHECK(fo.sign == expect);
    ++done;
  }
}

TEST_CASE("final_orientation pending pair shape") {
  // x_0 in Mid, y_1 in Pos: y_1 - f(x_0) stays undecided in the base graph
  auto p = core::parse_tagged("z 0 1 o | z o 1 0 | z o 0 1");
  lift::LiftContext ctx = lift::make_context(p);
  lift::RepGraph g = lift::base_graph(ctx);
  int n = 2;
  // quad (X_0, Y_1, Z_0, Z_1): case (z_c - z_d)(x_a - 1)(y_b - f(x_a))
  FinalOrientation fo = final_orientation({0, n + 1, 2 * n + 0, 2 * n + 1}, g, ctx);
  REQUIRE_FALSE(fo.determined());
  CHECK(fo.v == n + 1);
  CHECK(fo.w == 0);
}
