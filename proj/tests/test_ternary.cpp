#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>

#include "doctest.h"
#include "ortho/analysis.hpp"
#include "ortho/drawing.hpp"
#include "ortho/generators.hpp"
#include "ortho/ternary.hpp"

using namespace ortho;

namespace {

RootedTree rerooted_at_leaf(const RootedTree& t) {
  for (int v = 0; v < t.n(); ++v)
    if (t.degree(v) <= 1) return t.rerooted(v);
  return t;
}

i64 root_budget(const RootedTree& t) {
  RootedTree rt = rerooted_at_leaf(t);
  return compute_budgets_ternary(rt).fhat[rt.root];
}

}  // namespace

TEST_CASE("ternary budgets are at least the subtree sizes") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    RootedTree t =
        rerooted_at_leaf(gen_tree(TreeShapeKind::Random, 90, 4, seed));
    t.canonicalize();
    TernaryBudgets b = compute_budgets_ternary(t);
    auto sizes = t.subtree_sizes();
    for (int v = 0; v < t.n(); ++v) {
      CHECK(b.fhat[v] >= sizes[v]);
      if (t.children[v].empty()) CHECK(b.fhat[v] == 1);
    }
  }
}

TEST_CASE("worst-case sweep dominates every concrete tree") {
  auto dp = dp_worst_case_ternary(90);
  for (unsigned seed = 0; seed < 15; ++seed) {
    for (int n : {4, 30, 61, 90}) {
      RootedTree t =
          rerooted_at_leaf(gen_tree(TreeShapeKind::Random, n, 4, 11 * seed + n));
      CHECK(compute_budgets_ternary(t).fhat[t.root] <= dp[n]);
    }
  }
}

TEST_CASE("embedding with exactly the root budget always validates") {
  for (unsigned seed = 0; seed < 25; ++seed) {
    int n = 2 + (int)(seed * 37 % 110);
    RootedTree t = gen_tree(TreeShapeKind::Random, n, 4, 2200 + seed);
    i64 m = root_budget(t);
    PointStyle style = seed % 3 == 0   ? PointStyle::Uniform
                       : seed % 3 == 1 ? PointStyle::Staircases
                                       : PointStyle::Diagonal;
    auto pts = gen_points(style, (int)m, seed);
    Drawing d = embed_ternary(t, pts);
    auto rep = validate(d);
    INFO("n=" << n << " m=" << m << " seed=" << seed);
    for (auto& v : rep.violations) INFO(v);
    CHECK(rep.ok);
    CHECK(serialize_tree(d.tree) == serialize_tree(t));
    std::set<std::pair<i64, i64>> avail;
    for (const Pt& p : pts) avail.insert({p.x, p.y});
    for (const Pt& p : d.pos) CHECK(avail.count({p.x, p.y}) == 1);
  }
}

TEST_CASE("caterpillar trees of degree 4 embed as well") {
  for (unsigned seed = 0; seed < 8; ++seed) {
    CaterpillarShape shape = gen_caterpillar_shape(40, 4, seed);
    RootedTree t = build_top_view_caterpillar(
                       shape, std::vector<SpineOrdering>(shape.spine_len(),
                                                        SpineOrdering::TV))
                       .to_rooted();
    auto pts = gen_points(PointStyle::Uniform, (int)root_budget(t), seed);
    Drawing d = embed_ternary(t, pts);
    CHECK(validate(d).ok);
  }
}

TEST_CASE("too few points raise BudgetError, degree 5 is rejected") {
  RootedTree t = gen_tree(TreeShapeKind::Random, 40, 4, 6);
  CHECK_THROWS_AS(embed_ternary(t, gen_points(PointStyle::Uniform, 39, 0)),
                  BudgetError);
  CHECK_THROWS_AS(embed_ternary(parse_tree("(()()()()())"),
                                gen_points(PointStyle::Uniform, 40, 0)),
                  TreeError);
}

TEST_CASE("every level-construction end case is reachable") {
  TernaryStats st;
  for (unsigned seed = 0; seed < 150; ++seed) {
    int n = 4 + (int)(seed % 100);
    RootedTree t = gen_tree(TreeShapeKind::Random, n, 4, 5100 + seed);
    PointStyle style = seed % 2 ? PointStyle::Uniform : PointStyle::Staircases;
    auto pts = gen_points(style, (int)root_budget(t), seed);
    Drawing d = embed_ternary(t, pts, &st);
    REQUIRE(validate(d).ok);
  }
  CHECK(st.f4_1 > 0);
  CHECK(st.a > 0);
  CHECK(st.b1 > 0);
  CHECK(st.b2 > 0);
  CHECK(st.b3 > 0);
}

TEST_CASE("ternary sweep stays within 2 n^1.55") {
  auto dp = dp_worst_case_ternary(200);
  for (int n = 1; n <= 200; ++n)
    CHECK((long double)dp[n] <= 2.0L * powl((long double)n, 1.55L));
}
