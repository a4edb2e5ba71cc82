#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "ortho/diagonal.hpp"
#include "ortho/drawing.hpp"
#include "ortho/generators.hpp"

using namespace ortho;

namespace {

std::vector<Pt> ascending_diagonal(int n) {
  std::vector<Pt> pts;
  for (int i = 0; i < n; ++i) pts.push_back({2 * i, 2 * i});
  return pts;
}

void check_uses_all_points(const Drawing& d, const std::vector<Pt>& pts) {
  std::set<std::pair<i64, i64>> want, got;
  for (const Pt& p : pts) want.insert({p.x, p.y});
  for (const Pt& p : d.pos) got.insert({p.x, p.y});
  CHECK(want == got);
}

}  // namespace

TEST_CASE("every degree-4 tree embeds on the ascending diagonal") {
  for (int n : {1, 2, 3, 5, 9, 17, 40}) {
    for (unsigned seed = 0; seed < 6; ++seed) {
      RootedTree t = gen_tree(TreeShapeKind::Random, n, 4, seed);
      auto pts = ascending_diagonal(n);
      Drawing d = embed_on_diagonal(t, pts);
      auto rep = validate(d);
      INFO("n=" << n << " seed=" << seed);
      for (auto& v : rep.violations) INFO(v);
      CHECK(rep.ok);
      check_uses_all_points(d, pts);
    }
  }
}

TEST_CASE("descending diagonals work too") {
  for (unsigned seed = 0; seed < 6; ++seed) {
    RootedTree t = gen_tree(TreeShapeKind::Random, 25, 4, 50 + seed);
    std::vector<Pt> pts;
    for (int i = 0; i < 25; ++i) pts.push_back({2 * i, 48 - 2 * i});
    Drawing d = embed_on_diagonal(t, pts);
    CHECK(validate(d).ok);
    check_uses_all_points(d, pts);
  }
}

TEST_CASE("non-uniform diagonal coordinates") {
  std::vector<Pt> pts = {{-7, 3}, {0, 10}, {4, 21}, {9, 40}, {100, 55}};
  RootedTree t = gen_tree(TreeShapeKind::Random, 5, 4, 3);
  Drawing d = embed_on_diagonal(t, pts);
  CHECK(validate(d).ok);
  check_uses_all_points(d, pts);
}

TEST_CASE("upward visibility keeps the root's U port and ray clear") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    RootedTree t = gen_tree(TreeShapeKind::Random, 20, 4, 300 + seed);
    if (t.degree(t.root) > 3) continue;
    auto pts = ascending_diagonal(20);
    Drawing d = embed_on_diagonal(t, pts, true);
    REQUIRE(validate(d).ok);
    Pt r = d.pos[t.root];
    for (int e = 0; e < (int)d.edges.size(); ++e) {
      if (d.edges[e].u == t.root || d.edges[e].v == t.root)
        CHECK(port_at(d, e, t.root) != Port::U);
      for (const Seg& s : edge_segments(d, e)) {
        if (s.horiz)  // must not span the ray x = r.x, y > r.y
          CHECK(!(s.a.x <= r.x && r.x <= s.b.x && s.a.y > r.y));
        else  // vertical on the ray only if it is the root's own stub
          if (s.a.x == r.x) CHECK(s.b.y <= r.y);
      }
    }
    for (int v = 0; v < 20; ++v)
      if (v != t.root) CHECK(!(d.pos[v].x == r.x && d.pos[v].y > r.y));
  }
}
