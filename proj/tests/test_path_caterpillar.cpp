#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "ortho/analysis.hpp"
#include "ortho/drawing.hpp"
#include "ortho/generators.hpp"
#include "ortho/path_caterpillar.hpp"

using namespace ortho;

namespace {

RootedTree path_tree(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += '(';
  for (int i = 0; i < n; ++i) s += ')';
  return parse_tree(s);
}

// independent re-check of the certificate flags from the geometry
void check_path_certificates(const Drawing& d, int n) {
  for (int i = 1; i < n; ++i) CHECK(d.pos[i - 1].x < d.pos[i].x);
  for (int i = 1; i + 1 < n; ++i) {
    Port in = port_at(d, i - 1, i);   // edge (i-1, i)
    Port out = port_at(d, i, i);      // edge (i, i+1)
    bool horiz = (in == Port::L && out == Port::R);
    bool vert = (in == Port::U && out == Port::D) ||
                (in == Port::D && out == Port::U);
    CHECK((horiz || vert));
  }
}

// reference: try every x-sorted subsequence with both starting axes; a
// candidate is realizable iff the resulting drawing passes validate()
int brute_longest_mono(const std::vector<Pt>& pts) {
  auto s = sorted_by_x(pts);
  int n = (int)s.size();
  int best = n >= 1 ? 1 : 0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<Pt> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(s[i]);
    int m = (int)sub.size();
    if (m < 2 || m <= best) continue;
    for (int first_horiz = 0; first_horiz < 2; ++first_horiz) {
      Drawing d;
      d.tree = path_tree(m);
      d.pos = sub;
      for (int i = 0; i + 1 < m; ++i) {
        bool h = ((i % 2 == 0) == (bool)first_horiz);
        d.edges.push_back({i, i + 1, h ? Bend::HV : Bend::VH});
      }
      if (validate(d).ok) {
        best = m;
        break;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("path point budgets") {
  CHECK(path_points_budget(1) == 1);
  CHECK(path_points_budget(2) == 6);
  CHECK(path_points_budget(4) == 20);
  CHECK(path_points_budget(8) == 56);
  for (int n = 2; n <= 600; ++n)
    CHECK(path_points_budget(n) >= path_points_budget(n - 1));
}

TEST_CASE("monotone path embedding succeeds within budget") {
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 12, 16, 33}) {
    for (unsigned seed = 0; seed < 8; ++seed) {
      auto pts = gen_points(PointStyle::Uniform, (int)path_points_budget(n),
                            seed * 31 + n);
      StraightThroughDrawing r = embed_monotone_path(n, pts);
      INFO("n=" << n << " seed=" << seed);
      CHECK(r.x_monotone);
      CHECK(r.straight_through);
      auto rep = validate(r.drawing);
      for (auto& v : rep.violations) INFO(v);
      CHECK(rep.ok);
      if (n >= 2) check_path_certificates(r.drawing, n);
    }
  }
}

TEST_CASE("monotone path works on adversarial styles too") {
  for (int n : {9, 17}) {
    for (PointStyle st : {PointStyle::Staircases, PointStyle::Diagonal,
                          PointStyle::Fig2B, PointStyle::Fig2C}) {
      int m = (int)path_points_budget(n);
      if ((st == PointStyle::Fig2B || st == PointStyle::Fig2C) && m % 2) m++;
      auto pts = gen_points(st, m, 5);
      StraightThroughDrawing r = embed_monotone_path(n, pts);
      CHECK(r.x_monotone);
      CHECK(r.straight_through);
      CHECK(validate(r.drawing).ok);
    }
  }
}

TEST_CASE("longest straight-through path matches brute force") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    int n = 2 + (int)(seed % 7);
    auto pts = gen_points(PointStyle::Uniform, n, 400 + seed);
    MonoPathResult r = longest_monotone_straight_through(pts);
    CHECK(r.length == brute_longest_mono(pts));
    CHECK((int)r.witness.size() == r.length);
    for (size_t i = 1; i < r.witness.size(); ++i)
      CHECK(r.witness[i - 1].x < r.witness[i].x);
  }
}

TEST_CASE("guarded zigzag sets cap the longest path at half") {
  for (int half : {4, 7, 10, 16}) {
    int total = 2 * half;
    auto b = gen_points(PointStyle::Fig2B, total, 0);
    CHECK(longest_monotone_straight_through(b).length == half + 1);
    auto c = gen_points(PointStyle::Fig2C, total, 0);
    CHECK(longest_monotone_straight_through(c).length == half + 1);
  }
}

TEST_CASE("caterpillar point budgets") {
  CHECK(caterpillar_points_budget(1) == 1);
  CHECK(caterpillar_points_budget(2) == 2);
  CHECK(caterpillar_points_budget(32) == 31 * 31 + 1);
  CHECK(caterpillar_points_budget(33) ==
        2 * caterpillar_points_budget(24) + 16 * 33);
  for (int n = 2; n <= 200; ++n)
    CHECK(caterpillar_points_budget(n) >= caterpillar_points_budget(n - 1));
}

TEST_CASE("top-view caterpillars embed within budget and keep the ordering") {
  for (int n : {3, 5, 9, 16, 25, 33, 48}) {
    for (unsigned seed = 0; seed < 5; ++seed) {
      CaterpillarShape shape = gen_caterpillar_shape(n, 4, seed);
      REQUIRE(shape.n() == n);
      auto pts = gen_points(PointStyle::Uniform,
                            (int)caterpillar_points_budget(n), 77 * seed + n);
      Drawing d = embed_top_view_caterpillar(shape, pts);
      OrderedTree ot = build_top_view_caterpillar(
          shape,
          std::vector<SpineOrdering>(shape.spine_len(), SpineOrdering::TV));
      auto rep = validate(d, &ot);
      INFO("n=" << n << " seed=" << seed);
      for (auto& v : rep.violations) INFO(v);
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("c14 shape embeds on enough points") {
  auto pts = gen_points(PointStyle::Uniform,
                        (int)caterpillar_points_budget(14), 3);
  Drawing d = embed_top_view_caterpillar(c14_shape(), pts);
  OrderedTree ot = build_top_view_caterpillar(
      c14_shape(), std::vector<SpineOrdering>(4, SpineOrdering::TV));
  CHECK(validate(d, &ot).ok);
}
