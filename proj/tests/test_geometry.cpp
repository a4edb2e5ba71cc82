#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ortho/geometry.hpp"

using namespace ortho;

namespace {

std::vector<Pt> random_points(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::set<i64> xs, ys;
  std::vector<Pt> out;
  std::uniform_int_distribution<i64> d(-1000000, 1000000);
  while ((int)out.size() < n) {
    Pt p{d(rng), d(rng)};
    if (xs.insert(p.x).second && ys.insert(p.y).second) out.push_back(p);
  }
  return out;
}

// quadratic reference for minimal_layer
std::vector<Pt> brute_minimal(DomOrder o, const std::vector<Pt>& pts) {
  std::vector<Pt> out;
  for (const Pt& p : pts) {
    bool minimal = true;
    for (const Pt& q : pts)
      if (dominates(o, q, p)) minimal = false;
    if (minimal) out.push_back(p);
  }
  return sorted_by_x(out);
}

// quadratic LIS-style reference for longest_chain
int brute_chain_len(DomOrder o, const std::vector<Pt>& pts) {
  std::vector<Pt> s = sorted_by_x(pts);
  std::vector<int> dp(s.size(), 1);
  int best = s.empty() ? 0 : 1;
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = 0; j < i; ++j)
      if (dominates(o, s[j], s[i])) dp[i] = std::max(dp[i], dp[j] + 1);
    best = std::max(best, dp[i]);
  }
  return best;
}

bool is_chain(DomOrder o, const std::vector<Pt>& c) {
  for (size_t i = 1; i < c.size(); ++i)
    if (!dominates(o, c[i - 1], c[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("normalize_points produces even ranks and keeps relative order") {
  auto raw = random_points(60, 1);
  auto norm = normalize_points(raw);
  REQUIRE(norm.size() == raw.size());
  for (size_t i = 0; i < raw.size(); ++i)
    for (size_t j = 0; j < raw.size(); ++j) {
      CHECK(((raw[i].x < raw[j].x) == (norm[i].x < norm[j].x)));
      CHECK(((raw[i].y < raw[j].y) == (norm[i].y < norm[j].y)));
    }
  std::set<i64> xs, ys;
  for (const Pt& p : norm) {
    CHECK(p.x % 2 == 0);
    CHECK(p.y % 2 == 0);
    CHECK(p.x >= 0);
    CHECK(p.x < 2 * (i64)norm.size());
    xs.insert(p.x);
    ys.insert(p.y);
  }
  CHECK(xs.size() == norm.size());
  CHECK(ys.size() == norm.size());
}

TEST_CASE("rational point loading orders by exact value") {
  PointSet ps = load_points_text("1/3 2\n1/2 1\n# comment\n2/5 3\n");
  REQUIRE(ps.size() == 3);
  // x order: 1/3 < 2/5 < 1/2
  CHECK(ps[0].x == 0);
  CHECK(ps[2].x == 2);
  CHECK(ps[1].x == 4);
  CHECK_THROWS_AS(load_points_text("1 2\n1 3\n"), InputError);
  CHECK_THROWS_AS(load_points_text("1 2\nbogus\n"), InputError);
}

TEST_CASE("save/load round trip") {
  auto pts = normalize_points(random_points(25, 7));
  PointSet ps{pts};
  PointSet back = load_points_text(save_points_text(ps));
  CHECK(back.pts == pts);
}

TEST_CASE("assert_general_position") {
  CHECK_NOTHROW(assert_general_position({{0, 0}, {2, 2}, {4, 6}}));
  CHECK_THROWS_AS(assert_general_position({{0, 0}, {0, 2}}), GeometryError);
  CHECK_THROWS_AS(assert_general_position({{0, 2}, {2, 2}}), GeometryError);
}

TEST_CASE("minimal_layer matches quadratic reference") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto pts = normalize_points(random_points(40, 100 + seed));
    for (DomOrder o : {DomOrder::Incr, DomOrder::Decr}) {
      auto fast = minimal_layer(o, pts);
      auto slow = brute_minimal(o, pts);
      CHECK(sorted_by_x(fast) == slow);
    }
  }
}

TEST_CASE("peel_layers partitions and layers are antichains") {
  auto pts = normalize_points(random_points(50, 42));
  auto layers = peel_layers(DomOrder::Incr, pts, 4);
  size_t total = 0;
  for (const auto& layer : layers) {
    total += layer.size();
    for (const Pt& p : layer)
      for (const Pt& q : layer) {
        CHECK(!dominates(DomOrder::Incr, p, q));
      }
  }
  CHECK(total <= pts.size());
  // earlier layers dominate later removals: each later point has a
  // predecessor in the previous layer
  for (size_t li = 1; li < layers.size(); ++li)
    for (const Pt& p : layers[li]) {
      bool has_pred = false;
      for (const Pt& q : layers[li - 1])
        if (dominates(DomOrder::Incr, q, p)) has_pred = true;
      CHECK(has_pred);
    }
}

TEST_CASE("longest_chain matches quadratic reference and is a chain") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto pts = normalize_points(random_points(45, 500 + seed));
    for (DomOrder o : {DomOrder::Incr, DomOrder::Decr}) {
      auto chain = longest_chain(o, pts);
      CHECK(is_chain(o, chain));
      CHECK((int)chain.size() == brute_chain_len(o, pts));
    }
  }
}

TEST_CASE("longest_chain_below respects the limit") {
  auto pts = normalize_points(random_points(40, 9));
  Pt limit = pts[17];
  auto chain = longest_chain_below(DomOrder::Incr, pts, limit);
  CHECK(is_chain(DomOrder::Incr, chain));
  for (const Pt& p : chain) CHECK(dominates(DomOrder::Incr, p, limit));
  // reference: brute chain among dominated points
  std::vector<Pt> dominated;
  for (const Pt& p : pts)
    if (dominates(DomOrder::Incr, p, limit)) dominated.push_back(p);
  CHECK((int)chain.size() == brute_chain_len(DomOrder::Incr, dominated));
}

TEST_CASE("split_by_half_grid stops at the highest feasible line") {
  auto pts = normalize_points(random_points(30, 77));
  for (size_t need = 1; need <= 10; ++need) {
    i64 apex = 15;  // odd: strictly between ranks
    auto sp = split_by_half_grid(pts, apex, need, SweepSide::Either);
    CHECK(sp.h % 2 != 0);
    size_t won =
        sp.winner == SweepSide::Left ? sp.left.size() : sp.right.size();
    CHECK(won == need);
    CHECK(sp.left.size() + sp.right.size() + sp.below.size() == pts.size());
    for (const Pt& p : sp.left) {
      CHECK(p.y > sp.h);
      CHECK(p.x < apex);
    }
    for (const Pt& p : sp.right) {
      CHECK(p.y > sp.h);
      CHECK(p.x > apex);
    }
    for (const Pt& p : sp.below) CHECK(p.y < sp.h);
    // highest line: one step up, neither side has `need` points yet
    size_t l2 = 0, r2 = 0;
    for (const Pt& p : pts)
      if (p.y > sp.h + 2) (p.x < apex ? l2 : r2)++;
    CHECK(l2 < need);
    CHECK(r2 < need);
  }
}

TEST_CASE("split_by_half_grid one-sided") {
  auto pts = normalize_points(random_points(30, 78));
  auto sp = split_by_half_grid(pts, 29, 5, SweepSide::Left);
  CHECK(sp.left.size() == 5);
  CHECK(sp.winner == SweepSide::Left);
  CHECK_THROWS_AS(split_by_half_grid(pts, 1, 5, SweepSide::Left),
                  GeometryError);  // no room left of x=1
}

TEST_CASE("symmetries compose with their inverses") {
  auto pts = normalize_points(random_points(20, 5));
  std::vector<Symmetry> all = {Symmetry::identity(),  Symmetry::rot180(),
                               Symmetry::reflect_x(), Symmetry::reflect_y(),
                               Symmetry::swap_xy(),   Symmetry::right_to_down()};
  for (Symmetry s : all) {
    s.tx = 12;
    s.ty = -8;
    auto there = apply_symmetry(s, pts);
    auto back = apply_symmetry(s.inverse(), there);
    CHECK(back == pts);
    CHECK_NOTHROW(assert_general_position(there));
  }
  CHECK(Symmetry::swap_xy().swaps_axes());
  CHECK(!Symmetry::rot180().swaps_axes());
}

TEST_CASE("rect is closed-low open-high") {
  Rect r{0, 4, 2, 6};
  CHECK(r.contains({0, 2}));
  CHECK(!r.contains({4, 2}));
  CHECK(!r.contains({0, 6}));
  CHECK(Rect{}.contains({123456, -98765}));
}

TEST_CASE("extreme point helpers") {
  std::vector<Pt> pts = {{0, 4}, {2, 0}, {4, 6}, {6, 2}};
  CHECK(bottommost(pts) == Pt{2, 0});
  CHECK(topmost(pts) == Pt{4, 6});
  CHECK(leftmost(pts) == Pt{0, 4});
  CHECK(rightmost(pts) == Pt{6, 2});
  CHECK(sorted_by_x(pts)[0] == Pt{0, 4});
  CHECK(sorted_by_y(pts)[0] == Pt{2, 0});
}
