#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "ortho/drawing.hpp"
#include "ortho/tree.hpp"

using namespace ortho;

namespace {

// path 0-1-2 drawn without conflicts
Drawing valid_path3() {
  Drawing d;
  d.tree = parse_tree("((()))");
  d.pos = {{0, 0}, {2, 4}, {4, 2}};
  d.edges = {{0, 1, Bend::HV}, {1, 2, Bend::HV}};
  return d;
}

// root 0 with children 1..4 leaving through ports R, U, L, D
Drawing valid_star4() {
  Drawing d;
  d.tree = parse_tree("(()()()())");
  d.pos = {{4, 4}, {8, 6}, {6, 8}, {0, 2}, {2, 0}};
  d.edges = {{0, 1, Bend::HV},
             {0, 2, Bend::VH},
             {0, 3, Bend::HV},
             {0, 4, Bend::VH}};
  return d;
}

}  // namespace

TEST_CASE("edge segments and ports") {
  Drawing d = valid_path3();
  auto segs = edge_segments(d, 0);  // (0,0) -H-> (2,0) -V-> (2,4)
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].horiz);
  CHECK(segs[0].a == Pt{0, 0});
  CHECK(segs[0].b == Pt{2, 0});
  CHECK(!segs[1].horiz);
  CHECK(segs[1].a == Pt{2, 0});
  CHECK(segs[1].b == Pt{2, 4});
  CHECK(all_segments(d).size() == 4);

  CHECK(port_at(d, 0, 0) == Port::R);
  CHECK(port_at(d, 0, 1) == Port::D);  // arrives from below
  CHECK(port_at(d, 1, 1) == Port::R);
  CHECK(port_at(d, 1, 2) == Port::U);
}

TEST_CASE("validate accepts clean drawings") {
  CHECK(validate(valid_path3()).ok);
  CHECK(validate(valid_star4()).ok);
}

TEST_CASE("validate rejects coordinate collisions") {
  Drawing d = valid_path3();
  d.pos[2].y = d.pos[0].y;  // shared y
  CHECK(!validate(d).ok);
}

TEST_CASE("validate rejects segment overlap") {
  Drawing d = valid_path3();
  // VH out of node 1 runs back down the vertical of edge 0
  d.edges[1].bend = Bend::VH;
  auto rep = validate(d);
  CHECK(!rep.ok);
  CHECK(!rep.violations.empty());
}

TEST_CASE("validate rejects a proper crossing") {
  Drawing d;
  d.tree = parse_tree("(((())))");  // path 0-1-2-3
  d.pos = {{0, 6}, {10, 0}, {8, 4}, {4, 8}};
  d.edges = {{0, 1, Bend::HV}, {1, 2, Bend::HV}, {2, 3, Bend::VH}};
  // edge 0's horizontal at y=6 crosses edge 2's vertical at x=8
  CHECK(!validate(d).ok);
}

TEST_CASE("validate rejects edges that are not the tree edges") {
  Drawing d = valid_path3();
  d.edges[1] = {0, 2, Bend::HV};
  CHECK(!validate(d).ok);
}

TEST_CASE("validate rejects two edges on the same port") {
  Drawing d;
  d.tree = parse_tree("(()())");
  d.pos = {{0, 0}, {4, 2}, {6, 4}};
  d.edges = {{0, 1, Bend::HV}, {0, 2, Bend::HV}};  // both leave through R
  CHECK(!validate(d).ok);
}

TEST_CASE("realized cyclic order is counterclockwise by port") {
  Drawing d = valid_star4();
  CHECK(realized_cyclic_order(d, 0) == std::vector<int>{1, 2, 3, 4});
  OrderedTree ot = extract_ordered_tree(d);
  CHECK(ot.cyclic[0] == std::vector<int>{1, 2, 3, 4});
  CHECK(ot.cyclic[1] == std::vector<int>{0});
}

TEST_CASE("ordered validation allows rotation and global reflection") {
  Drawing d = valid_star4();
  OrderedTree ot = extract_ordered_tree(d);
  CHECK(validate(d, &ot).ok);

  OrderedTree rot = ot;
  rot.cyclic[0] = {2, 3, 4, 1};
  CHECK(validate(d, &rot).ok);

  OrderedTree refl = ot;
  refl.cyclic[0] = {4, 3, 2, 1};
  CHECK(validate(d, &refl).ok);

  OrderedTree bad = ot;
  bad.cyclic[0] = {1, 3, 2, 4};  // neither rotation nor reflection
  CHECK(!validate(d, &bad).ok);
}

TEST_CASE("reflection must be global, not per vertex") {
  // two degree-3 vertices: adjacent nodes 0 and 1, two leaves each
  Drawing d;
  d.tree = parse_tree("((()())()())");
  // ids: 0 root, 1 = middle, 2,3 = leaves of 1, 4,5 = leaves of 0
  d.pos = {{0, 0}, {10, 10}, {6, 14}, {14, 6}, {2, 4}, {-4, -2}};
  d.edges = {{0, 1, Bend::HV},
             {1, 2, Bend::HV},
             {1, 3, Bend::HV},
             {0, 4, Bend::VH},
             {0, 5, Bend::HV}};
  REQUIRE(validate(d).ok);
  OrderedTree ot = extract_ordered_tree(d);
  REQUIRE(validate(d, &ot).ok);
  // reflecting both vertices still matches
  OrderedTree both = ot;
  std::reverse(both.cyclic[0].begin(), both.cyclic[0].end());
  std::reverse(both.cyclic[1].begin(), both.cyclic[1].end());
  CHECK(validate(d, &both).ok);
  // reflecting only one of them must not
  OrderedTree one = ot;
  std::reverse(one.cyclic[1].begin(), one.cyclic[1].end());
  CHECK(!validate(d, &one).ok);
}

TEST_CASE("all eight symmetries preserve validity") {
  Drawing d = valid_star4();
  std::vector<Symmetry> base = {Symmetry::identity(), Symmetry::rot180(),
                                Symmetry::reflect_x(), Symmetry::reflect_y(),
                                Symmetry::swap_xy(), Symmetry::right_to_down()};
  // the remaining two signed permutations
  base.push_back({0, -1, 1, 0, 0, 0});
  base.push_back({0, -1, -1, 0, 0, 0});
  for (Symmetry s : base) {
    s.tx = 100;
    s.ty = -40;
    Drawing m = apply_symmetry(s, d);
    CHECK(validate(m).ok);
    for (int v = 0; v < 5; ++v) CHECK(m.pos[v] == s(d.pos[v]));
  }
}

TEST_CASE("drawing json round trip") {
  Drawing d = valid_star4();
  Drawing back = drawing_from_json(drawing_to_json(d));
  CHECK(back.pos == d.pos);
  REQUIRE(back.edges.size() == d.edges.size());
  for (size_t i = 0; i < d.edges.size(); ++i) {
    CHECK(back.edges[i].u == d.edges[i].u);
    CHECK(back.edges[i].v == d.edges[i].v);
    CHECK(back.edges[i].bend == d.edges[i].bend);
  }
  CHECK(serialize_tree(back.tree) == serialize_tree(d.tree));
}

TEST_CASE("svg render emits markup for every node and edge") {
  Drawing d = valid_star4();
  std::string svg = render_svg(d);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 5);
}
