#pragma once
// Planar one-bend orthogonal drawings of trees, validation, serialization.
#include <string>
#include <vector>

#include "ortho/geometry.hpp"
#include "ortho/tree.hpp"

namespace ortho {

// Bend of an L-shaped edge, seen from the parent endpoint u: HV means the
// first segment out of u is horizontal, VH vertical.
enum class Bend { HV, VH };
inline Bend flip(Bend b) { return b == Bend::HV ? Bend::VH : Bend::HV; }

struct EdgeDraw {
  int u = -1;  // parent
  int v = -1;  // child
  Bend bend = Bend::HV;
};

struct Drawing {
  RootedTree tree;
  std::vector<Pt> pos;  // by node id
  std::vector<EdgeDraw> edges;
};

// Axis-parallel segment with a <= b lexicographically; horiz tells the axis.
struct Seg {
  Pt a, b;
  bool horiz = true;
  int edge = -1;  // index into Drawing::edges
};
// The two segments of an edge; zero-length parts are dropped (cannot happen
// in general position).
std::vector<Seg> edge_segments(const Drawing& d, int edge_index);
std::vector<Seg> all_segments(const Drawing& d);

// Port = direction of the first segment of an edge out of a node.
enum class Port { R, U, L, D };
Port port_at(const Drawing& d, int edge_index, int node);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

// Checks: placements in general position, edges match the tree, one bend per
// edge, no crossings or overlaps (single-point contact only at a shared
// node), no node on a foreign segment, distinct ports per node. If `ordered`
// is given, additionally checks that realized ccw cyclic orders match the
// prescription up to rotation plus one global reflection.
ValidationReport validate(const Drawing& d, const OrderedTree* ordered = nullptr);

// Realized ccw neighbor order (R,U,L,D port order) of node v.
std::vector<int> realized_cyclic_order(const Drawing& d, int v);
// The ordered tree realized by a drawing.
OrderedTree extract_ordered_tree(const Drawing& d);

// Applies a symmetry to every placement (bends flip if axes swap).
Drawing apply_symmetry(const Symmetry& s, Drawing d);

std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& json_text);
std::string render_svg(const Drawing& d);

}  // namespace ortho
