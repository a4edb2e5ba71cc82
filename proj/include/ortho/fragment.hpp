#pragma once
// Partial drawing produced by embedder recursions.
#include <vector>

#include "ortho/drawing.hpp"

namespace ortho {

struct Fragment {
  std::vector<std::pair<int, Pt>> pos;  // (node id, placement)
  std::vector<EdgeDraw> edges;

  void place(int node, Pt p) { pos.push_back({node, p}); }
  void edge(int u, int v, Bend b) { edges.push_back({u, v, b}); }
  void transform(const Symmetry& s) {
    for (auto& [id, p] : pos) p = s(p);
    if (s.swaps_axes())
      for (EdgeDraw& e : edges) e.bend = flip(e.bend);
  }
  void merge(Fragment&& other) {
    for (auto& pr : other.pos) pos.push_back(pr);
    for (auto& e : other.edges) edges.push_back(e);
  }
};

}  // namespace ortho
