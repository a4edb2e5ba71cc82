#pragma once
// Straight-through paths and top-view caterpillars on few points: recursive
// halving with staircase escapes and dominance-layer joins.
#include <vector>

#include "ortho/drawing.hpp"
#include "ortho/tree.hpp"

namespace ortho {

// Point budget sufficient for the n-vertex x-monotone straight-through path.
long long path_points_budget(int n);
// Point budget sufficient for an n-node top-view caterpillar.
long long caterpillar_points_budget(int n);

struct StraightThroughDrawing {
  Drawing drawing;
  bool straight_through = false;  // edges collinear at every inner vertex
  bool x_monotone = false;        // x strictly increases along the path
};

// Draws the path 0-1-...-n-1 x-monotone and straight-through, starting with
// a horizontal segment. |pts| >= path_points_budget(n) guarantees success.
StraightThroughDrawing embed_monotone_path(int n, const std::vector<Pt>& pts);

// Draws the top-view caterpillar (node ids as in build_top_view_caterpillar
// with every internal ordering TV), spine straight-through.
// |pts| >= caterpillar_points_budget(shape.n()) guarantees success.
Drawing embed_top_view_caterpillar(const CaterpillarShape& shape,
                                   const std::vector<Pt>& pts);

}  // namespace ortho
