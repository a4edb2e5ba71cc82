#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ortho/geometry.hpp"
#include "ortho/tree.hpp"

namespace ortho {

using u64 = std::uint64_t;

enum class PointStyle { Uniform, Diagonal, Staircases, Fig2B, Fig2C, P14 };
PointStyle point_style_from_name(const std::string& name);

// n points in general orthogonal position (rank coordinates 1..n).
//   uniform    : random y-permutation
//   diagonal   : ascending diagonal
//   staircases : random ascending sequence of descending runs
//   fig2b      : guarded zigzag; its longest x-monotone straight-through
//                path has n/2 + 1 vertices (n even)
//   fig2c      : fig2b rotated by 180 degrees
//   p14        : the fixed 14-point instance (three descending runs 4/6/4)
std::vector<Pt> gen_points(PointStyle style, int n, u64 seed);

enum class TreeShapeKind { Random, Perfect, Caterpillar, C14Shape };
TreeShapeKind tree_shape_from_name(const std::string& name);

// Random tree with max node degree `degree_cap` (perfect: n = 2^k - 1;
// c14-shape: n must be 14).
RootedTree gen_tree(TreeShapeKind shape, int n, int degree_cap, u64 seed);

// Caterpillar shape with spine leaves within the degree cap (<= 2 internal,
// <= 3 at the ends for cap 4).
CaterpillarShape gen_caterpillar_shape(int n, int degree_cap, u64 seed);

}  // namespace ortho
