#include "ortho/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ortho {
namespace {

std::mt19937_64 rng_for(u64 seed) { return std::mt19937_64(seed); }

std::vector<Pt> from_permutation(const std::vector<int>& ranks) {
  std::vector<Pt> pts;
  for (int i = 0; i < (int)ranks.size(); ++i)
    pts.push_back({i + 1, ranks[i] + 1});
  return pts;
}

}  // namespace

PointStyle point_style_from_name(const std::string& name) {
  if (name == "uniform") return PointStyle::Uniform;
  if (name == "diagonal") return PointStyle::Diagonal;
  if (name == "staircases") return PointStyle::Staircases;
  if (name == "fig2b") return PointStyle::Fig2B;
  if (name == "fig2c") return PointStyle::Fig2C;
  if (name == "p14") return PointStyle::P14;
  throw InputError("unknown point style: " + name);
}

std::vector<Pt> gen_points(PointStyle style, int n, u64 seed) {
  if (n <= 0) throw InputError("point count must be positive");
  auto rng = rng_for(seed);
  switch (style) {
    case PointStyle::Uniform: {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      return from_permutation(perm);
    }
    case PointStyle::Diagonal: {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      return from_permutation(perm);
    }
    case PointStyle::Staircases: {
      // random descending runs stacked upward
      std::vector<int> perm;
      int placed = 0;
      while (placed < n) {
        int run = 1 + (int)(rng() % 5);
        run = std::min(run, n - placed);
        for (int i = 0; i < run; ++i)
          perm.push_back(placed + run - 1 - i);
        placed += run;
      }
      return from_permutation(perm);
    }
    case PointStyle::Fig2B: {
      if (n % 2) throw InputError("fig2b needs an even point count");
      std::vector<int> perm(n);
      perm[0] = 0;
      perm[n - 1] = n - 1;
      for (int j = 1; 2 * j < n; ++j) {
        perm[2 * j - 1] = 2 * j;      // position 2j holds rank 2j+1
        if (2 * j < n - 1) perm[2 * j] = 2 * j - 1;
      }
      return from_permutation(perm);
    }
    case PointStyle::Fig2C: {
      std::vector<Pt> b = gen_points(PointStyle::Fig2B, n, seed);
      std::vector<Pt> out;
      for (const Pt& p : b) out.push_back({n + 1 - p.x, n + 1 - p.y});
      return sorted_by_x(out);
    }
    case PointStyle::P14: {
      if (n != 14) throw InputError("p14 is a fixed 14-point instance");
      std::vector<Pt> pts;
      for (int i = 0; i < 4; ++i) pts.push_back({1 + i, 4 - i});
      for (int i = 0; i < 6; ++i) pts.push_back({5 + i, 10 - i});
      for (int i = 0; i < 4; ++i) pts.push_back({11 + i, 14 - i});
      return pts;
    }
  }
  throw InputError("unknown point style");
}

TreeShapeKind tree_shape_from_name(const std::string& name) {
  if (name == "random") return TreeShapeKind::Random;
  if (name == "perfect") return TreeShapeKind::Perfect;
  if (name == "caterpillar") return TreeShapeKind::Caterpillar;
  if (name == "c14-shape") return TreeShapeKind::C14Shape;
  throw InputError("unknown tree shape: " + name);
}

CaterpillarShape gen_caterpillar_shape(int n, int degree_cap, u64 seed) {
  if (n < 2) throw InputError("caterpillar needs at least 2 nodes");
  auto rng = rng_for(seed);
  int max_internal = degree_cap - 2, max_end = degree_cap - 1;
  CaterpillarShape shape;
  shape.leaves_per_spine = {0, 0};  // grow from a bare 2-spine
  int have = 2;
  while (have < n) {
    int i = (int)(rng() % shape.leaves_per_spine.size());
    int cap = (i == 0 || i + 1 == (int)shape.leaves_per_spine.size())
                  ? max_end
                  : max_internal;
    if (shape.leaves_per_spine[i] < cap && rng() % 2) {
      ++shape.leaves_per_spine[i];
      ++have;
    } else {
      shape.leaves_per_spine.push_back(0);
      ++have;
    }
  }
  return shape;
}

RootedTree gen_tree(TreeShapeKind shape, int n, int degree_cap, u64 seed) {
  if (n <= 0) throw InputError("tree size must be positive");
  auto rng = rng_for(seed);
  RootedTree t;
  switch (shape) {
    case TreeShapeKind::Random: {
      if (degree_cap < 2 && n > 1) throw InputError("degree cap too small");
      t.parent.assign(n, -1);
      t.children.assign(n, {});
      for (int v = 1; v < n; ++v) {
        int u;
        do {
          u = (int)(rng() % v);
        } while (t.degree(u) >= degree_cap);
        t.parent[v] = u;
        t.children[u].push_back(v);
      }
      break;
    }
    case TreeShapeKind::Perfect: {
      if ((n + 1) & n) throw InputError("perfect tree needs n = 2^k - 1");
      t.parent.assign(n, -1);
      t.children.assign(n, {});
      for (int v = 1; v < n; ++v) {
        t.parent[v] = (v - 1) / 2;
        t.children[(v - 1) / 2].push_back(v);
      }
      break;
    }
    case TreeShapeKind::Caterpillar: {
      CaterpillarShape cs = gen_caterpillar_shape(n, degree_cap, seed);
      int L = cs.spine_len();
      return build_top_view_caterpillar(
                 cs, std::vector<SpineOrdering>(L, SpineOrdering::TV))
          .to_rooted();
    }
    case TreeShapeKind::C14Shape: {
      if (n != 14) throw InputError("c14-shape has exactly 14 nodes");
      return build_top_view_caterpillar(
                 c14_shape(), std::vector<SpineOrdering>(4, SpineOrdering::TV))
          .to_rooted();
    }
  }
  t.canonicalize();
  return t;
}

}  // namespace ortho
