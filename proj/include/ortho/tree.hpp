#pragma once
// Rooted trees with bounded degree, ordered trees, caterpillar shapes.
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortho {

struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rooted tree; node ids are 0..n-1 in parse (preorder) order.
struct RootedTree {
  int root = 0;
  std::vector<int> parent;                 // parent[root] == -1
  std::vector<std::vector<int>> children;  // in canonical order after finalize

  int n() const { return (int)parent.size(); }
  int degree(int v) const {
    return (int)children[v].size() + (parent[v] >= 0 ? 1 : 0);
  }
  int max_degree() const;
  // Number of nodes in the subtree rooted at v (computed, not cached).
  int subtree_size(int v) const;
  std::vector<int> subtree_sizes() const;  // size[v] for all v
  // Sorts every child list by (subtree size, node id) ascending.
  void canonicalize();
  // Returns the same tree re-rooted at new_root (ids preserved).
  RootedTree rerooted(int new_root) const;
  void check_degree_cap(int cap) const;  // throws TreeError
};

// Parses the parenthesis format: a tree is "( child* )".
RootedTree parse_tree(const std::string& text);
std::string serialize_tree(const RootedTree& t);

// Level chain for the ternary decomposition: r0 = root; at each level the
// children of r_{i-1} sorted by subtree size are a_i <= b_i <= r_i. k >= 2 is
// the first level with 10*|r_k| <= 9*|r_{k-1}| (missing children count 0).
struct LevelChain {
  int k = 0;
  std::vector<int> r;                     // r[0..k], -1 for an absent node
  std::vector<int> a, b;                  // a[i], b[i] for i = 1..k (index i-1)
  std::vector<int> na, nb, nr;            // subtree sizes (0 for absent)
};
LevelChain find_level_k(const RootedTree& t);

// Tree with a cyclic order of neighbors around every node (ccw).
struct OrderedTree {
  int root = 0;
  std::vector<std::vector<int>> cyclic;  // cyclic[v] = neighbor ids, ccw

  int n() const { return (int)cyclic.size(); }
  RootedTree to_rooted() const;
};
std::string ordered_tree_to_json(const OrderedTree& t);
OrderedTree ordered_tree_from_json(const std::string& json_text);

// A caterpillar: a spine path, each spine vertex with some leaves. In the
// top-view variant every internal spine vertex has its two leaves on
// opposite sides of the spine.
struct CaterpillarShape {
  // leaves_per_spine[i] = number of leaves at spine vertex i.
  std::vector<int> leaves_per_spine;

  int spine_len() const { return (int)leaves_per_spine.size(); }
  int n() const;
};

// Ordering of an internal spine vertex's cyclic neighborhood:
//   TV  = (prev, leaf, next, leaf)  -- leaves on opposite sides (top-view)
//   NTV = (prev, next, leaf, leaf)  -- spine neighbors adjacent
enum class SpineOrdering { TV, NTV };

// Builds an OrderedTree from the shape. ordering[i] applies to internal
// spine vertex i (entries for endpoints are ignored). Node ids: spine
// vertices first (0..L-1), then leaves grouped by spine vertex.
OrderedTree build_top_view_caterpillar(const CaterpillarShape& shape,
                                       const std::vector<SpineOrdering>& ordering);

// C14: spine of 4 degree-4 vertices (endpoints 3 leaves, internal 2 leaves).
CaterpillarShape c14_shape();

}  // namespace ortho
