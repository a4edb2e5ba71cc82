#pragma once
// Drawing any tree of max degree 4 on a diagonal point set (a chain that is
// strictly monotone in both coordinates).
#include <vector>

#include "ortho/fragment.hpp"
#include "ortho/tree.hpp"

namespace ortho {

// Direction from which the parent edge enters the subtree root (the port of
// the root the parent edge uses). None = the node is the global root.
enum class DiagEntry { None, Up, Down, Left, Right };

// Places the subtree rooted at v of t on chain[lo..hi] (ascending diagonal:
// both coordinates strictly increasing with the index). size must be the
// subtree-size table of t. Appends to out and returns the index in
// [lo, hi] where v itself was placed.
int diag_place(const RootedTree& t, const std::vector<int>& size, int v,
               const std::vector<Pt>& chain, int lo, int hi, DiagEntry entry,
               Fragment& out);

// Draws all of t on the diagonal point set pts (|pts| == t.n(), monotone in
// both coordinates, ascending or descending). If need_upward_visibility is
// set, the root's U port stays unused and the vertical ray going up from the
// root hits no drawn geometry; this requires the root to have at most 3
// children.
Drawing embed_on_diagonal(const RootedTree& t, const std::vector<Pt>& pts,
                          bool need_upward_visibility = false);

}  // namespace ortho
