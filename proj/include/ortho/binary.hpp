#pragma once
// Embedder for trees of max degree 3 on point sets in general orthogonal
// position, using the F/G configuration recursion.
#include <vector>

#include "ortho/drawing.hpp"
#include "ortho/tree.hpp"

namespace ortho {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which recursion attains the f-budget at a node.
enum class FChoice { Leaf, F1, F1P, Comb, F2 };

// Point budgets, hat form: fhat[v] points suffice to draw the subtree at v in
// an f-configuration (apex ray from above), ghat[v] in a g-configuration,
// gnr[v] in a g-configuration whose vertical ray is unavailable.
struct BinaryBudgets {
  std::vector<long long> fhat, ghat, gnr;
  std::vector<FChoice> fchoice;
  std::vector<bool> g_as_f;  // ghat attained by drawing in f-configuration
};

// Requires every node of t to have at most 2 children.
BinaryBudgets compute_budgets(const RootedTree& t);

struct BinaryStats {
  long long f1 = 0, f1p = 0, g = 0;
  long long f2_lucky = 0, f2_unlucky = 0, f2_diagonal = 0;
};

// Drawing configuration for draw_in_config.
struct DrawConfig {
  bool g_config = false;  // false: f-configuration
  long long x = 0;        // apex x (f) or parent x (g)
  bool has_vertical = true;  // g only: vertical ray from parent usable
};

// Draws all of t (rooted, every node <= 2 children) on a subset of pts in the
// given configuration. No parent edge is emitted. Throws BudgetError when the
// construction runs out of points.
Drawing draw_in_config(const RootedTree& t, const std::vector<Pt>& pts,
                       const DrawConfig& cfg, BinaryStats* stats = nullptr);

// Top-level embedding: re-roots t at its lowest-id leaf, draws in a virtual
// f-configuration with the apex right of the topmost point. t must have max
// degree <= 3 and |pts| >= fhat(re-rooted root).
Drawing embed_binary(const RootedTree& t, const std::vector<Pt>& pts,
                     BinaryStats* stats = nullptr);

}  // namespace ortho
