#pragma once
// Embedder for trees of max degree 4, via the level decomposition of the
// heavy chain.
#include <vector>

#include "ortho/binary.hpp"  // BudgetError
#include "ortho/drawing.hpp"
#include "ortho/tree.hpp"

namespace ortho {

struct TernaryBudgets {
  std::vector<long long> fhat;   // points sufficient in an f-configuration
  std::vector<bool> use_chain;   // budget attained by the level construction
};

// Requires every node of t to have at most 3 children.
TernaryBudgets compute_budgets_ternary(const RootedTree& t);

struct TernaryStats {
  long long f4_1 = 0;                      // direct split construction
  long long a = 0, b1 = 0, b2 = 0, b3 = 0; // level-construction end cases
};

// Top-level embedding: re-roots t at its lowest-id leaf and draws in a
// virtual f-configuration. t must have max degree <= 4 and
// |pts| >= fhat(re-rooted root).
Drawing embed_ternary(const RootedTree& t, const std::vector<Pt>& pts,
                      TernaryStats* stats = nullptr);

}  // namespace ortho
