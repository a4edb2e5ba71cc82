#pragma once

#include <stdexcept>
#include <vector>

#include "ortho/drawing.hpp"
#include "ortho/tree.hpp"

namespace ortho {

// Exhaustive feasibility search refuses instances above this size.
constexpr int ORACLE_MAX_N = 16;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Feas { Feasible, Infeasible, Unknown };

struct SearchStats {
  Feas result = Feas::Unknown;
  long long nodes_expanded = 0;
  long long prunes = 0;
  double elapsed_sec = 0;
  Drawing witness;  // meaningful only when result == Feasible
};

// Complete search over node-to-point assignments and per-edge bends.
// Infeasible is reported only after the whole space was exhausted; with a
// node budget >= 0 a truncated search reports Unknown instead.
SearchStats exists_drawing(const RootedTree& t, const std::vector<Pt>& pts,
                           long long node_budget = -1);

// Same, but the realized cyclic order at every node must match t's
// prescription up to rotation and one global reflection.
SearchStats exists_drawing_ordered(const OrderedTree& t,
                                   const std::vector<Pt>& pts,
                                   long long node_budget = -1);

struct OrderingClassResult {
  std::vector<SpineOrdering> ordering;  // per spine vertex; endpoints are TV
  SearchStats stats;
};

// Enumerates the distinct cyclic-order classes of the caterpillar shape
// (TV/NTV per internal spine vertex, deduplicated under spine reversal when
// the shape is palindromic) and decides each with the ordered search.
std::vector<OrderingClassResult> enumerate_orderings_and_test(
    const CaterpillarShape& shape, const std::vector<Pt>& pts,
    long long node_budget = -1);

// Brute force with no pruning: every injective assignment, every bend
// vector, full validate() on each candidate. Reference for tiny n.
bool naive_exists_drawing(const RootedTree& t, const std::vector<Pt>& pts);

}  // namespace ortho
