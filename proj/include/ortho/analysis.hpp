#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortho/geometry.hpp"

namespace ortho {

struct RegionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- induction-step verification ---------------------------------------------

// One convex region with one bound function: value(x) = sum coefs[i]*x[i]^alpha
// in units of c*n^alpha. The induction step needs value + additive < target at
// every extreme point; paper_constant is the intermediate value quoted for the
// point (checked one-sided: our interval upper bound <= constant + 1e-3,
// since several quoted constants carry slack).
struct LinCon {
  std::vector<double> a;
  double b = 0;  // a . x <= b
};

struct ExtremePoint {
  std::vector<double> x;
  double paper_constant = 0;
  bool strict = true;  // false where the bound is attained with equality
};

struct InductionCheck {
  std::string name;
  std::vector<double> coefs;  // may involve beta; resolved numerically
  double additive = 0;        // e.g. 1/c for a "+n" term
  double target = 1.0;
  std::vector<LinCon> region;
  std::vector<ExtremePoint> points;
};

struct RecurrenceSpec {
  std::string name;
  double alpha = 0, beta = 0, c = 0;  // beta = 1/(2^alpha - 1) when relevant
  std::vector<InductionCheck> checks;
};

std::vector<RecurrenceSpec> builtin_recurrence_specs();
RecurrenceSpec recurrence_spec_from_json(const std::string& json_text);

struct PointReport {
  std::string check;
  std::vector<double> x;
  double value_lo = 0, value_hi = 0;  // outward-rounded interval
  double paper_constant = 0;
  bool matches_paper = false;  // value_hi <= paper_constant + 1e-3
  bool induction_ok = false;   // value + additive below target (whole interval)
  bool pass = false;
};

// Throws RegionViolation if an extreme point breaks its region constraints.
std::vector<PointReport> verify_induction(const RecurrenceSpec& spec);

// --- worst-case recurrence sweeps ---------------------------------------------

struct BinaryDP {
  std::vector<i64> f, g, gnr;  // index = subtree size
};

// Worst case of the implemented binary budget recursions over all child-size
// splits; f[n] dominates compute_budgets on any binary tree with n nodes.
BinaryDP dp_worst_case_binary(int max_n);

// Same for the degree-4 budgets.
std::vector<i64> dp_worst_case_ternary(int max_n);

// Budgets of the perfect binary tree of each height 0..max_height
// (n = 2^(h+1) - 1), as (n, fhat) pairs.
std::vector<std::pair<i64, i64>> dp_perfect_binary(int max_height);

// --- extremal DPs --------------------------------------------------------------

struct MonoPathResult {
  int length = 0;
  std::vector<Pt> witness;  // vertex positions in path order
};

// Exact maximum vertex count of an x-monotone straight-through path on pts.
MonoPathResult longest_monotone_straight_through(const std::vector<Pt>& pts);

struct ThreeGoodResult {
  int length = 0;
  std::vector<int> witness;  // subsequence values
};

// Longest subsequence decomposable into alternating increasing/decreasing
// runs of length >= 3 sharing junction elements. 0 if none exists.
ThreeGoodResult longest_three_good_subsequence(const std::vector<int>& seq);

// --- empirical point-budget benchmark ------------------------------------------

struct BenchRow {
  int n = 0;
  i64 min_points = 0;
};

struct BenchTable {
  std::vector<BenchRow> rows;
  double fitted_exponent = 0;  // least-squares slope of log m over log n
};

// For each n, smallest m such that attempt(n, gen(m, seed)) succeeds on
// >= 95% of seeds.
BenchTable bench_point_budget(
    const std::function<bool(int, const std::vector<Pt>&)>& attempt,
    const std::vector<int>& sizes, int seeds,
    const std::function<std::vector<Pt>(int, unsigned long long)>& gen);

}  // namespace ortho
