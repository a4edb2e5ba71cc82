#pragma once
// Exact integer planar geometry on normalized even grids.
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortho {

using i64 = long long;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Pt {
  i64 x = 0;
  i64 y = 0;
  bool operator==(const Pt&) const = default;
};

// Exact rational coordinate p/q, q > 0. Used only at load time.
struct Rat {
  i64 p = 0;
  i64 q = 1;
};
int rat_cmp(const Rat& a, const Rat& b);
Rat parse_rat(const std::string& tok);

// A point set in general orthogonal position, normalized so coordinates are
// the even integers 0,2,4,... of the x/y ranks. Half-grid lines are odd.
struct PointSet {
  std::vector<Pt> pts;  // normalized coordinates

  std::size_t size() const { return pts.size(); }
  const Pt& operator[](std::size_t i) const { return pts[i]; }
};

// Parses "x y" per line ('#' comments, blanks skipped), coordinates are
// integers or fractions p/q. Throws InputError on malformed input or if two
// points share an x- or y-coordinate.
PointSet load_points_text(const std::string& text);
std::string save_points_text(const PointSet& ps);

// Rank-normalizes arbitrary exact points: result coordinate = 2 * rank.
PointSet normalize_points(const std::vector<std::pair<Rat, Rat>>& raw);
std::vector<Pt> normalize_points(const std::vector<Pt>& raw);

// Throws GeometryError if any two points share an x or y coordinate.
void assert_general_position(const std::vector<Pt>& pts);

// Axis-aligned open/closed query rectangle; lo is closed, hi is open.
// RECT_INF sentinels mean unbounded.
constexpr i64 RECT_INF = std::numeric_limits<i64>::max() / 4;
struct Rect {
  i64 xlo = -RECT_INF, xhi = RECT_INF;  // [xlo, xhi)
  i64 ylo = -RECT_INF, yhi = RECT_INF;  // [ylo, yhi)
  bool contains(const Pt& p) const {
    return p.x >= xlo && p.x < xhi && p.y >= ylo && p.y < yhi;
  }
};

// One of the 8 signed-permutation matrices (a b; c d), det = +-1, optionally
// followed by a translation: p -> S*p + t.
struct Symmetry {
  int a = 1, b = 0, c = 0, d = 1;
  i64 tx = 0, ty = 0;

  Pt operator()(const Pt& p) const {
    return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
  }
  bool swaps_axes() const { return b != 0; }
  Symmetry inverse() const;
  static Symmetry identity() { return {}; }
  static Symmetry rot180() { return {-1, 0, 0, -1, 0, 0}; }
  static Symmetry reflect_x() { return {-1, 0, 0, 1, 0, 0}; }  // x -> -x
  static Symmetry reflect_y() { return {1, 0, 0, -1, 0, 0}; }  // y -> -y
  // (x,y) -> (y,x): maps a leftward ray to a downward ray.
  static Symmetry swap_xy() { return {0, 1, 1, 0, 0, 0}; }
  // (x,y) -> (y,-x): maps a rightward ray to a downward ray.
  static Symmetry right_to_down() { return {0, 1, -1, 0, 0, 0}; }
};
std::vector<Pt> apply_symmetry(const Symmetry& s, const std::vector<Pt>& pts);

// Dominance orders on points. incr: (x1<x2 && y1<y2). decr: (x1<x2 && y1>y2).
enum class DomOrder { Incr, Decr };
bool dominates(DomOrder o, const Pt& lo, const Pt& hi);  // lo "before" hi

// Minimal elements (first layer) of pts under the order; a staircase antichain.
std::vector<Pt> minimal_layer(DomOrder o, const std::vector<Pt>& pts);

// Peels the first `layers` minimal layers; returns them in peel order.
std::vector<std::vector<Pt>> peel_layers(DomOrder o, std::vector<Pt> pts,
                                         int layers);

// Longest chain under the order (ascending or descending staircase),
// returned in x-increasing order. O(n log n).
std::vector<Pt> longest_chain(DomOrder o, std::vector<Pt> pts);

// Longest chain in o ending strictly before `limit` (every chain element
// dominated by limit). Returns chain in x-increasing order.
std::vector<Pt> longest_chain_below(DomOrder o, const std::vector<Pt>& pts,
                                    const Pt& limit);

// Sweeps a horizontal half-grid line downward from above all of ps. Stops at
// the highest line h such that the requested side of the vertical line
// x = apex_x has `need` points above h. side=either stops as soon as either
// side reaches `need`. Throws GeometryError if the sweep cannot finish.
enum class SweepSide { Left, Right, Either };
struct HalfGridSplit {
  i64 h = 0;                // odd line; Q_L/Q_R strictly above, Q_B below
  std::vector<Pt> left;     // above h, x < apex_x
  std::vector<Pt> right;    // above h, x > apex_x
  std::vector<Pt> below;    // below h
  SweepSide winner = SweepSide::Left;
};
HalfGridSplit split_by_half_grid(const std::vector<Pt>& pts, i64 apex_x,
                                 std::size_t need, SweepSide side);

// Small helpers.
std::vector<Pt> sorted_by_x(std::vector<Pt> pts);
std::vector<Pt> sorted_by_y(std::vector<Pt> pts);
Pt bottommost(const std::vector<Pt>& pts);
Pt topmost(const std::vector<Pt>& pts);
Pt leftmost(const std::vector<Pt>& pts);
Pt rightmost(const std::vector<Pt>& pts);

}  // namespace ortho
