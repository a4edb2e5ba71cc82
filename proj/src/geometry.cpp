#include "ortho/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace ortho {

int rat_cmp(const Rat& a, const Rat& b) {
  __int128 lhs = (__int128)a.p * b.q;
  __int128 rhs = (__int128)b.p * a.q;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Rat parse_rat(const std::string& tok) {
  auto slash = tok.find('/');
  Rat r;
  try {
    if (slash == std::string::npos) {
      r.p = std::stoll(tok);
      r.q = 1;
    } else {
      r.p = std::stoll(tok.substr(0, slash));
      r.q = std::stoll(tok.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw InputError("bad coordinate token: " + tok);
  }
  if (r.q == 0) throw InputError("zero denominator: " + tok);
  if (r.q < 0) {
    r.p = -r.p;
    r.q = -r.q;
  }
  return r;
}

PointSet normalize_points(const std::vector<std::pair<Rat, Rat>>& raw) {
  const std::size_t n = raw.size();
  std::vector<std::size_t> ix(n), iy(n);
  std::iota(ix.begin(), ix.end(), 0);
  iy = ix;
  auto cmp = [&](bool by_x) {
    return [&raw, by_x](std::size_t a, std::size_t b) {
      const Rat& ra = by_x ? raw[a].first : raw[a].second;
      const Rat& rb = by_x ? raw[b].first : raw[b].second;
      return rat_cmp(ra, rb) < 0;
    };
  };
  std::sort(ix.begin(), ix.end(), cmp(true));
  std::sort(iy.begin(), iy.end(), cmp(false));
  PointSet ps;
  ps.pts.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && rat_cmp(raw[ix[r - 1]].first, raw[ix[r]].first) == 0)
      throw InputError("points share an x-coordinate");
    if (r > 0 && rat_cmp(raw[iy[r - 1]].second, raw[iy[r]].second) == 0)
      throw InputError("points share a y-coordinate");
    ps.pts[ix[r]].x = 2 * (i64)r;
    ps.pts[iy[r]].y = 2 * (i64)r;
  }
  return ps;
}

std::vector<Pt> normalize_points(const std::vector<Pt>& raw) {
  std::vector<std::pair<Rat, Rat>> rr;
  rr.reserve(raw.size());
  for (const Pt& p : raw) rr.push_back({{p.x, 1}, {p.y, 1}});
  return normalize_points(rr).pts;
}

PointSet load_points_text(const std::string& text) {
  std::vector<std::pair<Rat, Rat>> raw;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string xs, ys;
    if (!(ls >> xs)) continue;
    if (!(ls >> ys)) throw InputError("point line with one coordinate: " + line);
    std::string extra;
    if (ls >> extra) throw InputError("trailing tokens on point line: " + line);
    raw.push_back({parse_rat(xs), parse_rat(ys)});
  }
  return normalize_points(raw);
}

std::string save_points_text(const PointSet& ps) {
  std::ostringstream out;
  for (const Pt& p : ps.pts) out << p.x << ' ' << p.y << '\n';
  return out.str();
}

void assert_general_position(const std::vector<Pt>& pts) {
  std::vector<i64> xs, ys;
  for (const Pt& p : pts) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw GeometryError("two points share an x-coordinate");
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end())
    throw GeometryError("two points share a y-coordinate");
}

Symmetry Symmetry::inverse() const {
  // Inverse of a signed permutation matrix is its transpose.
  Symmetry inv;
  inv.a = a;
  inv.b = c;
  inv.c = b;
  inv.d = d;
  inv.tx = -(inv.a * tx + inv.b * ty);
  inv.ty = -(inv.c * tx + inv.d * ty);
  return inv;
}

std::vector<Pt> apply_symmetry(const Symmetry& s, const std::vector<Pt>& pts) {
  std::vector<Pt> out;
  out.reserve(pts.size());
  for (const Pt& p : pts) out.push_back(s(p));
  return out;
}

bool dominates(DomOrder o, const Pt& lo, const Pt& hi) {
  if (lo.x >= hi.x) return false;
  return o == DomOrder::Incr ? lo.y < hi.y : lo.y > hi.y;
}

std::vector<Pt> minimal_layer(DomOrder o, const std::vector<Pt>& pts) {
  // p is minimal iff no q with q.x < p.x on the dominating side of y.
  std::vector<Pt> s = sorted_by_x(pts);
  std::vector<Pt> out;
  if (o == DomOrder::Incr) {
    i64 best = RECT_INF;  // min y so far
    for (const Pt& p : s) {
      if (p.y < best) out.push_back(p);
      best = std::min(best, p.y);
    }
  } else {
    i64 best = -RECT_INF;  // max y so far
    for (const Pt& p : s) {
      if (p.y > best) out.push_back(p);
      best = std::max(best, p.y);
    }
  }
  return out;
}

std::vector<std::vector<Pt>> peel_layers(DomOrder o, std::vector<Pt> pts,
                                         int layers) {
  std::vector<std::vector<Pt>> out;
  for (int i = 0; i < layers && !pts.empty(); ++i) {
    std::vector<Pt> layer = minimal_layer(o, pts);
    std::vector<Pt> rest;
    for (const Pt& p : pts)
      if (std::find(layer.begin(), layer.end(), p) == layer.end())
        rest.push_back(p);
    out.push_back(std::move(layer));
    pts = std::move(rest);
  }
  return out;
}

std::vector<Pt> longest_chain(DomOrder o, std::vector<Pt> pts) {
  std::vector<Pt> s = sorted_by_x(std::move(pts));
  const std::size_t n = s.size();
  if (n == 0) return {};
  // LIS on the y sequence (negated for Decr).
  std::vector<i64> ys(n);
  for (std::size_t i = 0; i < n; ++i)
    ys[i] = o == DomOrder::Incr ? s[i].y : -s[i].y;
  std::vector<std::size_t> tail;      // indices of chain tails per length
  std::vector<std::size_t> prev(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(tail.begin(), tail.end(), ys[i],
                               [&](std::size_t j, i64 v) { return ys[j] < v; });
    if (it != tail.begin()) prev[i] = *(it - 1);
    if (it == tail.end())
      tail.push_back(i);
    else
      *it = i;
  }
  std::vector<Pt> chain;
  for (std::size_t j = tail.back(); j != SIZE_MAX; j = prev[j])
    chain.push_back(s[j]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<Pt> longest_chain_below(DomOrder o, const std::vector<Pt>& pts,
                                    const Pt& limit) {
  std::vector<Pt> sub;
  for (const Pt& p : pts)
    if (dominates(o, p, limit)) sub.push_back(p);
  return longest_chain(o, std::move(sub));
}

HalfGridSplit split_by_half_grid(const std::vector<Pt>& pts, i64 apex_x,
                                 std::size_t need, SweepSide side) {
  if (need == 0) throw GeometryError("split_by_half_grid needs a positive target");
  std::vector<Pt> s = sorted_by_y(pts);  // ascending y
  HalfGridSplit out;
  std::size_t nl = 0, nr = 0;
  for (std::size_t i = s.size(); i-- > 0;) {
    const Pt& p = s[i];
    if (p.x == apex_x) throw GeometryError("point on the apex line");
    (p.x < apex_x ? nl : nr)++;
    bool done = false;
    if (side == SweepSide::Left) done = nl == need;
    else if (side == SweepSide::Right) done = nr == need;
    else done = nl == need || nr == need;
    if (done) {
      out.winner = nl == need && side != SweepSide::Right ? SweepSide::Left
                                                          : SweepSide::Right;
      out.h = p.y - 1;  // odd: just below the last swept point
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j < i)
          out.below.push_back(s[j]);
        else
          (s[j].x < apex_x ? out.left : out.right).push_back(s[j]);
      }
      return out;
    }
  }
  throw GeometryError("half-grid sweep exhausted the point set");
}

std::vector<Pt> sorted_by_x(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Pt& a, const Pt& b) { return a.x < b.x; });
  return pts;
}
std::vector<Pt> sorted_by_y(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Pt& a, const Pt& b) { return a.y < b.y; });
  return pts;
}
static const Pt& pick(const std::vector<Pt>& pts, bool by_x, bool max) {
  if (pts.empty()) throw GeometryError("extremum of an empty point set");
  auto cmp = [&](const Pt& a, const Pt& b) {
    return by_x ? a.x < b.x : a.y < b.y;
  };
  return max ? *std::max_element(pts.begin(), pts.end(), cmp)
             : *std::min_element(pts.begin(), pts.end(), cmp);
}
Pt bottommost(const std::vector<Pt>& pts) { return pick(pts, false, false); }
Pt topmost(const std::vector<Pt>& pts) { return pick(pts, false, true); }
Pt leftmost(const std::vector<Pt>& pts) { return pick(pts, true, false); }
Pt rightmost(const std::vector<Pt>& pts) { return pick(pts, true, true); }

}  // namespace ortho
