#include "ortho/path_caterpillar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "ortho/binary.hpp"  // BudgetError
#include "ortho/fragment.hpp"

namespace ortho {
namespace {

using Key = std::pair<i64, i64>;
Key key(const Pt& p) { return {p.x, p.y}; }

// --- incremental collision tracking -----------------------------------------

struct LSeg {
  Pt a, b;  // a <= b lexicographically
  bool horiz = true;
  int u = -1, v = -1;  // owning edge
};

void push_segs(std::vector<LSeg>& out, int u, int v, Pt pu, Pt pv, Bend bend) {
  Pt corner = bend == Bend::HV ? Pt{pv.x, pu.y} : Pt{pu.x, pv.y};
  auto add = [&](Pt a, Pt b) {
    if (a == b) return;
    bool horiz = a.y == b.y;
    if (a.x > b.x || (a.x == b.x && a.y > b.y)) std::swap(a, b);
    out.push_back({a, b, horiz, u, v});
  };
  add(pu, corner);
  add(corner, pv);
}

// 0 = disjoint, 1 = single point (stored in *pt), 2 = overlap
int seg_isect(const LSeg& s, const LSeg& t, Pt* pt) {
  if (s.horiz && t.horiz) {
    if (s.a.y != t.a.y) return 0;
    i64 lo = std::max(s.a.x, t.a.x), hi = std::min(s.b.x, t.b.x);
    if (lo > hi) return 0;
    if (lo < hi) return 2;
    *pt = {lo, s.a.y};
    return 1;
  }
  if (!s.horiz && !t.horiz) {
    if (s.a.x != t.a.x) return 0;
    i64 lo = std::max(s.a.y, t.a.y), hi = std::min(s.b.y, t.b.y);
    if (lo > hi) return 0;
    if (lo < hi) return 2;
    *pt = {s.a.x, lo};
    return 1;
  }
  const LSeg& h = s.horiz ? s : t;
  const LSeg& w = s.horiz ? t : s;
  if (h.a.x <= w.a.x && w.a.x <= h.b.x && w.a.y <= h.a.y && h.a.y <= w.b.y) {
    *pt = {w.a.x, h.a.y};
    return 1;
  }
  return 0;
}

bool on_seg(const Pt& p, const LSeg& s) {
  if (s.horiz) return p.y == s.a.y && s.a.x <= p.x && p.x <= s.b.x;
  return p.x == s.a.x && s.a.y <= p.y && p.y <= s.b.y;
}

struct Canvas {
  Fragment frag;
  std::vector<LSeg> segs;
  std::map<int, Pt> at;

  void place(int id, Pt p) {
    frag.place(id, p);
    at[id] = p;
  }
  void edge(int u, int v, Bend b) {
    frag.edge(u, v, b);
    push_segs(segs, u, v, at.at(u), at.at(v), b);
  }
  void remove_node(int id) {
    at.erase(id);
    for (auto it = frag.pos.begin(); it != frag.pos.end(); ++it)
      if (it->first == id) {
        frag.pos.erase(it);
        break;
      }
  }
  void remove_edge(int u, int v) {
    std::erase_if(frag.edges,
                  [&](const EdgeDraw& e) { return e.u == u && e.v == v; });
    std::erase_if(segs, [&](const LSeg& s) { return s.u == u && s.v == v; });
  }
};

struct Extra {
  std::vector<std::pair<int, Pt>> nodes;
  std::vector<std::tuple<int, int, Bend>> edges;
};

bool try_extra(const Canvas& cv, const Extra& ex) {
  std::map<int, Pt> fresh(ex.nodes.begin(), ex.nodes.end());
  auto lookup = [&](int id) -> Pt {
    auto it = fresh.find(id);
    return it != fresh.end() ? it->second : cv.at.at(id);
  };
  std::vector<LSeg> ns;
  for (auto& [u, v, b] : ex.edges) push_segs(ns, u, v, lookup(u), lookup(v), b);
  auto shared_node_at = [&](const LSeg& s, const LSeg& t, const Pt& p) {
    for (int n : {s.u, s.v})
      if ((n == t.u || n == t.v) && lookup(n) == p) return true;
    return false;
  };
  Pt p;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (const LSeg& old : cv.segs) {
      int r = seg_isect(ns[i], old, &p);
      if (r == 2 || (r == 1 && !shared_node_at(ns[i], old, p))) return false;
    }
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      if (ns[i].u == ns[j].u && ns[i].v == ns[j].v) continue;  // same edge
      int r = seg_isect(ns[i], ns[j], &p);
      if (r == 2 || (r == 1 && !shared_node_at(ns[i], ns[j], p))) return false;
    }
    for (auto& [id, q] : cv.at)
      if (id != ns[i].u && id != ns[i].v && on_seg(q, ns[i])) return false;
    for (auto& [id, q] : fresh)
      if (id != ns[i].u && id != ns[i].v && on_seg(q, ns[i])) return false;
  }
  for (const LSeg& old : cv.segs)
    for (auto& [id, q] : fresh)
      if (id != old.u && id != old.v && on_seg(q, old)) return false;
  return true;
}

void commit_extra(Canvas& cv, const Extra& ex) {
  for (auto& [id, p] : ex.nodes) cv.place(id, p);
  for (auto& [u, v, b] : ex.edges) cv.edge(u, v, b);
}

std::vector<Pt> minus(const std::vector<Pt>& a, const std::vector<Pt>& b) {
  std::set<Key> drop;
  for (const Pt& p : b) drop.insert(key(p));
  std::vector<Pt> out;
  for (const Pt& p : a)
    if (!drop.count(key(p))) out.push_back(p);
  return out;
}

// --- staircase routine -------------------------------------------------------

// One spine vertex with its leaf ids in prescription order (first the leaf
// listed right after the previous spine neighbor).
struct SpineVertex {
  int id = -1;
  std::vector<int> leaves;
  bool first_free = false;  // global spine start (may carry 3 leaves)
  bool last_free = false;   // global spine end
};

// Draws the segment along a monotone chain (given x-ascending; asc tells
// whether y ascends too). Vertex gi0 + j goes through horizontally iff the
// global index is even. Returns the spine positions.
std::vector<Pt> draw_staircase(Canvas& cv, const std::vector<SpineVertex>& sp,
                               int gi0, const std::vector<Pt>& chain,
                               bool asc) {
  std::vector<Pt> spine_pos;
  std::size_t t = 0;
  int prev_id = -1;
  bool prev_h = false;
  for (std::size_t j = 0; j < sp.size(); ++j) {
    const SpineVertex& v = sp[j];
    bool thru_h = ((gi0 + (int)j) % 2) == 0;
    int nl = (int)v.leaves.size();
    int prepre = -1, pre = -1, post = -1, postpost = -1;
    if (j == 0 && v.first_free && nl >= 2) {
      if (!thru_h) throw TreeError("spine must start on a horizontal vertex");
      if (nl == 3) {
        prepre = v.leaves[1];
        pre = asc ? v.leaves[2] : v.leaves[0];
        post = asc ? v.leaves[0] : v.leaves[2];
      } else {
        pre = asc ? v.leaves[1] : v.leaves[0];
        post = asc ? v.leaves[0] : v.leaves[1];
      }
    } else if (j + 1 == sp.size() && v.last_free && nl == 3) {
      if (thru_h) {
        pre = asc ? v.leaves[0] : v.leaves[2];
        post = asc ? v.leaves[2] : v.leaves[0];
      } else {
        pre = asc ? v.leaves[2] : v.leaves[0];
        post = asc ? v.leaves[0] : v.leaves[2];
      }
      postpost = v.leaves[1];
    } else {
      if (nl > 2) throw TreeError("three leaves at a non-endpoint vertex");
      bool a_pre = thru_h == asc;  // which side of the vertex takes leaf A
      if (nl >= 1) (a_pre ? pre : post) = v.leaves[0];
      if (nl == 2) (a_pre ? post : pre) = v.leaves[1];
    }

    int npre = (prepre >= 0 ? 1 : 0) + (pre >= 0 ? 1 : 0);
    Pt vp = chain.at(t + npre);
    cv.place(v.id, vp);
    if (prepre >= 0) cv.place(prepre, chain.at(t));
    if (pre >= 0) cv.place(pre, chain.at(t + (prepre >= 0 ? 1 : 0)));
    t += npre + 1;
    if (post >= 0) cv.place(post, chain.at(t++));
    if (postpost >= 0) cv.place(postpost, chain.at(t++));

    Bend perp = thru_h ? Bend::VH : Bend::HV;  // leaf beside the through line
    if (prepre >= 0) cv.edge(v.id, prepre, Bend::HV);
    if (pre >= 0) cv.edge(v.id, pre, perp);
    if (post >= 0) cv.edge(v.id, post, perp);
    if (postpost >= 0) cv.edge(v.id, postpost, thru_h ? Bend::HV : Bend::VH);
    if (prev_id >= 0) cv.edge(prev_id, v.id, prev_h ? Bend::HV : Bend::VH);
    prev_id = v.id;
    prev_h = thru_h;
    spine_pos.push_back(vp);
  }
  return spine_pos;
}

// --- x-monotone straight-through paths ---------------------------------------

// Draws path vertices id0..id0+n-1 (ids double as global parity indices) on
// the pool; returns their positions in path order.
std::vector<Pt> draw_path_rec(Canvas& cv, int id0, int n, std::vector<Pt> pool) {
  if (n <= 0) return {};
  if ((i64)pool.size() < (std::size_t)n)
    throw BudgetError("fewer points than path vertices");
  if (n == 1) {
    Pt p = leftmost(pool);
    cv.place(id0, p);
    return {p};
  }
  for (DomOrder o : {DomOrder::Incr, DomOrder::Decr}) {
    std::vector<Pt> ch = longest_chain(o, pool);
    if ((int)ch.size() >= n) {
      ch.resize(n);
      std::vector<SpineVertex> sp(n);
      for (int i = 0; i < n; ++i) sp[i].id = id0 + i;
      return draw_staircase(cv, sp, id0, ch, o == DomOrder::Incr);
    }
  }

  int k = 2 * ((n + 3) / 4);  // even, so v_k goes through vertically
  int m = n - k;
  i64 mk = path_points_budget(k);
  if ((i64)pool.size() < mk) throw BudgetError("path pool below the budget");
  std::vector<Pt> by_x = sorted_by_x(pool);
  std::vector<Pt> prefix(by_x.begin(), by_x.begin() + mk);

  std::vector<Pt> first = draw_path_rec(cv, id0, k, prefix);
  // drop the last vertex; its point and the row through p are freed
  cv.remove_edge(id0 + k - 2, id0 + k - 1);
  cv.remove_node(id0 + k - 1);
  Pt p = first[k - 2];
  first.resize(k - 1);

  std::vector<Pt> tt, bb;
  for (const Pt& q : by_x)
    if (q.x > p.x) (q.y > p.y ? tt : bb).push_back(q);
  std::vector<Pt> rest = minus(tt, minimal_layer(DomOrder::Incr, tt));
  for (const Pt& q : minus(bb, minimal_layer(DomOrder::Decr, bb)))
    rest.push_back(q);

  std::vector<Pt> second = draw_path_rec(cv, id0 + k, m, rest);
  Pt r = second.front();

  std::set<Key> used;
  for (const Pt& q : second) used.insert(key(q));
  bool top = r.y > p.y;
  std::vector<Pt> cand;
  for (const Pt& q : by_x)
    if (!used.count(key(q)) && q.x > p.x && q.x < r.x &&
        (top ? (q.y > p.y && q.y < r.y) : (q.y < p.y && q.y > r.y)))
      cand.push_back(q);
  std::sort(cand.begin(), cand.end(),
            [](const Pt& a, const Pt& b) { return a.x > b.x; });
  for (const Pt& q : cand) {
    Extra ex;
    ex.nodes = {{id0 + k - 1, q}};
    ex.edges = {{id0 + k - 2, id0 + k - 1, Bend::HV},
                {id0 + k - 1, id0 + k, Bend::VH}};
    if (!try_extra(cv, ex)) continue;
    commit_extra(cv, ex);
    first.push_back(q);
    first.insert(first.end(), second.begin(), second.end());
    return first;
  }
  throw GeometryError("no free join point between the half paths");
}

// --- top-view caterpillars ----------------------------------------------------

struct CatRes {
  std::vector<Pt> spine;
  i64 max_x = 0;
};

// Draws spine indices [i0, i1]; joined means the first vertex belongs to the
// caller's join (leafless here, placed at its leftmost used point).
CatRes draw_cat_rec(Canvas& cv, const std::vector<SpineVertex>& plan, int i0,
                    int i1, bool joined, std::vector<Pt> pool) {
  auto nodes_of = [&](int i) { return 1 + (int)plan[i].leaves.size(); };
  int nseg = 0;
  for (int i = i0; i <= i1; ++i) nseg += nodes_of(i);
  if (joined) nseg -= (int)plan[i0].leaves.size();
  if ((i64)pool.size() < (std::size_t)nseg)
    throw BudgetError("fewer points than caterpillar nodes");

  for (DomOrder o : {DomOrder::Incr, DomOrder::Decr}) {
    std::vector<Pt> ch = longest_chain(o, pool);
    if ((int)ch.size() >= nseg) {
      ch.resize(nseg);
      std::vector<SpineVertex> sp(plan.begin() + i0, plan.begin() + i1 + 1);
      if (joined) {
        sp[0].leaves.clear();
        sp[0].first_free = false;
      }
      CatRes res;
      res.spine = draw_staircase(cv, sp, i0, ch, o == DomOrder::Incr);
      res.max_x = ch.back().x;
      return res;
    }
  }

  // split: q = s_sq goes through vertically, v* = s_sq+1 starts the far half
  std::vector<i64> pref(i1 - i0 + 2, 0);
  for (int i = i0; i <= i1; ++i)
    pref[i - i0 + 1] = pref[i - i0] + nodes_of(i);
  int best_sq = -1;
  i64 best = 0;
  for (int sq = i0 + 1; sq <= i1 - 1; ++sq) {
    if (sq % 2 == 0) continue;
    i64 n1 = pref[sq - i0] - (joined ? (i64)plan[i0].leaves.size() : 0);
    i64 n2 = pref[i1 - i0 + 1] - pref[sq + 1 - i0] - (i64)plan[sq + 1].leaves.size();
    if (best_sq < 0 || std::max(n1, n2) < best) {
      best = std::max(n1, n2);
      best_sq = sq;
    }
  }
  if (best_sq < 0)
    throw GeometryError("short caterpillar without a long monotone chain");
  int sq = best_sq;
  i64 n1 = pref[sq - i0] - (joined ? (i64)plan[i0].leaves.size() : 0);

  i64 m1 = caterpillar_points_budget((int)n1);
  if ((i64)pool.size() < m1)
    throw BudgetError("caterpillar pool below the budget");
  std::vector<Pt> by_x = sorted_by_x(pool);
  std::vector<Pt> prefix(by_x.begin(), by_x.begin() + m1);
  CatRes r1 = draw_cat_rec(cv, plan, i0, sq - 1, joined, prefix);
  Pt p = r1.spine.back();
  i64 xs = r1.max_x;

  // window right of everything drawn so far, split by the row through p
  std::vector<Pt> tt, bb;
  for (const Pt& q : by_x)
    if (q.x > xs) (q.y > p.y ? tt : bb).push_back(q);
  auto flatten = [](const std::vector<std::vector<Pt>>& ls) {
    std::vector<Pt> out;
    for (auto& l : ls) out.insert(out.end(), l.begin(), l.end());
    return out;
  };
  std::vector<Pt> trest = minus(tt, flatten(peel_layers(DomOrder::Incr, tt, 4)));
  trest = minus(trest, flatten(peel_layers(DomOrder::Decr, trest, 4)));
  std::vector<Pt> brest = minus(bb, flatten(peel_layers(DomOrder::Decr, bb, 4)));
  brest = minus(brest, flatten(peel_layers(DomOrder::Incr, brest, 4)));
  std::vector<Pt> rest = trest;
  rest.insert(rest.end(), brest.begin(), brest.end());

  CatRes r2 = draw_cat_rec(cv, plan, sq + 1, i1, true, rest);
  Pt vs = r2.spine.front();
  bool top = vs.y > p.y;

  std::set<Key> placed;
  for (auto& [id, q] : cv.at) placed.insert(key(q));
  std::vector<Pt> amat, wmat;
  for (const Pt& q : by_x) {
    if (q.x <= xs || q.x >= vs.x || placed.count(key(q))) continue;
    if (top ? (q.y > p.y && q.y < vs.y) : (q.y < p.y && q.y > vs.y))
      amat.push_back(q);
    else if (top ? q.y > vs.y : q.y < vs.y)
      wmat.push_back(q);
  }

  int qlv = (int)plan[sq].leaves.size();
  int vlv = (int)plan[sq + 1].leaves.size();
  // chain slots around q: [before-leaf][q][after-leaf][v*'s near leaf]
  bool need_before = top ? qlv >= 2 : qlv >= 1;
  bool need_after = top ? qlv >= 1 : qlv >= 2;
  bool need_c4 = vlv >= 1;
  bool need_w = vlv >= 2;
  int need = 1 + need_before + need_after + need_c4;

  std::vector<Pt> chain =
      longest_chain(top ? DomOrder::Incr : DomOrder::Decr, amat);
  std::sort(wmat.begin(), wmat.end(),
            [](const Pt& a, const Pt& b) { return a.x > b.x; });
  if ((int)chain.size() >= need && (!need_w || !wmat.empty())) {
    for (int s = (int)chain.size() - need; s >= 0; --s) {
      int idx = s;
      Pt before{}, qpt{}, after{}, c4{};
      if (need_before) before = chain[idx++];
      qpt = chain[idx++];
      if (need_after) after = chain[idx++];
      if (need_c4) c4 = chain[idx++];

      Extra ex;
      ex.nodes.push_back({sq, qpt});
      // q's leaf on the p side of the chain, then on the v* side
      if (need_before)
        ex.nodes.push_back({plan[sq].leaves[top ? 1 : 0], before});
      if (need_after) ex.nodes.push_back({plan[sq].leaves[top ? 0 : 1], after});
      if (need_c4) ex.nodes.push_back({plan[sq + 1].leaves[0], c4});
      ex.edges.push_back({sq - 1, sq, Bend::HV});
      if (need_before)
        ex.edges.push_back({sq, plan[sq].leaves[top ? 1 : 0], Bend::HV});
      if (need_after)
        ex.edges.push_back({sq, plan[sq].leaves[top ? 0 : 1], Bend::HV});
      ex.edges.push_back({sq, sq + 1, Bend::VH});
      if (need_c4)
        ex.edges.push_back({sq + 1, plan[sq + 1].leaves[0], Bend::VH});
      std::size_t w_tries = need_w ? wmat.size() : 1;
      for (std::size_t wi = 0; wi < w_tries; ++wi) {
        Extra full = ex;
        if (need_w) {
          full.nodes.push_back({plan[sq + 1].leaves[1], wmat[wi]});
          full.edges.push_back({sq + 1, plan[sq + 1].leaves[1], Bend::VH});
        }
        if (!try_extra(cv, full)) continue;
        commit_extra(cv, full);
        CatRes res;
        res.spine = r1.spine;
        res.spine.push_back(qpt);
        res.spine.insert(res.spine.end(), r2.spine.begin(), r2.spine.end());
        res.max_x = std::max(xs, r2.max_x);
        return res;
      }
    }
  }
  throw GeometryError("no free join material between the caterpillar halves");
}

}  // namespace

long long path_points_budget(int n) {
  if (n <= 1) return 1;
  if (n == 2) return 6;
  int k = 2 * ((n + 3) / 4);
  return 2 * path_points_budget(k) + 2LL * n;
}

long long caterpillar_points_budget(int n) {
  if (n <= 1) return 1;
  // small sets: a monotone chain of n points always exists
  if (n <= 32) return (long long)(n - 1) * (n - 1) + 1;
  return 2 * caterpillar_points_budget((n + 1) / 2 + 7) + 16LL * n;
}

StraightThroughDrawing embed_monotone_path(int n, const std::vector<Pt>& pts) {
  if (n <= 0) throw TreeError("empty path");
  std::vector<Pt> norm = normalize_points(pts);
  std::vector<Pt> by_x = sorted_by_x(pts);
  std::vector<Pt> by_y = sorted_by_y(pts);

  Canvas cv;
  draw_path_rec(cv, 0, n, norm);

  RootedTree t;
  t.root = 0;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  for (int i = 1; i < n; ++i) {
    t.parent[i] = i - 1;
    t.children[i - 1].push_back(i);
  }
  StraightThroughDrawing out;
  out.drawing.tree = t;
  out.drawing.pos.resize(n);
  for (auto& [id, p] : cv.frag.pos)
    out.drawing.pos[id] = Pt{by_x[p.x / 2].x, by_y[p.y / 2].y};
  out.drawing.edges = cv.frag.edges;

  out.x_monotone = true;
  for (int i = 1; i < n; ++i)
    if (out.drawing.pos[i].x <= out.drawing.pos[i - 1].x)
      out.x_monotone = false;
  std::map<std::pair<int, int>, int> eidx;
  for (int e = 0; e < (int)out.drawing.edges.size(); ++e) {
    auto& ed = out.drawing.edges[e];
    eidx[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}] = e;
  }
  out.straight_through = true;
  for (int i = 1; i + 1 < n; ++i) {
    Port in = port_at(out.drawing, eidx.at({i - 1, i}), i);
    Port ot = port_at(out.drawing, eidx.at({i, i + 1}), i);
    bool collinear = (in == Port::L && ot == Port::R) ||
                     (in == Port::R && ot == Port::L) ||
                     (in == Port::U && ot == Port::D) ||
                     (in == Port::D && ot == Port::U);
    if (!collinear) out.straight_through = false;
  }
  return out;
}

Drawing embed_top_view_caterpillar(const CaterpillarShape& shape,
                                   const std::vector<Pt>& pts) {
  int L = shape.spine_len();
  OrderedTree ot = build_top_view_caterpillar(
      shape, std::vector<SpineOrdering>(L, SpineOrdering::TV));
  std::vector<SpineVertex> plan(L);
  int next_leaf = L;
  for (int i = 0; i < L; ++i) {
    plan[i].id = i;
    for (int l = 0; l < shape.leaves_per_spine[i]; ++l)
      plan[i].leaves.push_back(next_leaf++);
    plan[i].first_free = i == 0;
    plan[i].last_free = i == L - 1;
  }

  std::vector<Pt> norm = normalize_points(pts);
  std::vector<Pt> by_x = sorted_by_x(pts);
  std::vector<Pt> by_y = sorted_by_y(pts);

  Canvas cv;
  draw_cat_rec(cv, plan, 0, L - 1, false, norm);

  Drawing d;
  d.tree = ot.to_rooted();
  d.pos.resize(shape.n());
  for (auto& [id, p] : cv.frag.pos) d.pos[id] = Pt{by_x[p.x / 2].x, by_y[p.y / 2].y};
  for (const EdgeDraw& e : cv.frag.edges) {
    if (d.tree.parent[e.v] == e.u)
      d.edges.push_back(e);
    else
      d.edges.push_back({e.v, e.u, flip(e.bend)});
  }
  return d;
}

}  // namespace ortho
