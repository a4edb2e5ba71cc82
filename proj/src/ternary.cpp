#include "ortho/ternary.hpp"

#include <algorithm>

#include "ortho/fragment.hpp"

namespace ortho {
namespace {

using i64 = long long;

struct Ctx {
  const RootedTree& t;
  const TernaryBudgets& b;
  TernaryStats* stats;
};

// Children of v sorted by subtree size, padded with -1 in front:
// a <= b <= r, with r the heavy child (-1 only for leaves).
struct Kids3 {
  int a = -1, b = -1, r = -1;
};

Kids3 kids3(const RootedTree& t, int v) {
  const auto& ch = t.children[v];
  Kids3 k;
  if (ch.size() > 3) throw TreeError("node with more than 3 children");
  if (ch.size() == 1) {
    k.r = ch[0];
  } else if (ch.size() == 2) {
    k.b = ch[0], k.r = ch[1];
  } else if (ch.size() == 3) {
    k.a = ch[0], k.b = ch[1], k.r = ch[2];
  }
  return k;
}

// Heavy chain r_0 = v, r_1, ..., r_k with side subtrees a_i, b_i hanging off
// r_{i-1}.  Stops at the first level i >= 2 where the heavy grandchild lost a
// tenth of its parent's weight.
struct Chain {
  int k = 0;
  std::vector<int> r;     // r[0..k], entries past a leaf are -1
  std::vector<int> a, b;  // a[i-1], b[i-1] belong to level i, i = 1..k
};

Chain level_chain(const RootedTree& t, const std::vector<int>& size, int v) {
  auto sz = [&](int u) -> i64 { return u < 0 ? 0 : size[u]; };
  Chain c;
  c.r.push_back(v);
  for (int i = 1;; ++i) {
    int cur = c.r[i - 1];
    Kids3 k = cur < 0 ? Kids3{} : kids3(t, cur);
    c.a.push_back(k.a);
    c.b.push_back(k.b);
    c.r.push_back(k.r);
    if (i >= 2 && 10 * sz(c.r[i]) <= 9 * sz(c.r[i - 1])) {
      c.k = i;
      return c;
    }
  }
}

i64 f4(const TernaryBudgets& b, int v) { return v < 0 ? 0 : b.fhat[v]; }

// Points needed in Q_L for level 1 plus the full levels 2..k-1.
i64 yhat(const TernaryBudgets& b, const Chain& c) {
  i64 y = f4(b, c.a[0]) + f4(b, c.b[0]) + 1;
  for (int i = 2; i <= c.k - 1; ++i)
    y += 2 * f4(b, c.a[i - 1]) + 2 * f4(b, c.b[i - 1]) + 1;
  return y;
}

Pt drawF4(Ctx& c, int v, std::vector<Pt> pts, i64 apex_x, Fragment& out);

Pt drawF4_in(Ctx& c, int v, const std::vector<Pt>& pts, i64 apex_x,
             const Symmetry& s, Fragment& out) {
  Fragment sub;
  Pt r0 = drawF4(c, v, apply_symmetry(s, pts), apex_x, sub);
  Symmetry inv = s.inverse();
  sub.transform(inv);
  out.merge(std::move(sub));
  return inv(r0);
}

// One f4-draw-1 group: place rv on the group, draw T_b above it and T_a
// sideways, pointing away from the entering vertical ray.  The group must
// have exactly fhat(a) + fhat(b) + 1 points.
Pt place_group(Ctx& c, int rv, int a, int b, const std::vector<Pt>& group,
               bool ray_on_right, Fragment& out) {
  i64 fa = f4(c.b, a), fb = f4(c.b, b);
  if ((i64)group.size() != fa + fb + 1)
    throw BudgetError("level group has the wrong size");
  std::vector<Pt> by_x = sorted_by_x(group);
  std::vector<Pt> far_box, near_box;
  if (ray_on_right) {
    far_box.assign(by_x.begin(), by_x.begin() + fa);
    near_box.assign(by_x.begin() + fa, by_x.end());
  } else {
    near_box.assign(by_x.begin(), by_x.begin() + fb + 1);
    far_box.assign(by_x.begin() + fb + 1, by_x.end());
  }
  Pt r0 = bottommost(near_box);
  out.place(rv, r0);
  near_box.erase(std::find(near_box.begin(), near_box.end(), r0));
  if (b >= 0) {
    drawF4_in(c, b, near_box, -r0.x, Symmetry::rot180(), out);
    out.edge(rv, b, Bend::VH);
  }
  if (a >= 0) {
    const Symmetry s =
        ray_on_right ? Symmetry::swap_xy() : Symmetry::right_to_down();
    drawF4_in(c, a, far_box, r0.y, s, out);
    out.edge(rv, a, Bend::HV);
  }
  return r0;
}

Pt drawF4(Ctx& c, int v, std::vector<Pt> pts, i64 apex_x, Fragment& out) {
  if ((i64)pts.size() < c.b.fhat[v])
    throw BudgetError("f-configuration region smaller than budget");
  Kids3 k = kids3(c.t, v);
  if (k.r < 0) {  // leaf: use the topmost point so the parent ray is clear
    Pt r0 = topmost(pts);
    out.place(v, r0);
    return r0;
  }

  if (!c.b.use_chain[v]) {  // direct split: a, b beside v, r below
    i64 target = f4(c.b, k.a) + f4(c.b, k.b) + 1;
    HalfGridSplit sp =
        split_by_half_grid(pts, apex_x, target, SweepSide::Either);
    if (sp.winner == SweepSide::Right)  // mirror so the left side wins
      return drawF4_in(c, v, pts, -apex_x, Symmetry::reflect_x(), out);
    Pt r0 = place_group(c, v, k.a, k.b, sp.left, true, out);
    drawF4(c, k.r, sp.below, r0.x, out);
    out.edge(v, k.r, Bend::VH);
    if (c.stats) c.stats->f4_1++;
    return r0;
  }

  // Level construction along the heavy chain.
  std::vector<int> size(c.t.n());
  {
    // subtree sizes restricted to the subtree of v
    std::vector<int> order, stack = {v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (int ch : c.t.children[u]) stack.push_back(ch);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      size[*it] = 1;
      for (int ch : c.t.children[*it]) size[*it] += size[ch];
    }
  }
  Chain chain = level_chain(c.t, size, v);
  i64 y = yhat(c.b, chain);
  HalfGridSplit sp = split_by_half_grid(pts, apex_x, y, SweepSide::Either);
  if (sp.winner == SweepSide::Right)
    return drawF4_in(c, v, pts, -apex_x, Symmetry::reflect_x(), out);

  std::vector<Pt> ql = sorted_by_y(sp.left);  // y descending
  std::reverse(ql.begin(), ql.end());

  // place r_0..r_{k-2} in the levels carved out of Q_L
  std::vector<Pt> placed(chain.k + 1);
  i64 off = f4(c.b, chain.a[0]) + f4(c.b, chain.b[0]) + 1;
  placed[0] = place_group(c, v, chain.a[0], chain.b[0],
                          {ql.begin(), ql.begin() + off}, true, out);
  for (int i = 2; i <= chain.k - 1; ++i) {
    i64 fa = f4(c.b, chain.a[i - 1]), fb = f4(c.b, chain.b[i - 1]);
    std::vector<Pt> li(ql.begin() + off, ql.begin() + off + 2 * fa + 2 * fb + 1);
    off += 2 * fa + 2 * fb + 1;
    i64 ray_x = placed[i - 2].x;
    std::vector<Pt> ls, rs;
    for (const Pt& p : li) (p.x < ray_x ? ls : rs).push_back(p);
    bool left = (i64)ls.size() >= fa + fb + 1;  // pigeonhole: one side fits
    std::vector<Pt> side = left ? ls : rs;      // keep the points by the ray
    std::sort(side.begin(), side.end(), [&](const Pt& p, const Pt& q) {
      return std::llabs(p.x - ray_x) < std::llabs(q.x - ray_x);
    });
    side.resize(fa + fb + 1);
    placed[i - 1] = place_group(c, chain.r[i - 1], chain.a[i - 1],
                                chain.b[i - 1], side, left, out);
    out.edge(chain.r[i - 2], chain.r[i - 1], Bend::VH);
  }

  // level k: the three big subtrees T_ak, T_bk, T_rk
  int ak = chain.a[chain.k - 1], bk = chain.b[chain.k - 1];
  int rk = chain.r[chain.k];
  i64 fak = f4(c.b, ak), fbk = f4(c.b, bk), frk = f4(c.b, rk);
  i64 ray_x = placed[chain.k - 2].x;
  i64 z = (i64)sp.right.size();

  std::vector<Pt> qb = sorted_by_y(sp.below);  // y ascending
  std::vector<Pt> qbk(qb.begin(), qb.begin() + std::min<i64>(frk, qb.size()));
  std::vector<Pt> e(qb.begin() + qbk.size(), qb.end());

  if (z <= fbk) {  // A: the wasted side is small, stay left of the apex
    HalfGridSplit spe =
        split_by_half_grid(e, ray_x, fak + fbk + 1, SweepSide::Either);
    bool left = spe.winner == SweepSide::Left;
    placed[chain.k - 1] = place_group(c, chain.r[chain.k - 1], ak, bk,
                                      left ? spe.left : spe.right, left, out);
    out.edge(chain.r[chain.k - 2], chain.r[chain.k - 1], Bend::VH);
    if (c.stats) c.stats->a++;
  } else {
    std::vector<Pt> el, em, er;
    for (const Pt& p : e)
      (p.x < ray_x ? el : p.x < apex_x ? em : er).push_back(p);
    if ((i64)el.size() >= fak + fbk + 1) {  // B1: group left of the ray
      std::vector<Pt> strip = sorted_by_y(el);  // top fak+fbk+1 points
      strip.erase(strip.begin(), strip.end() - (fak + fbk + 1));
      placed[chain.k - 1] =
          place_group(c, chain.r[chain.k - 1], ak, bk, strip, true, out);
      out.edge(chain.r[chain.k - 2], chain.r[chain.k - 1], Bend::VH);
      if (c.stats) c.stats->b1++;
    } else if ((i64)em.size() >= fak + 1) {  // B2: T_bk borrows Q_R
      Pt r1 = bottommost(em);
      out.place(chain.r[chain.k - 1], r1);
      placed[chain.k - 1] = r1;
      out.edge(chain.r[chain.k - 2], chain.r[chain.k - 1], Bend::VH);
      em.erase(std::find(em.begin(), em.end(), r1));
      if (ak >= 0) {
        drawF4_in(c, ak, em, -r1.x, Symmetry::rot180(), out);
        out.edge(chain.r[chain.k - 1], ak, Bend::VH);
      }
      if (bk >= 0) {
        std::vector<Pt> right = sp.right;
        right.insert(right.end(), er.begin(), er.end());
        drawF4_in(c, bk, right, r1.y, Symmetry::right_to_down(), out);
        out.edge(chain.r[chain.k - 1], bk, Bend::HV);
      }
      if (c.stats) c.stats->b2++;
    } else if ((i64)er.size() >= fak + 1) {  // B3: cross under Q_R
      Pt r1 = leftmost(er);
      out.place(chain.r[chain.k - 1], r1);
      placed[chain.k - 1] = r1;
      out.edge(chain.r[chain.k - 2], chain.r[chain.k - 1], Bend::VH);
      er.erase(std::find(er.begin(), er.end(), r1));
      if (ak >= 0) {
        drawF4_in(c, ak, er, r1.y, Symmetry::right_to_down(), out);
        out.edge(chain.r[chain.k - 1], ak, Bend::HV);
      }
      if (bk >= 0) {
        drawF4_in(c, bk, sp.right, -r1.x, Symmetry::rot180(), out);
        out.edge(chain.r[chain.k - 1], bk, Bend::VH);
      }
      if (c.stats) c.stats->b3++;
    } else {
      throw BudgetError("equatorial zone smaller than budget");
    }
  }

  if (rk >= 0) {
    drawF4(c, rk, qbk, placed[chain.k - 1].x, out);
    out.edge(chain.r[chain.k - 1], rk, Bend::VH);
  }
  return placed[0];
}

}  // namespace

TernaryBudgets compute_budgets_ternary(const RootedTree& t) {
  int n = t.n();
  TernaryBudgets b;
  b.fhat.assign(n, 0);
  b.use_chain.assign(n, false);
  std::vector<int> size = t.subtree_sizes();

  std::vector<int> order;
  order.reserve(n);
  {
    std::vector<int> stack = {t.root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int ch : t.children[v]) stack.push_back(ch);
    }
    std::reverse(order.begin(), order.end());
  }

  for (int v : order) {
    Kids3 k = kids3(t, v);
    if (k.r < 0) {
      b.fhat[v] = 1;
      continue;
    }
    i64 direct = 2 * f4(b, k.a) + 2 * f4(b, k.b) + f4(b, k.r) + 1;
    Chain c = level_chain(t, size, v);
    i64 y = yhat(b, c);
    i64 fak = f4(b, c.a[c.k - 1]);
    i64 fbk = f4(b, c.b[c.k - 1]);
    i64 frk = f4(b, c.r[c.k]);
    i64 chained = std::max(y + 2 * fak + 3 * fbk + frk + 1,
                           2 * y + 3 * fak + fbk + frk);
    b.fhat[v] = std::min(direct, chained);
    b.use_chain[v] = chained < direct;
  }
  return b;
}

Drawing embed_ternary(const RootedTree& t, const std::vector<Pt>& pts,
                      TernaryStats* stats) {
  t.check_degree_cap(4);
  int n = t.n();
  if (n == 0) throw TreeError("empty tree");
  if ((i64)pts.size() < n) throw BudgetError("fewer points than vertices");

  int leaf = -1;
  for (int v = 0; v < n && leaf < 0; ++v)
    if (t.degree(v) <= 1) leaf = v;
  RootedTree rt = t.rerooted(leaf);

  std::vector<Pt> norm = normalize_points(pts);
  std::vector<Pt> by_x = sorted_by_x(pts);
  std::vector<Pt> by_y = sorted_by_y(pts);

  TernaryBudgets b = compute_budgets_ternary(rt);
  if ((i64)pts.size() < b.fhat[rt.root])
    throw BudgetError("point set smaller than the root budget");

  Ctx ctx{rt, b, stats};
  i64 apex = topmost(norm).x + 1;
  Fragment frag;
  drawF4(ctx, rt.root, norm, apex, frag);

  Drawing d;
  d.tree = t;
  d.pos.resize(n);
  for (auto& [id, p] : frag.pos) d.pos[id] = Pt{by_x[p.x / 2].x, by_y[p.y / 2].y};
  for (const EdgeDraw& e : frag.edges) {
    if (t.parent[e.v] == e.u)
      d.edges.push_back(e);
    else
      d.edges.push_back({e.v, e.u, flip(e.bend)});
  }
  return d;
}

}  // namespace ortho
