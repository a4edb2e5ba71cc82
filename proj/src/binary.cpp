#include "ortho/binary.hpp"

#include <algorithm>

#include "ortho/diagonal.hpp"
#include "ortho/fragment.hpp"

namespace ortho {
namespace {

using i64 = long long;

struct Ctx {
  const RootedTree& t;
  std::vector<int> size;
  const BinaryBudgets& b;
  BinaryStats* stats;
};

// Children of v sorted by subtree size: first = smaller (-1 if absent),
// second = larger (-1 only for leaves).
std::pair<int, int> kids(const Ctx& c, int v) {
  const auto& ch = c.t.children[v];
  if (ch.empty()) return {-1, -1};
  if (ch.size() == 1) return {-1, ch[0]};
  return {ch[0], ch[1]};
}

i64 fh(const Ctx& c, int v) { return v < 0 ? 0 : c.b.fhat[v]; }
i64 gh(const Ctx& c, int v) { return v < 0 ? 0 : c.b.ghat[v]; }
i64 gnr(const Ctx& c, int v) { return v < 0 ? 0 : c.b.gnr[v]; }

Pt drawF(Ctx& c, int v, std::vector<Pt> pts, i64 apex_x, Fragment& out);

struct GResult {
  Pt r0;
  Bend parent_bend;
};

GResult drawG(Ctx& c, int v, std::vector<Pt> pts, i64 px, bool has_vertical,
              Fragment& out);

// Runs drawF on s-transformed coordinates and maps the result back.
Pt drawF_in(Ctx& c, int v, const std::vector<Pt>& pts, i64 apex_x,
            const Symmetry& s, Fragment& out) {
  Fragment sub;
  Pt r0 = drawF(c, v, apply_symmetry(s, pts), apex_x, sub);
  Symmetry inv = s.inverse();
  sub.transform(inv);
  out.merge(std::move(sub));
  return inv(r0);
}

GResult drawG_in(Ctx& c, int v, const std::vector<Pt>& pts, i64 px,
                 bool has_vertical, const Symmetry& s, Fragment& out) {
  Fragment sub;
  GResult r = drawG(c, v, apply_symmetry(s, pts), px, has_vertical, sub);
  Symmetry inv = s.inverse();
  sub.transform(inv);
  out.merge(std::move(sub));
  return {inv(r.r0), s.swaps_axes() ? flip(r.parent_bend) : r.parent_bend};
}

Pt drawF(Ctx& c, int v, std::vector<Pt> pts, i64 apex_x, Fragment& out) {
  if ((i64)pts.size() < c.b.fhat[v])
    throw BudgetError("f-configuration region smaller than budget");
  auto [c1, c2] = kids(c, v);
  if (c2 < 0) {  // leaf: use the topmost point so the parent ray is clear
    Pt r0 = topmost(pts);
    out.place(v, r0);
    return r0;
  }

  FChoice ch = c.b.fchoice[v];
  bool use_f1 = ch == FChoice::F1;
  i64 target = (use_f1 ? fh(c, c1) : gh(c, c1)) + 1;
  HalfGridSplit sp = split_by_half_grid(pts, apex_x, target, SweepSide::Either);
  if (sp.winner == SweepSide::Right)  // mirror so the left side wins
    return drawF_in(c, v, pts, -apex_x, Symmetry::reflect_x(), out);

  if (ch != FChoice::F2) {
    Pt r0 = bottommost(sp.left);
    out.place(v, r0);
    std::vector<Pt> q1 = sp.left;
    q1.erase(std::find(q1.begin(), q1.end(), r0));
    if (use_f1) {
      if (c1 >= 0) {
        drawF_in(c, c1, q1, -r0.x, Symmetry::rot180(), out);
        out.edge(v, c1, Bend::VH);
      }
      GResult t2 = drawG_in(c, c2, sp.below, -r0.x, true,
                            Symmetry::reflect_x(), out);
      out.edge(v, c2, t2.parent_bend);
      if (c.stats) c.stats->f1++;
    } else {  // F1P and Comb share the f-1' construction
      if (c1 >= 0) {
        GResult t1 = drawG_in(c, c1, q1, -r0.x, true, Symmetry::rot180(), out);
        out.edge(v, c1, t1.parent_bend);
      }
      drawF(c, c2, sp.below, r0.x, out);
      out.edge(v, c2, Bend::VH);
      if (c.stats) c.stats->f1p++;
    }
    return r0;
  }

  // f-2: T2's root becomes a second anchor r1.
  auto [c21, c22] = kids(c, c2);
  if ((i64)sp.right.size() <= gnr(c, c21) - 1) {  // lucky
    Pt r0 = bottommost(sp.left);
    out.place(v, r0);
    std::vector<Pt> q1 = sp.left;
    q1.erase(std::find(q1.begin(), q1.end(), r0));
    if (c1 >= 0) {
      GResult t1 = drawG_in(c, c1, q1, -r0.x, true, Symmetry::rot180(), out);
      out.edge(v, c1, t1.parent_bend);
    }
    drawF(c, c2, sp.below, r0.x, out);
    out.edge(v, c2, Bend::VH);
    if (c.stats) c.stats->f2_lucky++;
    return r0;
  }

  // unlucky: scan the maximal strictly-left-descending chain from the
  // bottommost point of Q_L down through the unswept points.
  std::vector<Pt> chain;
  chain.push_back(bottommost(sp.left));
  {
    std::vector<Pt> below = sorted_by_y(sp.below);
    std::reverse(below.begin(), below.end());
    for (const Pt& p : below) chain.push_back(p);
  }
  int kprime = 1;
  while (kprime < (int)chain.size() && chain[kprime].x < chain[kprime - 1].x)
    kprime++;
  int n_v = c.size[v];
  if (kprime >= n_v) {
    std::vector<Pt> diag(chain.begin(), chain.begin() + n_v);
    std::reverse(diag.begin(), diag.end());  // ascending staircase
    diag_place(c.t, c.size, v, diag, 0, n_v - 1, DiagEntry::Right, out);
    if (c.stats) c.stats->f2_diagonal++;
    return diag.back();
  }
  if (kprime >= (int)chain.size())
    throw BudgetError("f-2 chain exhausted before the subtree fit");
  Pt r0 = chain[kprime - 1];
  Pt r1 = chain[kprime];
  out.place(v, r0);
  out.place(c2, r1);
  out.edge(v, c2, Bend::VH);
  std::vector<Pt> q1 = sp.left;
  if (kprime == 1) q1.erase(std::find(q1.begin(), q1.end(), r0));
  if (c1 >= 0) {
    GResult t1 = drawG_in(c, c1, q1, -r0.x, true, Symmetry::rot180(), out);
    out.edge(v, c1, t1.parent_bend);
  }
  if (c21 >= 0) {
    GResult t21 = drawG_in(c, c21, sp.right, r1.x, r1.x > apex_x,
                           Symmetry::reflect_y(), out);
    out.edge(c2, c21, t21.parent_bend);
  }
  if (c22 >= 0) {
    std::vector<Pt> lower;
    for (const Pt& p : sp.below)
      if (p.y < r1.y) lower.push_back(p);
    drawF(c, c22, lower, r1.x, out);
    out.edge(c2, c22, Bend::VH);
  }
  if (c.stats) c.stats->f2_unlucky++;
  return r0;
}

GResult drawG(Ctx& c, int v, std::vector<Pt> pts, i64 px, bool has_vertical,
              Fragment& out) {
  if ((i64)pts.size() < (has_vertical ? c.b.ghat[v] : c.b.gnr[v]))
    throw BudgetError("g-configuration region smaller than budget");
  if (c.b.g_as_f[v] && has_vertical) {
    Pt r0 = drawF(c, v, pts, px, out);
    return {r0, Bend::VH};
  }
  if (c.stats) c.stats->g++;
  auto [c1, c2] = kids(c, v);
  i64 target = fh(c, c1) + 1;
  std::vector<Pt> by_y = sorted_by_y(pts);
  std::reverse(by_y.begin(), by_y.end());
  std::vector<Pt> qa(by_y.begin(), by_y.begin() + target);
  std::vector<Pt> rest(by_y.begin() + target, by_y.end());
  Pt q = rightmost(qa);
  if (q.x == px) throw GeometryError("point on the parent's vertical line");

  if (q.x > px) {  // the parent's horizontal ray reaches q from the left
    out.place(v, q);
    qa.erase(std::find(qa.begin(), qa.end(), q));
    if (c1 >= 0) {
      drawF_in(c, c1, qa, q.y, Symmetry::swap_xy(), out);
      out.edge(v, c1, Bend::HV);
    }
    if (c2 >= 0) {
      GResult t2 = drawG(c, c2, rest, q.x, true, out);
      out.edge(v, c2, t2.parent_bend);
    }
    return {q, Bend::HV};
  }

  if (!has_vertical)
    throw BudgetError("g-configuration needs the vertical ray");
  Pt r0 = bottommost(qa);
  out.place(v, r0);
  qa.erase(std::find(qa.begin(), qa.end(), r0));
  if (c1 >= 0) {
    drawF_in(c, c1, qa, -r0.x, Symmetry::rot180(), out);
    out.edge(v, c1, Bend::VH);
  }
  if (c2 >= 0) {
    GResult t2 =
        drawG_in(c, c2, rest, -r0.x, true, Symmetry::reflect_x(), out);
    out.edge(v, c2, t2.parent_bend);
  }
  return {r0, Bend::VH};
}

}  // namespace

BinaryBudgets compute_budgets(const RootedTree& t) {
  int n = t.n();
  BinaryBudgets b;
  b.fhat.assign(n, 0);
  b.ghat.assign(n, 0);
  b.gnr.assign(n, 0);
  b.fchoice.assign(n, FChoice::Leaf);
  b.g_as_f.assign(n, false);
  std::vector<int> size = t.subtree_sizes();

  auto fv = [&](int v) -> i64 { return v < 0 ? 0 : b.fhat[v]; };
  auto gv = [&](int v) -> i64 { return v < 0 ? 0 : b.ghat[v]; };
  auto gn = [&](int v) -> i64 { return v < 0 ? 0 : b.gnr[v]; };

  // children are size-sorted, so a postorder over ids needs explicit order
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
    const auto& ch = t.children[v];
    if (ch.size() > 2)
      throw TreeError("binary budgets need <= 2 children per node");
    if (ch.empty()) {
      b.fhat[v] = b.ghat[v] = b.gnr[v] = 1;
      continue;
    }
    int c1 = ch.size() == 2 ? ch[0] : -1;
    int c2 = ch.size() == 2 ? ch[1] : ch[0];
    int c21 = -1, c22 = -1;
    if (!t.children[c2].empty()) {
      const auto& gc = t.children[c2];
      c21 = gc.size() == 2 ? gc[0] : -1;
      c22 = gc.size() == 2 ? gc[1] : gc[0];
    }
    i64 f1 = 2 * fv(c1) + gv(c2) + 1;
    i64 f1p = 2 * gv(c1) + fv(c2) + 1;
    i64 comb = 2 * gv(c1) + 2 * fv(c21) + gv(c22) + 2;
    i64 f2 = std::max(gv(c1) + gn(c21) + fv(c2),
                      2 * gv(c1) + fv(c22) + (i64)size[v]);
    // the recursion is picked by the split thresholds of the analysis: a
    // light T1 goes through f-1 (or f-1'), a light T21 through the combined
    // f-1'/f-1 step, and the balanced remainder through f-2
    i64 n1 = c1 < 0 ? 0 : size[c1];
    i64 n21 = c21 < 0 ? 0 : size[c21];
    i64 best;
    if (1000 * n1 <= 349 * size[v]) {
      best = std::min(f1, f1p);
      b.fchoice[v] = f1 <= f1p ? FChoice::F1 : FChoice::F1P;
    } else if (1000 * n21 <= 82 * size[v]) {
      best = std::min({f1, f1p, comb});
      b.fchoice[v] = best == f1    ? FChoice::F1
                     : best == f1p ? FChoice::F1P
                                   : FChoice::Comb;
    } else {
      best = f2;
      b.fchoice[v] = FChoice::F2;
    }
    b.fhat[v] = best;
    i64 gform = fv(c1) + gv(c2) + 1;
    b.gnr[v] = gform;
    b.ghat[v] = std::min(b.fhat[v], gform);
    b.g_as_f[v] = b.fhat[v] < gform;
  }
  return b;
}

Drawing draw_in_config(const RootedTree& t, const std::vector<Pt>& pts,
                       const DrawConfig& cfg, BinaryStats* stats) {
  assert_general_position(pts);
  BinaryBudgets b = compute_budgets(t);
  Ctx ctx{t, t.subtree_sizes(), b, stats};
  Fragment frag;
  if (cfg.g_config)
    drawG(ctx, t.root, pts, cfg.x, cfg.has_vertical, frag);
  else
    drawF(ctx, t.root, pts, cfg.x, frag);
  Drawing d;
  d.tree = t;
  d.pos.resize(t.n());
  for (auto& [id, p] : frag.pos) d.pos[id] = p;
  d.edges = std::move(frag.edges);
  return d;
}

Drawing embed_binary(const RootedTree& t, const std::vector<Pt>& pts,
                     BinaryStats* stats) {
  t.check_degree_cap(3);
  int n = t.n();
  if (n == 0) throw TreeError("empty tree");
  if ((i64)pts.size() < n) throw BudgetError("fewer points than vertices");

  int leaf = -1;
  for (int v = 0; v < n && leaf < 0; ++v)
    if (t.degree(v) <= 1) leaf = v;
  RootedTree rt = t.rerooted(leaf);

  // normalized even grid; placements map back through coordinate ranks
  std::vector<Pt> norm = normalize_points(pts);
  std::vector<Pt> by_x = sorted_by_x(pts);
  std::vector<Pt> by_y = sorted_by_y(pts);

  BinaryBudgets b = compute_budgets(rt);
  if ((i64)pts.size() < b.fhat[rt.root])
    throw BudgetError("point set smaller than the root budget");

  Ctx ctx{rt, rt.subtree_sizes(), b, stats};
  i64 apex = topmost(norm).x + 1;
  Fragment frag;
  drawF(ctx, rt.root, norm, apex, frag);

  Drawing d;
  d.tree = t;
  d.pos.resize(n);
  for (auto& [id, p] : frag.pos) {
    Pt orig{by_x[p.x / 2].x, by_y[p.y / 2].y};
    d.pos[id] = orig;
  }
  for (const EdgeDraw& e : frag.edges) {
    if (t.parent[e.v] == e.u)
      d.edges.push_back(e);
    else
      d.edges.push_back({e.v, e.u, flip(e.bend)});
  }
  return d;
}

}  // namespace ortho
