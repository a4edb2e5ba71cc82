#include "ortho/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace ortho {
namespace {

struct OSeg {
  Pt a, b;
  bool horiz = true;
  int u = -1, v = -1;  // owning edge
};

void push_osegs(std::vector<OSeg>& out, int u, int v, Pt pu, Pt pv, Bend bend) {
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

// 0 = disjoint, 1 = single point, 2 = positive overlap
int oseg_isect(const OSeg& s, const OSeg& t, Pt* pt) {
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
  const OSeg& h = s.horiz ? s : t;
  const OSeg& w = s.horiz ? t : s;
  if (h.a.x <= w.a.x && w.a.x <= h.b.x && w.a.y <= h.a.y && h.a.y <= w.b.y) {
    *pt = {w.a.x, h.a.y};
    return 1;
  }
  return 0;
}

bool on_oseg(const Pt& p, const OSeg& s) {
  if (s.horiz) return p.y == s.a.y && s.a.x <= p.x && p.x <= s.b.x;
  return p.x == s.a.x && s.a.y <= p.y && p.y <= s.b.y;
}

Port port_of(Pt from, Pt to, bool first_horiz) {
  if (first_horiz) return to.x > from.x ? Port::R : Port::L;
  return to.y > from.y ? Port::U : Port::D;
}

struct Search {
  int n = 0;
  std::vector<std::vector<int>> adj;
  const std::vector<std::vector<int>>* cyc = nullptr;  // prescription or null
  std::vector<Pt> pts;
  std::vector<int> order;  // placement order; order[0] has no parent edge
  std::vector<int> par;    // par[i] = already-placed neighbor of order[i]

  std::vector<Pt> pos;
  std::vector<char> placed, used;
  std::vector<OSeg> segs;
  std::vector<EdgeDraw> edges;

  long long budget = -1;
  long long expanded = 0, prunes = 0;
  bool truncated = false;
  std::vector<Pt> found_pos;
  std::vector<EdgeDraw> found_edges;

  // does the candidate edge collide with the partial drawing?
  bool clashes(int u, int v, Pt q, Bend b) const {
    std::vector<OSeg> ns;
    push_osegs(ns, u, v, pos[u], q, b);
    Pt p;
    for (const OSeg& s : ns) {
      for (const OSeg& old : segs) {
        int kind = oseg_isect(s, old, &p);
        if (kind == 2) return true;
        if (kind == 1) {
          bool shared = (u == old.u || u == old.v) && pos[u] == p;
          if (!shared) return true;
        }
      }
      for (int w = 0; w < n; ++w)
        if (placed[w] && w != u && on_oseg(pos[w], s)) return true;
    }
    for (const OSeg& old : segs)
      if (on_oseg(q, old)) return true;
    return false;
  }

  // realized order of placed neighbors must be a rotation of the
  // prescription restricted to those neighbors
  bool conforms(int w, Pt wq, int fresh, Pt fq) const {
    if (!cyc) return true;
    std::vector<std::pair<int, int>> slots;
    auto my = [&](int x) { return x == fresh ? fq : pos[x]; };
    for (const EdgeDraw& e : edges) {
      if (e.u != w && e.v != w) continue;
      int nb = e.u == w ? e.v : e.u;
      bool fh = (w == e.u) == (e.bend == Bend::HV);
      slots.push_back({(int)port_of(wq, my(nb), fh), nb});
    }
    std::sort(slots.begin(), slots.end());
    std::vector<int> real;
    for (auto& [p, nb] : slots) real.push_back(nb);
    std::vector<int> want;
    for (int nb : (*cyc)[w])
      if (nb == fresh || placed[nb]) want.push_back(nb);
    if (real.size() != want.size()) return false;  // never happens
    for (std::size_t r = 0; r < want.size(); ++r) {
      bool ok = true;
      for (std::size_t i = 0; i < want.size() && ok; ++i)
        ok = real[i] == want[(i + r) % want.size()];
      if (ok) return true;
    }
    return false;
  }

  bool rec(std::size_t i) {
    if (truncated) return false;
    if (i == order.size()) {
      found_pos = pos;
      found_edges = edges;
      return true;
    }
    int v = order[i], u = par[i];
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
      if (used[pi]) continue;
      Pt q = pts[pi];
      if (u < 0) {
        if (budget >= 0 && expanded >= budget) {
          truncated = true;
          return false;
        }
        ++expanded;
        pos[v] = q;
        placed[v] = 1;
        used[pi] = 1;
        if (rec(i + 1)) return true;
        placed[v] = 0;
        used[pi] = 0;
        if (truncated) return false;
        continue;
      }
      for (Bend b : {Bend::HV, Bend::VH}) {
        if (budget >= 0 && expanded >= budget) {
          truncated = true;
          return false;
        }
        if (clashes(u, v, q, b)) {
          ++prunes;
          continue;
        }
        if (cyc) {
          edges.push_back({u, v, b});
          bool ok = conforms(u, pos[u], v, q) && conforms(v, q, v, q);
          edges.pop_back();
          if (!ok) {
            ++prunes;
            continue;
          }
        }
        ++expanded;
        std::size_t nsegs = segs.size();
        push_osegs(segs, u, v, pos[u], q, b);
        edges.push_back({u, v, b});
        pos[v] = q;
        placed[v] = 1;
        used[pi] = 1;
        if (rec(i + 1)) return true;
        placed[v] = 0;
        used[pi] = 0;
        edges.pop_back();
        segs.resize(nsegs);
        if (truncated) return false;
      }
    }
    return false;
  }
};

std::vector<std::vector<int>> undirected_adj(const RootedTree& t) {
  std::vector<std::vector<int>> adj(t.n());
  for (int v = 0; v < t.n(); ++v)
    if (t.parent[v] >= 0) {
      adj[v].push_back(t.parent[v]);
      adj[t.parent[v]].push_back(v);
    }
  return adj;
}

// placement order: depth first from a maximum-degree node, lighter
// subtrees first so leaf constraints land before the next heavy branch
void build_order(const std::vector<std::vector<int>>& adj, Search& s) {
  int n = (int)adj.size();
  int start = 0;
  for (int v = 1; v < n; ++v)
    if (adj[v].size() > adj[start].size()) start = v;
  // subtree sizes rooted at start
  std::vector<int> size(n, 1);
  std::vector<std::pair<int, int>> post;
  std::vector<std::pair<int, int>> stack{{start, -1}};
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    post.push_back({v, p});
    for (int w : adj[v])
      if (w != p) stack.push_back({w, v});
  }
  for (auto it = post.rbegin(); it != post.rend(); ++it)
    if (it->second >= 0) size[it->second] += size[it->first];

  s.order.clear();
  s.par.clear();
  std::vector<std::pair<int, int>> dfs{{start, -1}};
  while (!dfs.empty()) {
    auto [v, p] = dfs.back();
    dfs.pop_back();
    s.order.push_back(v);
    s.par.push_back(p);
    std::vector<int> kids;
    for (int w : adj[v])
      if (w != p) kids.push_back(w);
    // heavier last onto the stack so they are expanded last
    std::sort(kids.begin(), kids.end(),
              [&](int a, int b) { return size[a] > size[b]; });
    for (int w : kids) dfs.push_back({w, v});
  }
}

SearchStats run_core(const RootedTree& shape,
                     const std::vector<std::vector<int>>& adj,
                     const std::vector<std::vector<int>>* cyc,
                     const std::vector<Pt>& pts, long long budget) {
  Search s;
  s.n = (int)adj.size();
  s.adj = adj;
  s.cyc = cyc;
  s.pts = sorted_by_x(pts);
  build_order(adj, s);
  s.pos.assign(s.n, {});
  s.placed.assign(s.n, 0);
  s.used.assign(s.pts.size(), 0);
  s.budget = budget;

  auto t0 = std::chrono::steady_clock::now();
  bool found = s.rec(0);
  auto t1 = std::chrono::steady_clock::now();

  SearchStats stats;
  stats.nodes_expanded = s.expanded;
  stats.prunes = s.prunes;
  stats.elapsed_sec = std::chrono::duration<double>(t1 - t0).count();
  if (found) {
    stats.result = Feas::Feasible;
    stats.witness.tree = shape;
    stats.witness.pos = s.found_pos;
    for (const EdgeDraw& e : s.found_edges) {
      if (shape.parent[e.v] == e.u)
        stats.witness.edges.push_back(e);
      else
        stats.witness.edges.push_back({e.v, e.u, flip(e.bend)});
    }
  } else {
    stats.result = s.truncated ? Feas::Unknown : Feas::Infeasible;
  }
  return stats;
}

void check_cap(int n, std::size_t npts) {
  if (n > ORACLE_MAX_N)
    throw CapExceeded("tree larger than the exhaustive-search cap");
  if ((i64)npts < n) throw InputError("fewer points than tree nodes");
}

}  // namespace

SearchStats exists_drawing(const RootedTree& t, const std::vector<Pt>& pts,
                           long long node_budget) {
  check_cap(t.n(), pts.size());
  assert_general_position(pts);
  return run_core(t, undirected_adj(t), nullptr, pts, node_budget);
}

SearchStats exists_drawing_ordered(const OrderedTree& t,
                                   const std::vector<Pt>& pts,
                                   long long node_budget) {
  check_cap(t.n(), pts.size());
  assert_general_position(pts);
  RootedTree rt = t.to_rooted();
  std::vector<std::vector<int>> adj = undirected_adj(rt);

  SearchStats acc;
  acc.result = Feas::Infeasible;
  for (bool reflect : {false, true}) {
    std::vector<std::vector<int>> cyc = t.cyclic;
    if (reflect)
      for (auto& c : cyc) std::reverse(c.begin(), c.end());
    SearchStats st = run_core(rt, adj, &cyc, pts, node_budget);
    acc.nodes_expanded += st.nodes_expanded;
    acc.prunes += st.prunes;
    acc.elapsed_sec += st.elapsed_sec;
    if (st.result == Feas::Feasible) {
      acc.result = Feas::Feasible;
      acc.witness = st.witness;
      return acc;
    }
    if (st.result == Feas::Unknown) acc.result = Feas::Unknown;
  }
  return acc;
}

std::vector<OrderingClassResult> enumerate_orderings_and_test(
    const CaterpillarShape& shape, const std::vector<Pt>& pts,
    long long node_budget) {
  check_cap(shape.n(), pts.size());
  int L = shape.spine_len();
  std::vector<int> free_idx;  // internal spine vertices with a real choice
  for (int i = 1; i < L - 1; ++i)
    if (shape.leaves_per_spine[i] >= 2) free_idx.push_back(i);

  std::vector<int> rev(shape.leaves_per_spine.rbegin(),
                       shape.leaves_per_spine.rend());
  bool palindrome = rev == shape.leaves_per_spine;

  std::set<std::vector<int>> seen;
  std::vector<OrderingClassResult> out;
  for (int mask = 0; mask < (1 << free_idx.size()); ++mask) {
    std::vector<int> code(L, 0);
    for (std::size_t j = 0; j < free_idx.size(); ++j)
      if (mask & (1 << j)) code[free_idx[j]] = 1;
    std::vector<int> key = code;
    if (palindrome) {
      std::vector<int> flipped(code.rbegin(), code.rend());
      key = std::min(key, flipped);
    }
    if (!seen.insert(key).second) continue;

    OrderingClassResult res;
    res.ordering.assign(L, SpineOrdering::TV);
    for (int i = 0; i < L; ++i)
      if (key[i]) res.ordering[i] = SpineOrdering::NTV;
    OrderedTree ot = build_top_view_caterpillar(shape, res.ordering);
    res.stats = exists_drawing_ordered(ot, pts, node_budget);
    out.push_back(std::move(res));
  }
  return out;
}

bool naive_exists_drawing(const RootedTree& t, const std::vector<Pt>& pts) {
  int n = t.n();
  check_cap(n, pts.size());
  assert_general_position(pts);
  std::vector<std::pair<int, int>> tree_edges;
  for (int v = 0; v < n; ++v)
    if (t.parent[v] >= 0) tree_edges.push_back({t.parent[v], v});

  std::vector<char> used(pts.size(), 0);
  Drawing d;
  d.tree = t;
  d.pos.assign(n, {});

  auto bends_ok = [&]() {
    int m = (int)tree_edges.size();
    for (int bm = 0; bm < (1 << m); ++bm) {
      d.edges.clear();
      for (int e = 0; e < m; ++e)
        d.edges.push_back({tree_edges[e].first, tree_edges[e].second,
                           (bm >> e) & 1 ? Bend::VH : Bend::HV});
      if (validate(d).ok) return true;
    }
    return false;
  };

  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == n) return bends_ok();
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
      if (used[pi]) continue;
      used[pi] = 1;
      d.pos[v] = pts[pi];
      if (go(v + 1)) return true;
      used[pi] = 0;
    }
    return false;
  };
  return go(0);
}

}  // namespace ortho
