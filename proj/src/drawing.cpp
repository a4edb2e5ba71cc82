#include "ortho/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ortho {

static Seg make_seg(Pt a, Pt b, int edge) {
  Seg s;
  s.horiz = a.y == b.y;
  if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
  s.a = a;
  s.b = b;
  s.edge = edge;
  return s;
}

std::vector<Seg> edge_segments(const Drawing& d, int ei) {
  const EdgeDraw& e = d.edges[ei];
  Pt pu = d.pos[e.u], pv = d.pos[e.v];
  Pt bend = e.bend == Bend::HV ? Pt{pv.x, pu.y} : Pt{pu.x, pv.y};
  std::vector<Seg> out;
  if (bend != pu) out.push_back(make_seg(pu, bend, ei));
  if (bend != pv) out.push_back(make_seg(bend, pv, ei));
  return out;
}

std::vector<Seg> all_segments(const Drawing& d) {
  std::vector<Seg> out;
  for (int i = 0; i < (int)d.edges.size(); ++i)
    for (const Seg& s : edge_segments(d, i)) out.push_back(s);
  return out;
}

Port port_at(const Drawing& d, int ei, int node) {
  const EdgeDraw& e = d.edges[ei];
  Pt from = d.pos[node];
  Pt to = d.pos[node == e.u ? e.v : e.u];
  // Seen from u the first segment follows e.bend; from v it is the other.
  bool first_horiz = (node == e.u) == (e.bend == Bend::HV);
  if (first_horiz) return to.x > from.x ? Port::R : Port::L;
  return to.y > from.y ? Port::U : Port::D;
}

static bool on_seg(const Seg& s, const Pt& p) {
  if (s.horiz)
    return p.y == s.a.y && p.x >= s.a.x && p.x <= s.b.x;
  return p.x == s.a.x && p.y >= s.a.y && p.y <= s.b.y;
}

// 0 = disjoint, 1 = single point (stored in out), 2 = positive overlap.
static int seg_intersect(const Seg& s, const Seg& t, Pt& out) {
  if (s.horiz != t.horiz) {
    const Seg& h = s.horiz ? s : t;
    const Seg& v = s.horiz ? t : s;
    if (v.a.x >= h.a.x && v.a.x <= h.b.x && h.a.y >= v.a.y && h.a.y <= v.b.y) {
      out = {v.a.x, h.a.y};
      return 1;
    }
    return 0;
  }
  if (s.horiz) {
    if (s.a.y != t.a.y) return 0;
    i64 lo = std::max(s.a.x, t.a.x), hi = std::min(s.b.x, t.b.x);
    if (lo > hi) return 0;
    if (lo < hi) return 2;
    out = {lo, s.a.y};
    return 1;
  }
  if (s.a.x != t.a.x) return 0;
  i64 lo = std::max(s.a.y, t.a.y), hi = std::min(s.b.y, t.b.y);
  if (lo > hi) return 0;
  if (lo < hi) return 2;
  out = {s.a.x, lo};
  return 1;
}

std::vector<int> realized_cyclic_order(const Drawing& d, int v) {
  // ccw starting at R: R, U, L, D.
  std::vector<std::pair<int, int>> slots;  // (port rank, neighbor)
  for (int i = 0; i < (int)d.edges.size(); ++i) {
    const EdgeDraw& e = d.edges[i];
    if (e.u != v && e.v != v) continue;
    int nb = e.u == v ? e.v : e.u;
    slots.push_back({(int)port_at(d, i, v), nb});
  }
  std::sort(slots.begin(), slots.end());
  std::vector<int> out;
  for (auto& [p, nb] : slots) out.push_back(nb);
  return out;
}

OrderedTree extract_ordered_tree(const Drawing& d) {
  OrderedTree t;
  t.root = d.tree.root;
  t.cyclic.resize(d.tree.n());
  for (int v = 0; v < d.tree.n(); ++v) t.cyclic[v] = realized_cyclic_order(d, v);
  return t;
}

// True if `real` equals `want` up to rotation (optionally reversed first).
static bool cyclic_match(std::vector<int> real, std::vector<int> want,
                         bool reflect) {
  if (real.size() != want.size()) return false;
  if (real.empty()) return true;
  if (reflect) std::reverse(want.begin(), want.end());
  for (std::size_t r = 0; r < want.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < want.size() && ok; ++i)
      ok = real[i] == want[(i + r) % want.size()];
    if (ok) return true;
  }
  return false;
}

ValidationReport validate(const Drawing& d, const OrderedTree* ordered) {
  ValidationReport rep;
  const int n = d.tree.n();
  if ((int)d.pos.size() != n) {
    rep.fail("placement count differs from node count");
    return rep;
  }
  try {
    assert_general_position(d.pos);
  } catch (const GeometryError& e) {
    rep.fail(e.what());
  }
  // Edges must be exactly the parent links of the tree.
  std::set<std::pair<int, int>> want, got;
  for (int v = 0; v < n; ++v)
    if (d.tree.parent[v] >= 0) want.insert({d.tree.parent[v], v});
  for (const EdgeDraw& e : d.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      rep.fail("edge endpoint out of range");
      return rep;
    }
    if (!got.insert({e.u, e.v}).second) rep.fail("duplicate edge");
  }
  if (want != got) rep.fail("edge set differs from tree parent links");
  if (!rep.ok) return rep;

  std::vector<Seg> segs = all_segments(d);
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].edge == segs[j].edge) continue;
      Pt p;
      int kind = seg_intersect(segs[i], segs[j], p);
      if (kind == 2) {
        rep.fail("segments overlap with positive length");
      } else if (kind == 1) {
        const EdgeDraw& a = d.edges[segs[i].edge];
        const EdgeDraw& b = d.edges[segs[j].edge];
        bool shared_node = false;
        for (int x : {a.u, a.v})
          for (int y : {b.u, b.v})
            if (x == y && d.pos[x] == p) shared_node = true;
        if (!shared_node) {
          std::ostringstream msg;
          msg << "illegal contact at (" << p.x << "," << p.y << ") between edges "
              << a.u << "-" << a.v << " and " << b.u << "-" << b.v;
          rep.fail(msg.str());
        }
      }
    }
  // No node may sit on a segment of a non-incident edge, and on incident
  // edges only as the terminal endpoint.
  for (int v = 0; v < n; ++v)
    for (const Seg& s : segs) {
      if (!on_seg(s, d.pos[v])) continue;
      const EdgeDraw& e = d.edges[s.edge];
      if (e.u != v && e.v != v) {
        rep.fail("node " + std::to_string(v) + " lies on edge " +
                 std::to_string(e.u) + "-" + std::to_string(e.v));
      } else if (d.pos[v] != s.a && d.pos[v] != s.b) {
        rep.fail("node " + std::to_string(v) + " in the interior of its edge");
      }
    }
  // Distinct ports per node.
  for (int v = 0; v < n; ++v) {
    std::set<Port> used;
    for (int i = 0; i < (int)d.edges.size(); ++i) {
      if (d.edges[i].u != v && d.edges[i].v != v) continue;
      if (!used.insert(port_at(d, i, v)).second)
        rep.fail("port clash at node " + std::to_string(v));
    }
  }
  if (ordered) {
    if (ordered->n() != n) {
      rep.fail("ordered tree size differs");
      return rep;
    }
    for (bool reflect : {false, true}) {
      bool all = true;
      for (int v = 0; v < n && all; ++v)
        all = cyclic_match(realized_cyclic_order(d, v), ordered->cyclic[v],
                           reflect);
      if (all) return rep;
    }
    rep.fail("cyclic orders do not match the prescription");
  }
  return rep;
}

Drawing apply_symmetry(const Symmetry& s, Drawing d) {
  for (Pt& p : d.pos) p = s(p);
  if (s.swaps_axes())
    for (EdgeDraw& e : d.edges) e.bend = flip(e.bend);
  return d;
}

std::string drawing_to_json(const Drawing& d) {
  nlohmann::json j;
  j["tree"] = serialize_tree(d.tree);
  j["nodes"] = nlohmann::json::array();
  for (int v = 0; v < d.tree.n(); ++v)
    j["nodes"].push_back({{"id", v}, {"x", d.pos[v].x}, {"y", d.pos[v].y}});
  j["edges"] = nlohmann::json::array();
  for (const EdgeDraw& e : d.edges)
    j["edges"].push_back({{"u", e.u},
                          {"v", e.v},
                          {"bend", e.bend == Bend::HV ? "HV" : "VH"}});
  return j.dump(2);
}

Drawing drawing_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad drawing JSON: ") + e.what());
  }
  Drawing d;
  if (j.at("tree").is_string())
    d.tree = parse_tree(j["tree"].get<std::string>());
  else
    d.tree = ordered_tree_from_json(j["tree"].dump()).to_rooted();
  d.pos.assign(d.tree.n(), {});
  for (const auto& node : j.at("nodes")) {
    int id = node.at("id").get<int>();
    if (id < 0 || id >= d.tree.n()) throw InputError("node id out of range");
    d.pos[id] = {node.at("x").get<i64>(), node.at("y").get<i64>()};
  }
  for (const auto& edge : j.at("edges")) {
    EdgeDraw e;
    e.u = edge.at("u").get<int>();
    e.v = edge.at("v").get<int>();
    std::string b = edge.at("bend").get<std::string>();
    if (b != "HV" && b != "VH") throw InputError("bend must be HV or VH");
    e.bend = b == "HV" ? Bend::HV : Bend::VH;
    d.edges.push_back(e);
  }
  return d;
}

std::string render_svg(const Drawing& d) {
  i64 xlo = 0, xhi = 2, ylo = 0, yhi = 2;
  if (!d.pos.empty()) {
    xlo = leftmost(d.pos).x - 2;
    xhi = rightmost(d.pos).x + 2;
    ylo = bottommost(d.pos).y - 2;
    yhi = topmost(d.pos).y + 2;
  }
  auto X = [&](i64 x) { return 10 * (x - xlo); };
  auto Y = [&](i64 y) { return 10 * (yhi - y); };  // flip: svg y grows down
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
      << X(xhi) << ' ' << Y(ylo) << "\">\n";
  for (int ei = 0; ei < (int)d.edges.size(); ++ei) {
    const EdgeDraw& e = d.edges[ei];
    Pt pu = d.pos[e.u], pv = d.pos[e.v];
    Pt bend = e.bend == Bend::HV ? Pt{pv.x, pu.y} : Pt{pu.x, pv.y};
    svg << "  <polyline fill=\"none\" stroke=\"black\" points=\""
        << X(pu.x) << ',' << Y(pu.y) << ' ' << X(bend.x) << ',' << Y(bend.y)
        << ' ' << X(pv.x) << ',' << Y(pv.y) << "\"/>\n";
  }
  for (int v = 0; v < (int)d.pos.size(); ++v) {
    svg << "  <circle cx=\"" << X(d.pos[v].x) << "\" cy=\"" << Y(d.pos[v].y)
        << "\" r=\"2\" fill=\"black\"/>\n"
        << "  <text x=\"" << X(d.pos[v].x) + 3 << "\" y=\"" << Y(d.pos[v].y) - 3
        << "\" font-size=\"6\">" << v << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ortho
