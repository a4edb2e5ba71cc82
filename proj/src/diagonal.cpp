#include "ortho/diagonal.hpp"

#include <algorithm>

namespace ortho {
namespace {

// A slot describes where one child subtree of v goes: which side of v its
// chain interval lies on, whether that interval is adjacent to v or beyond
// the adjacent interval, which port of v the edge leaves from, and from which
// direction the edge enters the child.
struct Slot {
  bool below;
  bool adjacent;
  Port port;
  DiagEntry child_entry;
  Bend bend;
};

const Slot kBelowAdjL{true, true, Port::L, DiagEntry::Up, Bend::HV};
const Slot kAboveAdjR{false, true, Port::R, DiagEntry::Down, Bend::HV};
const Slot kBelowFarD{true, false, Port::D, DiagEntry::Right, Bend::VH};
const Slot kAboveFarU{false, false, Port::U, DiagEntry::Left, Bend::VH};
const Slot kAboveAdjU{false, true, Port::U, DiagEntry::Left, Bend::VH};
const Slot kBelowAdjD{true, true, Port::D, DiagEntry::Right, Bend::VH};

std::vector<Slot> slots_for(DiagEntry entry) {
  switch (entry) {
    case DiagEntry::None:
      return {kBelowAdjL, kAboveAdjR, kBelowFarD, kAboveFarU};
    case DiagEntry::Up:
      return {kBelowAdjL, kAboveAdjR, kBelowFarD};
    case DiagEntry::Down:
      return {kAboveAdjR, kBelowAdjL, kAboveFarU};
    case DiagEntry::Right:
      return {kBelowAdjL, kBelowFarD, kAboveAdjU};
    case DiagEntry::Left:
      return {kAboveAdjR, kAboveFarU, kBelowAdjD};
  }
  return {};
}

int place_with_slots(const RootedTree& t, const std::vector<int>& size, int v,
                     const std::vector<Pt>& chain, int lo, int hi,
                     const std::vector<Slot>& slots, Fragment& out) {
  const auto& kids = t.children[v];
  if ((int)kids.size() > (int)slots.size())
    throw TreeError("diagonal embedding: node has more children than available slots");
  if (hi - lo + 1 != size[v])
    throw TreeError("diagonal embedding: interval size mismatch");

  // Interval layout, bottom to top: [below-far][below-adjacent][v]
  // [above-adjacent][above-far].
  int far_below = 0, adj_below = 0, adj_above = 0;
  for (size_t i = 0; i < kids.size(); ++i) {
    const Slot& s = slots[i];
    int sz = size[kids[i]];
    if (s.below && !s.adjacent) far_below = sz;
    if (s.below && s.adjacent) adj_below = sz;
    if (!s.below && s.adjacent) adj_above = sz;
  }
  int vi = lo + far_below + adj_below;
  out.place(v, chain[vi]);

  for (size_t i = 0; i < kids.size(); ++i) {
    const Slot& s = slots[i];
    int sz = size[kids[i]];
    int clo, chi;
    if (s.below && !s.adjacent) {
      clo = lo;
      chi = lo + far_below - 1;
    } else if (s.below && s.adjacent) {
      clo = vi - adj_below;
      chi = vi - 1;
    } else if (!s.below && s.adjacent) {
      clo = vi + 1;
      chi = vi + adj_above;
    } else {
      clo = vi + adj_above + 1;
      chi = hi;
    }
    if (chi - clo + 1 != sz)
      throw TreeError("diagonal embedding: bad interval split");
    out.edge(v, kids[i], s.bend);
    diag_place(t, size, kids[i], chain, clo, chi, s.child_entry, out);
  }
  return vi;
}

}  // namespace

int diag_place(const RootedTree& t, const std::vector<int>& size, int v,
               const std::vector<Pt>& chain, int lo, int hi, DiagEntry entry,
               Fragment& out) {
  return place_with_slots(t, size, v, chain, lo, hi, slots_for(entry), out);
}

Drawing embed_on_diagonal(const RootedTree& t, const std::vector<Pt>& pts,
                          bool need_upward_visibility) {
  if ((int)pts.size() != t.n())
    throw GeometryError("embed_on_diagonal: point count != tree size");
  std::vector<Pt> chain = sorted_by_x(pts);
  bool asc = true, desc = true;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].y >= chain[i + 1].y) asc = false;
    if (chain[i].y <= chain[i + 1].y) desc = false;
  }
  if (!asc && !desc)
    throw GeometryError("embed_on_diagonal: points are not a diagonal chain");

  bool flipped = !asc && chain.size() > 1;
  if (flipped) {
    chain = apply_symmetry(Symmetry::reflect_y(), chain);
    std::reverse(chain.begin(), chain.end());
  }

  std::vector<int> size = t.subtree_sizes();
  std::vector<Slot> root_slots = slots_for(DiagEntry::None);
  if (need_upward_visibility) {
    // Keep the column above the root free: drop the slot whose edge runs
    // vertically at the root's x on the side that faces up in the original
    // frame (below-far when the chain was reflected, above-far otherwise).
    root_slots.clear();
    root_slots.push_back(kBelowAdjL);
    root_slots.push_back(kAboveAdjR);
    root_slots.push_back(flipped ? kAboveFarU : kBelowFarD);
    if ((int)t.children[t.root].size() > 3)
      throw TreeError(
          "embed_on_diagonal: upward visibility needs root degree <= 3");
  }

  Fragment frag;
  place_with_slots(t, size, t.root, chain, 0, t.n() - 1, root_slots, frag);
  if (flipped) frag.transform(Symmetry::reflect_y());

  Drawing d;
  d.tree = t;
  d.pos.resize(t.n());
  for (auto& [id, p] : frag.pos) d.pos[id] = p;
  d.edges = std::move(frag.edges);
  return d;
}

}  // namespace ortho
