#include "ortho/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace ortho {

int RootedTree::max_degree() const {
  int d = 0;
  for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> RootedTree::subtree_sizes() const {
  std::vector<int> size(n(), 1);
  // Children have larger preorder ids only in freshly parsed trees; use an
  // explicit postorder walk to stay correct after rerooting.
  std::vector<int> order, stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : children[v]) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int c : children[*it]) size[*it] += size[c];
  return size;
}

int RootedTree::subtree_size(int v) const { return subtree_sizes()[v]; }

void RootedTree::canonicalize() {
  std::vector<int> size = subtree_sizes();
  for (auto& ch : children)
    std::sort(ch.begin(), ch.end(), [&](int a, int b) {
      return size[a] != size[b] ? size[a] < size[b] : a < b;
    });
}

RootedTree RootedTree::rerooted(int new_root) const {
  RootedTree t;
  t.root = new_root;
  t.parent.assign(n(), -1);
  t.children.assign(n(), {});
  // Build adjacency, then BFS from the new root.
  std::vector<std::vector<int>> adj(n());
  for (int v = 0; v < n(); ++v)
    if (parent[v] >= 0) {
      adj[v].push_back(parent[v]);
      adj[parent[v]].push_back(v);
    }
  std::vector<int> queue{new_root};
  std::vector<bool> seen(n(), false);
  seen[new_root] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        t.parent[w] = v;
        t.children[v].push_back(w);
        queue.push_back(w);
      }
  }
  t.canonicalize();
  return t;
}

void RootedTree::check_degree_cap(int cap) const {
  for (int v = 0; v < n(); ++v)
    if (degree(v) > cap)
      throw TreeError("node degree exceeds cap " + std::to_string(cap));
}

RootedTree parse_tree(const std::string& text) {
  RootedTree t;
  std::vector<int> stack;
  for (char ch : text) {
    if (std::isspace((unsigned char)ch)) continue;
    if (ch == '(') {
      int id = t.n();
      t.parent.push_back(stack.empty() ? -1 : stack.back());
      t.children.emplace_back();
      if (!stack.empty()) t.children[stack.back()].push_back(id);
      else if (id != 0) throw TreeError("multiple roots in tree text");
      stack.push_back(id);
    } else if (ch == ')') {
      if (stack.empty()) throw TreeError("unbalanced ')' in tree text");
      stack.pop_back();
    } else {
      throw TreeError(std::string("unexpected character in tree text: ") + ch);
    }
  }
  if (!stack.empty()) throw TreeError("unbalanced '(' in tree text");
  if (t.n() == 0) throw TreeError("empty tree text");
  t.canonicalize();
  return t;
}

std::string serialize_tree(const RootedTree& t) {
  std::string out;
  std::function<void(int)> rec = [&](int v) {
    out += '(';
    for (int c : t.children[v]) rec(c);
    out += ')';
  };
  rec(t.root);
  return out;
}

LevelChain find_level_k(const RootedTree& t) {
  std::vector<int> size = t.subtree_sizes();
  LevelChain lc;
  lc.r.push_back(t.root);
  auto level = [&](int v, int& a, int& b, int& r) {
    std::vector<int> ch = v < 0 ? std::vector<int>{} : t.children[v];
    std::sort(ch.begin(), ch.end(),
              [&](int x, int y) { return size[x] < size[y]; });
    while (ch.size() < 3) ch.insert(ch.begin(), -1);
    if (ch.size() > 3) throw TreeError("find_level_k needs <= 3 children");
    a = ch[0];
    b = ch[1];
    r = ch[2];
  };
  for (int i = 1;; ++i) {
    int a, b, r;
    level(lc.r.back(), a, b, r);
    lc.a.push_back(a);
    lc.b.push_back(b);
    lc.r.push_back(r);
    lc.na.push_back(a < 0 ? 0 : size[a]);
    lc.nb.push_back(b < 0 ? 0 : size[b]);
    lc.nr.push_back(r < 0 ? 0 : size[r]);
    int prev = i == 1 ? size[t.root] : lc.nr[i - 2];
    if (i >= 2 && 10 * (long long)lc.nr[i - 1] <= 9 * (long long)prev) {
      lc.k = i;
      return lc;
    }
  }
}

RootedTree OrderedTree::to_rooted() const {
  RootedTree t;
  t.root = root;
  t.parent.assign(n(), -1);
  t.children.assign(n(), {});
  std::vector<int> queue{root};
  std::vector<bool> seen(n(), false);
  seen[root] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : cyclic[v])
      if (!seen[w]) {
        seen[w] = true;
        t.parent[w] = v;
        t.children[v].push_back(w);
        queue.push_back(w);
      }
  }
  t.canonicalize();
  return t;
}

std::string ordered_tree_to_json(const OrderedTree& t) {
  nlohmann::json j;
  j["root"] = t.root;
  j["nodes"] = nlohmann::json::array();
  for (int v = 0; v < t.n(); ++v)
    j["nodes"].push_back({{"id", v}, {"cyclic", t.cyclic[v]}});
  return j.dump(2);
}

OrderedTree ordered_tree_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw TreeError(std::string("bad ordered-tree JSON: ") + e.what());
  }
  OrderedTree t;
  t.root = j.at("root").get<int>();
  const auto& nodes = j.at("nodes");
  t.cyclic.assign(nodes.size(), {});
  for (const auto& node : nodes) {
    int id = node.at("id").get<int>();
    if (id < 0 || id >= (int)nodes.size())
      throw TreeError("ordered-tree node id out of range");
    t.cyclic[id] = node.at("cyclic").get<std::vector<int>>();
  }
  return t;
}

int CaterpillarShape::n() const {
  int total = spine_len();
  for (int l : leaves_per_spine) total += l;
  return total;
}

OrderedTree build_top_view_caterpillar(
    const CaterpillarShape& shape, const std::vector<SpineOrdering>& ordering) {
  const int L = shape.spine_len();
  if (L < 1) throw TreeError("caterpillar needs a spine");
  OrderedTree t;
  t.root = 0;
  t.cyclic.assign(shape.n(), {});
  int next_leaf = L;
  for (int i = 0; i < L; ++i) {
    std::vector<int> leaves;
    for (int l = 0; l < shape.leaves_per_spine[i]; ++l)
      leaves.push_back(next_leaf++);
    for (int leaf : leaves) t.cyclic[leaf] = {i};
    int prev = i - 1, next = i + 1 < L ? i + 1 : -1;
    std::vector<int>& cyc = t.cyclic[i];
    if (prev < 0 || next < 0) {
      // Endpoint: all cyclic orders of (spine, leaves...) are isomorphic.
      if (prev >= 0) cyc.push_back(prev);
      if (next >= 0) cyc.push_back(next);
      for (int leaf : leaves) cyc.push_back(leaf);
    } else {
      if ((int)leaves.size() > 2)
        throw TreeError("internal spine vertex with more than two leaves");
      SpineOrdering ord =
          i < (int)ordering.size() ? ordering[i] : SpineOrdering::TV;
      if (ord == SpineOrdering::TV) {
        cyc.push_back(prev);
        if (!leaves.empty()) cyc.push_back(leaves[0]);
        cyc.push_back(next);
        if (leaves.size() > 1) cyc.push_back(leaves[1]);
      } else {
        cyc.push_back(prev);
        cyc.push_back(next);
        for (int leaf : leaves) cyc.push_back(leaf);
      }
    }
  }
  return t;
}

CaterpillarShape c14_shape() { return CaterpillarShape{{3, 2, 2, 3}}; }

}  // namespace ortho
