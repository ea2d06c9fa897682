#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "plabic/graph.hpp"

namespace plabic {

Classification classify(const PlabicGraph& g) {
  require_valid(g);
  Classification c;
  c.bipartite = true;
  for (int e : g.edges()) {
    int u = g.vertex_of(2 * e), v = g.vertex_of(2 * e + 1);
    if (u >= 0 && v >= 0 && g.color(u) == g.color(v)) c.bipartite = false;
  }
  c.trivalent = true;
  bool whites_ok = true;
  for (int v : g.internal_vertices()) {
    int deg = g.degree(v);
    if (deg == 1) {
      c.internal_leaves.push_back(v);
      if (g.is_lollipop(v)) c.lollipops.push_back(v);
    }
    if (!g.is_lollipop(v) && deg != 3) c.trivalent = false;
    if (g.color(v) == Color::White && deg != 3) whites_ok = false;
  }
  bool boundary_black = true;
  for (int i = 1; i <= g.b(); ++i) {
    int w = g.head(g.rotation(-i)[0]);
    if (w < 0 || g.color(w) != Color::Black) boundary_black = false;
  }
  c.normal = c.bipartite && whites_ok && boundary_black;
  return c;
}

namespace {

// Decide whether the branch hanging below `child` can be reduced by M2
// removals and M3 contractions onto `root` (internal root) or down to a
// single lollipop (boundary root). Returns the lollipop color via *color.
bool branch_collapses(const PlabicGraph& g, int root, int child, const std::map<int, std::vector<int>>& kids,
                      const std::set<int>& alive, Color* color) {
  std::map<int, std::set<int>> adj;
  std::map<int, Color> col;
  std::vector<int> stack{child};
  adj[root].insert(child);
  adj[child].insert(root);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    col[x] = g.color(x);
    auto it = kids.find(x);
    if (it == kids.end()) continue;
    for (int y : it->second) {
      if (!alive.count(y)) continue;
      adj[x].insert(y);
      adj[y].insert(x);
      stack.push_back(y);
    }
  }
  const bool boundary_root = root < 0;
  if (!boundary_root) col[root] = g.color(root);

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [x, nb] : adj) {
      if (x == root || nb.size() != 2) continue;
      int p = *nb.begin(), q = *nb.rbegin();
      adj[p].erase(x);
      adj[q].erase(x);
      adj[p].insert(q);
      adj[q].insert(p);
      adj.erase(x);
      changed = true;
      break;
    }
    if (changed) continue;
    for (auto& [x, nb] : adj) {
      if (x < 0) continue;
      for (int y : nb) {
        if (y < 0 || col[x] != col[y]) continue;
        int keep = (y == root) ? y : x;
        int gone = (keep == x) ? y : x;
        for (int z : adj[gone]) {
          if (z == keep) continue;
          adj[z].erase(gone);
          adj[z].insert(keep);
          adj[keep].insert(z);
        }
        adj[keep].erase(gone);
        adj.erase(gone);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  if (!boundary_root) return adj.size() == 1;
  if (adj.size() != 2) return false;
  for (auto& [x, nb] : adj)
    if (x != root) *color = col[x];
  return true;
}

bool collapse_pass(PlabicGraph& g) {
  // peel internal leaves to find the pendant forest
  std::map<int, int> deg;
  for (int v : g.internal_vertices()) deg[v] = g.degree(v);
  std::set<int> removed_edges;
  std::set<int> peeled;
  std::map<int, int> parent;
  std::map<int, std::vector<int>> kids;
  std::vector<int> order;
  std::deque<int> q;
  for (auto& [v, d] : deg)
    if (d == 1) q.push_back(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (peeled.count(u) || deg[u] != 1) continue;
    int dart = -1;
    for (int d : g.rotation(u))
      if (!removed_edges.count(edge_of(d))) dart = d;
    if (dart < 0) continue;
    int p = g.head(dart);
    if (p == u) continue;
    removed_edges.insert(edge_of(dart));
    peeled.insert(u);
    parent[u] = p;
    kids[p].push_back(u);
    order.push_back(u);
    deg[u] = 0;
    if (p >= 0 && --deg[p] == 1) q.push_back(p);
  }
  std::set<int> alive(peeled);
  std::vector<int> roots = order;
  std::set<int> seen(order.begin(), order.end());
  for (int u : order)
    if (!seen.count(parent[u])) {
      seen.insert(parent[u]);
      roots.push_back(parent[u]);
    }

  bool changed = false;
  for (int w : roots) {
    auto it = kids.find(w);
    if (it == kids.end()) continue;
    for (int c : it->second) {
      if (!alive.count(c)) continue;
      bool has_grandkids = false;
      if (kids.count(c))
        for (int y : kids[c]) has_grandkids |= alive.count(y) > 0;
      if (w < 0 && !has_grandkids) continue;  // already a lollipop
      Color col = Color::Black;
      if (!branch_collapses(g, w, c, kids, alive, &col)) continue;
      // remove everything strictly below c
      std::vector<int> below, stack;
      if (kids.count(c)) stack = kids[c];
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (!alive.count(x)) continue;
        below.push_back(x);
        if (kids.count(x))
          for (int y : kids[x]) stack.push_back(y);
      }
      for (int x : below) {
        for (int d : std::vector<int>(g.rotation(x))) g.remove_edge(edge_of(d));
        g.remove_vertex(x);
        alive.erase(x);
      }
      if (w < 0) {
        g.set_color(c, col);
      } else {
        for (int d : std::vector<int>(g.rotation(c))) g.remove_edge(edge_of(d));
        g.remove_vertex(c);
        alive.erase(c);
      }
      changed = true;
    }
  }
  return changed;
}

}  // namespace

PlabicGraph collapse_trees(const PlabicGraph& g) {
  require_valid(g);
  PlabicGraph h = g;
  while (collapse_pass(h)) {
  }
  return h;
}

}  // namespace plabic
