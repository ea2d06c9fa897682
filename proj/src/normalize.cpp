#include "plabic/normalize.hpp"

#include <algorithm>

#include "plabic/moves.hpp"
#include "plabic/trips.hpp"

namespace plabic {

nlohmann::json to_json(const Witness& w) {
  return {{"kind", w.kind}, {"stage", w.stage}, {"vertices", w.vertices}, {"edges", w.edges}, {"trips", w.trips}};
}

namespace {

bool find_loop(const PlabicGraph& g, int stage, Witness* w) {
  for (int e : g.edges())
    if (g.is_loop(e)) {
      *w = Witness{"Loop", stage, {g.vertex_of(2 * e)}, {e}, {}};
      return true;
    }
  return false;
}

}  // namespace

NormalizeResult normalize(const PlabicGraph& input) {
  require_valid(input);
  NormalizeResult res;
  auto reject = [&](Witness w) {
    res.ok = false;
    res.witness = std::move(w);
    return res;
  };
  Witness w;
  if (find_loop(input, 0, &w)) return reject(w);

  // 1. collapse trees
  PlabicGraph g = collapse_trees(input);
  if (find_loop(g, 1, &w)) return reject(w);

  // 2. bivalent vertices
  for (bool again = true; again;) {
    again = false;
    for (int v : g.internal_vertices()) {
      if (g.degree(v) != 2) continue;
      const auto& r = g.rotation(v);
      if (edge_of(r[0]) == edge_of(r[1])) continue;
      rewrite::remove_bivalent(g, v);
      again = true;
      break;
    }
  }
  if (find_loop(g, 2, &w)) return reject(w);

  // 3. lollipops
  for (int v : g.internal_vertices()) {
    if (!g.is_lollipop(v)) continue;
    int d = g.rotation(v)[0];
    res.lollipops_removed.push_back({PlabicGraph::label_of(g.head(d)), g.color(v)});
    g.remove_edge(edge_of(d));
    g.remove_vertex(v);
  }
  std::sort(res.lollipops_removed.begin(), res.lollipops_removed.end(),
            [](const RemovedLollipop& a, const RemovedLollipop& b) { return a.label < b.label; });

  // 4. internal leaves
  for (int v : g.internal_vertices())
    if (g.degree(v) == 1) {
      int d = g.rotation(v)[0];
      return reject(Witness{"InternalLeaf", 4, {v, g.head(d)}, {edge_of(d)}, {}});
    }

  // 5. black-black edges
  for (bool again = true; again;) {
    again = false;
    for (int e : g.edges()) {
      int u = g.vertex_of(2 * e), x = g.vertex_of(2 * e + 1);
      if (u < 0 || x < 0 || g.color(u) != Color::Black || g.color(x) != Color::Black) continue;
      if (u == x) return reject(Witness{"Loop", 5, {u}, {e}, {}});
      rewrite::contract(g, 2 * e);
      if (find_loop(g, 5, &w)) return reject(w);
      again = true;
      break;
    }
  }

  // 6. split whites of degree >= 4 into a comb of trivalent whites
  for (int v : g.internal_vertices()) {
    if (g.color(v) != Color::White) continue;
    while (g.degree(v) > 3) rewrite::split(g, v, 0, 2);
  }

  // 7. black vertex on every edge without a black endpoint
  for (int e : g.edges()) {
    int u = g.vertex_of(2 * e), x = g.vertex_of(2 * e + 1);
    bool black = (u >= 0 && g.color(u) == Color::Black) || (x >= 0 && g.color(x) == Color::Black);
    if (!black) rewrite::insert_bivalent(g, 2 * e, Color::Black);
  }

  for (const auto& l : res.lollipops_removed) {
    int v = g.add_vertex(Color::Black);
    int e = g.new_edge();
    g.set_rotation(v, {2 * e + 1});
    g.set_rotation(PlabicGraph::boundary_id(l.label), {2 * e});
  }
  require_valid(g);
  res.ok = true;
  res.graph = std::move(g);
  return res;
}

ReducedResult is_reduced(const PlabicGraph& g) {
  ReducedResult r;
  NormalizeResult n = normalize(g);
  if (!n.ok) {
    r.witness = n.witness;
    return r;
  }
  auto bad = bad_features(n.graph);
  if (!bad.empty()) {
    const BadFeature& f = bad.front();
    r.witness = Witness{to_string(f.kind), 0, {}, f.edges, f.trips};
    return r;
  }
  r.reduced = true;
  return r;
}

}  // namespace plabic
