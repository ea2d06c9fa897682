#include "plabic/trips.hpp"

#include <algorithm>
#include <set>

namespace plabic {

const char* to_string(BadKind k) {
  switch (k) {
    case BadKind::Roundtrip: return "Roundtrip";
    case BadKind::EssentialSelfIntersection: return "EssentialSelfIntersection";
    case BadKind::BadDoubleCrossing: return "BadDoubleCrossing";
  }
  return "?";
}

int trip_step(const PlabicGraph& g, int d) {
  int v = g.head(d);
  int in = twin(d);
  return g.color(v) == Color::Black ? g.cw_prev(in) : g.cw_next(in);
}

namespace {

Trip walk(const PlabicGraph& g, int i) {
  Trip t;
  t.source = i;
  int d = g.rotation(-i)[0];
  const int limit = 2 * g.num_edges() + 2;
  for (int step = 0; step <= limit; ++step) {
    t.darts.push_back(d);
    int v = g.head(d);
    if (v < 0) {
      t.target = -v;
      return t;
    }
    d = trip_step(g, d);
  }
  throw Error(ErrorKind::InvalidGraph, "trip does not terminate");
}

}  // namespace

Trip trip_from(const PlabicGraph& g, int i) {
  require_valid(g);
  if (i < 1 || i > g.b()) throw Error(ErrorKind::BadLabel, "no boundary vertex " + std::to_string(i));
  return walk(g, i);
}

std::vector<Trip> all_trips(const PlabicGraph& g) {
  require_valid(g);
  std::vector<Trip> out;
  std::set<int> used;
  for (int i = 1; i <= g.b(); ++i) {
    out.push_back(walk(g, i));
    used.insert(out.back().darts.begin(), out.back().darts.end());
  }
  for (int e : g.edges()) {
    for (int d : {2 * e, 2 * e + 1}) {
      if (used.count(d)) continue;
      Trip t;
      t.roundtrip = true;
      int x = d;
      do {
        t.darts.push_back(x);
        used.insert(x);
        x = trip_step(g, x);
      } while (x != d);
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<int> trip_permutation(const PlabicGraph& g) {
  require_valid(g);
  std::vector<int> p;
  for (int i = 1; i <= g.b(); ++i) p.push_back(walk(g, i).target);
  return p;
}

DecoratedPermutation decorated_trip_permutation(const PlabicGraph& g) {
  std::vector<int> p = trip_permutation(g);
  DecoratedPermutation out(p, std::vector<Decoration>(p.size(), Decoration::None));
  bool need = false;
  for (int i = 1; i <= g.b(); ++i) need |= p[i - 1] == i;
  if (!need) return out;
  PlabicGraph bar = collapse_trees(g);
  for (int i = 1; i <= g.b(); ++i) {
    if (p[i - 1] != i) continue;
    int x = bar.head(bar.rotation(-i)[0]);
    if (x < 0 || !bar.is_lollipop(x))
      throw Error(ErrorKind::UndecoratableFixedPoint,
                  "fixed point " + std::to_string(i) + " does not collapse to a lollipop");
    out.deco[i - 1] = bar.color(x) == Color::White ? Decoration::Over : Decoration::Under;
  }
  return out;
}

EdgeLabeling edge_labels(const PlabicGraph& g) {
  require_valid(g);
  EdgeLabeling lab;
  for (int e : g.edges()) lab[e];
  for (int i = 1; i <= g.b(); ++i) {
    Trip t = walk(g, i);
    for (int d : t.darts) {
      auto& l = lab[edge_of(d)];
      if (std::find(l.begin(), l.end(), i) == l.end()) l.push_back(i);
    }
  }
  for (auto& [e, l] : lab) std::sort(l.begin(), l.end());
  return lab;
}

bool resonance(const PlabicGraph& g) {
  require_valid(g);
  for (int v : g.internal_vertices())
    if (g.degree(v) == 1 && !g.is_lollipop(v))
      throw Error(ErrorKind::HasInternalLeaf, "vertex " + std::to_string(v) + " is an internal leaf");
  EdgeLabeling lab = edge_labels(g);
  for (int v : g.internal_vertices()) {
    if (g.is_lollipop(v)) continue;
    std::vector<std::vector<int>> around;
    std::set<int> all;
    for (int d : g.rotation(v)) {
      const auto& l = lab[edge_of(d)];
      if (l.size() != 2) return false;
      around.push_back(l);
      all.insert(l.begin(), l.end());
    }
    const size_t m = around.size();
    if (all.size() != m) return false;
    std::vector<int> s(all.begin(), all.end());
    std::vector<std::vector<int>> want;
    for (size_t k = 0; k + 1 < m; ++k) want.push_back({s[k], s[k + 1]});
    want.push_back({s[0], s[m - 1]});
    bool match = false;
    for (size_t r = 0; r < m && !match; ++r) {
      bool ok = true;
      for (size_t k = 0; k < m && ok; ++k) ok = around[(r + k) % m] == want[k];
      match = ok;
    }
    if (!match) return false;
  }
  return true;
}

std::vector<BadFeature> bad_features(const PlabicGraph& g) {
  require_valid(g);
  if (!classify(g).normal) throw Error(ErrorKind::NotNormal, "bad_features needs a normal plabic graph");
  std::vector<BadFeature> out;
  std::vector<Trip> trips = all_trips(g);
  auto lollipop_edge = [&](int e) {
    int u = g.vertex_of(2 * e), w = g.vertex_of(2 * e + 1);
    return g.is_lollipop(u) || g.is_lollipop(w);
  };
  for (const Trip& t : trips) {
    if (t.roundtrip) {
      std::set<int> es;
      for (int d : t.darts) es.insert(edge_of(d));
      out.push_back({BadKind::Roundtrip, {es.begin(), es.end()}, {0}});
    }
  }
  for (const Trip& t : trips) {
    std::set<int> darts(t.darts.begin(), t.darts.end());
    std::set<int> reported;
    for (int d : t.darts) {
      int e = edge_of(d);
      if (darts.count(twin(d)) && !lollipop_edge(e) && reported.insert(e).second)
        out.push_back({BadKind::EssentialSelfIntersection, {e}, {t.source}});
    }
  }
  // first-visit positions of edges along each one-way trip
  std::vector<std::map<int, int>> first(g.b() + 1);
  for (const Trip& t : trips) {
    if (t.roundtrip) continue;
    for (int k = 0; k < static_cast<int>(t.darts.size()); ++k) first[t.source].emplace(edge_of(t.darts[k]), k);
  }
  for (int a = 1; a <= g.b(); ++a) {
    for (int c = a + 1; c <= g.b(); ++c) {
      std::vector<int> shared;
      for (auto& [e, k] : first[a])
        if (first[c].count(e) && !lollipop_edge(e)) shared.push_back(e);
      for (int e1 : shared)
        for (int e2 : shared) {
          if (e1 == e2) continue;
          if (first[a][e1] < first[a][e2] && first[c][e1] < first[c][e2])
            out.push_back({BadKind::BadDoubleCrossing, {e1, e2}, {a, c}});
        }
    }
  }
  return out;
}

}  // namespace plabic
