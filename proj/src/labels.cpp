#include "plabic/labels.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_set>

#include "plabic/bridges.hpp"
#include "plabic/moves.hpp"
#include "plabic/normalize.hpp"
#include "plabic/trips.hpp"

namespace plabic {

const char* to_string(LabelMode m) { return m == LabelMode::Source ? "source" : "target"; }

namespace {

[[noreturn]] void not_reduced(const std::string& why) { throw Error(ErrorKind::NotReduced, why); }

// side[f] = 1 left of the trip, 2 right of it
std::map<int, int> sides_of_trip(const PlabicGraph& g, const FaceMap& fm, const Trip& t) {
  std::map<int, int> side;
  std::set<int> on_trip;
  for (int d : t.darts) on_trip.insert(edge_of(d));
  auto mark = [&](int f, int s) {
    auto [it, fresh] = side.emplace(f, s);
    if (!fresh && it->second != s) not_reduced("face " + std::to_string(f) + " lies on both sides of trip " +
                                               std::to_string(t.source));
    return fresh;
  };
  std::deque<int> q;
  for (int d : t.darts) {
    int f1 = fm.face_of_dart.at(d), f2 = fm.face_of_dart.at(twin(d));
    if (f1 == f2) continue;
    if (mark(f1, 1)) q.push_back(f1);
    if (mark(f2, 2)) q.push_back(f2);
  }
  std::map<int, std::vector<int>> adj;
  for (int e : g.edges()) {
    if (on_trip.count(e)) continue;
    int f1 = fm.face_of_dart.at(2 * e), f2 = fm.face_of_dart.at(2 * e + 1);
    if (f1 == f2) continue;
    adj[f1].push_back(f2);
    adj[f2].push_back(f1);
  }
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int h : adj[f])
      if (mark(h, side[f])) q.push_back(h);
  }
  for (const Face& f : fm.faces)
    if (f.kind != FaceKind::Outer && !side.count(f.id))
      not_reduced("face " + std::to_string(f.id) + " is not separated by trip " + std::to_string(t.source));
  return side;
}

}  // namespace

FaceLabeling face_labels_unchecked(const PlabicGraph& g, LabelMode mode) {
  FaceMap fm = face_map(g);
  std::vector<int> pi = trip_permutation(g);
  FaceLabeling out;
  out.mode = mode;
  for (const Face& f : fm.faces)
    if (f.kind != FaceKind::Outer) out.labels[f.id];
  bool has_fixed = false;
  for (int i = 1; i <= g.b(); ++i) has_fixed |= pi[i - 1] == i;
  DecoratedPermutation dp;
  if (has_fixed) dp = decorated_trip_permutation(g);
  for (int i = 1; i <= g.b(); ++i) {
    int label = mode == LabelMode::Source ? i : pi[i - 1];
    if (pi[i - 1] == i) {
      if (dp.decoration(i) == Decoration::Over)
        for (auto& [f, l] : out.labels) l.push_back(label);
      continue;
    }
    auto side = sides_of_trip(g, fm, trip_from(g, i));
    for (auto& [f, l] : out.labels)
      if (side.at(f) == 1) l.push_back(label);
  }
  for (auto& [f, l] : out.labels) std::sort(l.begin(), l.end());
  return out;
}

FaceLabeling face_labels(const PlabicGraph& g, LabelMode mode) {
  auto r = is_reduced(g);
  if (!r.reduced) not_reduced("face labels need a reduced graph (" + r.witness.kind + ")");
  return face_labels_unchecked(g, mode);
}

Collection label_collection(const FaceLabeling& l) {
  Collection c;
  for (auto& [f, s] : l.labels) c.push_back(s);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

bool strongly_equivalent(const PlabicGraph& g1, const PlabicGraph& g2) {
  return label_collection(face_labels(g1, LabelMode::Target)) == label_collection(face_labels(g2, LabelMode::Target));
}

// ---------------------------------------------------------------------------

PlabicGraph contracted_form(const PlabicGraph& input) {
  PlabicGraph g = input;
  for (bool again = true; again;) {
    again = false;
    for (int e : g.edges()) {
      int u = g.vertex_of(2 * e), w = g.vertex_of(2 * e + 1);
      if (u < 0 || w < 0 || g.color(u) != g.color(w)) continue;
      if (u == w) not_reduced("loop at vertex " + std::to_string(u));
      rewrite::contract(g, 2 * e);
      again = true;
      break;
    }
    if (again) continue;
    for (int v : g.internal_vertices()) {
      if (g.degree(v) != 2) continue;
      const auto& r = g.rotation(v);
      if (edge_of(r[0]) == edge_of(r[1])) continue;
      if (g.head(r[0]) < 0 && g.head(r[1]) < 0) continue;
      rewrite::remove_bivalent(g, v);
      again = true;
      break;
    }
  }
  return g;
}

namespace {

struct Corner {
  std::vector<int> darts, verts;
};

bool corner_square(const PlabicGraph& g, const FaceMap& fm, int d, Corner* c) {
  const Face& f = fm.faces[fm.face_of_dart.at(d)];
  if (f.kind != FaceKind::Internal || f.darts.size() != 4) return false;
  for (const auto& fd : f.darts) {
    c->darts.push_back(fd.dart);
    c->verts.push_back(g.vertex_of(fd.dart));
  }
  for (int k = 0; k < 4; ++k) {
    int v = c->verts[k];
    if (v < 0 || g.degree(v) < 3) return false;
    for (int l = 0; l < k; ++l)
      if (c->verts[l] == v) return false;
    if (g.color(v) == g.color(c->verts[(k + 1) % 4])) return false;
  }
  return true;
}

}  // namespace

std::vector<int> generalized_square_sites(const PlabicGraph& g) {
  FaceMap fm = trace_faces(g);
  std::vector<int> out;
  for (const Face& f : fm.faces) {
    if (f.kind != FaceKind::Internal || f.darts.size() != 4) continue;
    Corner c;
    if (corner_square(g, fm, f.darts[0].dart, &c)) out.push_back(*std::min_element(c.darts.begin(), c.darts.end()));
  }
  return out;
}

PlabicGraph generalized_square_move(const PlabicGraph& g, int dart) {
  FaceMap fm = trace_faces(g);
  Corner c;
  if (!fm.face_of_dart.count(dart) || !corner_square(g, fm, dart, &c))
    throw Error(ErrorKind::IllegalMove, "dart " + std::to_string(dart) + " is not on a square face");
  PlabicGraph h = g;
  for (int k = 0; k < 4; ++k) {
    int v = c.verts[k];
    int n = g.degree(v);
    if (n > 3) rewrite::split(h, v, (g.position(c.darts[k]) + 1) % n, n - 2);
  }
  for (int v : c.verts) h.set_color(v, opposite(g.color(v)));
  return contracted_form(h);
}

std::set<Collection> enumerate_ws(const DecoratedPermutation& p, const EnumerateOptions& opt) {
  PlabicGraph start = contracted_form(bridge_graph(p));
  std::set<Collection> found;
  std::unordered_set<std::string> seen{canonical_key(start)};
  std::vector<PlabicGraph> frontier{start};
  const int threads = std::max(1, opt.threads);

  struct Out {
    Collection labels;
    std::vector<std::pair<std::string, PlabicGraph>> next;
  };
  auto expand = [](const PlabicGraph& g, Out* o) {
    o->labels = label_collection(face_labels_unchecked(g, LabelMode::Target));
    for (int d : generalized_square_sites(g)) {
      PlabicGraph h = generalized_square_move(g, d);
      o->next.emplace_back(canonical_key(h), std::move(h));
    }
  };

  while (!frontier.empty()) {
    std::vector<Out> outs(frontier.size());
    if (threads == 1 || frontier.size() < 8) {
      for (size_t k = 0; k < frontier.size(); ++k) expand(frontier[k], &outs[k]);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errs(threads);
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          try {
            for (size_t k = t; k < frontier.size(); k += threads) expand(frontier[k], &outs[k]);
          } catch (...) {
            errs[t] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    }
    std::vector<PlabicGraph> next;
    for (auto& o : outs) {
      found.insert(std::move(o.labels));
      for (auto& [k, h] : o.next)
        if (seen.insert(k).second) next.push_back(std::move(h));
    }
    if (static_cast<long>(seen.size()) > opt.limit)
      throw Error(ErrorKind::TooLarge, "more than " + std::to_string(opt.limit) + " graphs explored");
    frontier = std::move(next);
  }
  return found;
}

}  // namespace plabic
