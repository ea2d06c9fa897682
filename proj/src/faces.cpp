#include <algorithm>
#include <unordered_map>

#include "plabic/graph.hpp"

namespace plabic {

const char* to_string(FaceKind k) {
  switch (k) {
    case FaceKind::Internal: return "internal";
    case FaceKind::Boundary: return "boundary";
    case FaceKind::Outer: return "outer";
  }
  return "?";
}

namespace {

// Augmented darts: graph dart d >= 0 is itself, rim dart r is encoded as -1 - r.
inline long rim_code(int r) { return -1L - r; }
inline bool is_rim(long x) { return x < 0; }
inline int rim_id(long x) { return static_cast<int>(-1 - x); }
inline long aug_twin(long x) { return is_rim(x) ? rim_code(rim_id(x) ^ 1) : (x ^ 1); }

}  // namespace

FaceMap trace_faces(const PlabicGraph& g) {
  const int b = g.b();
  // augmented rotation of every vertex
  std::map<int, std::vector<long>> rot;
  for (int i = 1; i <= b; ++i) {
    std::vector<long> r;
    r.push_back(rim_code(2 * (i - 1)));
    for (int d : g.rotation(-i)) r.push_back(d);
    int prev = (i == 1 ? b : i - 1);
    r.push_back(rim_code(2 * (prev - 1) + 1));
    rot[-i] = std::move(r);
  }
  for (int v : g.internal_vertices()) {
    const auto& gr = g.rotation(v);
    rot[v] = std::vector<long>(gr.begin(), gr.end());
  }
  std::unordered_map<long, std::pair<int, int>> where;  // dart -> (vertex, index)
  for (auto& [v, r] : rot)
    for (int k = 0; k < static_cast<int>(r.size()); ++k) where[r[k]] = {v, k};

  std::vector<long> order;
  for (int e : g.edges()) {
    order.push_back(2L * e);
    order.push_back(2L * e + 1);
  }
  for (int r = 0; r < 2 * b; ++r) order.push_back(rim_code(r));

  FaceMap fm;
  std::unordered_map<long, bool> done;
  for (long start : order) {
    if (done[start] || !where.count(start)) continue;
    Face f;
    f.id = static_cast<int>(fm.faces.size());
    long x = start;
    bool has_out = false, has_in = false;
    int guard = 0;
    do {
      done[x] = true;
      if (is_rim(x)) {
        f.darts.push_back({rim_id(x), true});
        (rim_id(x) & 1 ? has_in : has_out) = true;
      } else {
        f.darts.push_back({static_cast<int>(x), false});
        fm.face_of_dart[static_cast<int>(x)] = f.id;
      }
      long t = aug_twin(x);
      auto it = where.find(t);
      if (it == where.end()) break;  // dangling half-edge in an invalid graph
      const auto& r = rot[it->second.first];
      x = r[(it->second.second + 1) % r.size()];
    } while (x != start && ++guard < 1000000);
    if (has_out) {
      f.kind = FaceKind::Outer;
      fm.outer = f.id;
    } else if (has_in) {
      f.kind = FaceKind::Boundary;
    }
    fm.faces.push_back(std::move(f));
  }
  return fm;
}

FaceMap face_map(const PlabicGraph& g) {
  require_valid(g);
  return trace_faces(g);
}

std::vector<Face> faces(const PlabicGraph& g) { return face_map(g).faces; }

int count_non_outer_faces(const PlabicGraph& g) { return face_map(g).non_outer_count(); }

}  // namespace plabic
