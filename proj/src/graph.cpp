#include "plabic/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace plabic {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::UndecoratableFixedPoint: return "UndecoratableFixedPoint";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::HasInternalLeaf: return "HasInternalLeaf";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::MalformedWindow: return "MalformedWindow";
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::NotANecklace: return "NotANecklace";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::FrozenVertex: return "FrozenVertex";
    case ErrorKind::NotATriangulation: return "NotATriangulation";
    case ErrorKind::BadWord: return "BadWord";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

const char* to_string(Color c) { return c == Color::Black ? "black" : "white"; }

PlabicGraph::PlabicGraph(int b) : b_(b) {
  for (int i = 1; i <= b; ++i) verts_[-i];
}

Color PlabicGraph::color(int v) const {
  auto it = verts_.find(v);
  if (it == verts_.end() || v < 0)
    throw Error(ErrorKind::InvalidGraph, "no internal vertex " + std::to_string(v));
  return it->second.color;
}

const std::vector<int>& PlabicGraph::rotation(int v) const {
  auto it = verts_.find(v);
  if (it == verts_.end()) throw Error(ErrorKind::InvalidGraph, "no vertex " + std::to_string(v));
  return it->second.rot;
}

int PlabicGraph::vertex_of(int d) const {
  if (d < 0 || d >= static_cast<int>(owner_.size())) return kNone;
  return owner_[d];
}

int PlabicGraph::position(int d) const {
  const auto& r = rotation(vertex_of(d));
  auto it = std::find(r.begin(), r.end(), d);
  return static_cast<int>(it - r.begin());
}

int PlabicGraph::cw_next(int d) const {
  const auto& r = rotation(vertex_of(d));
  int p = position(d);
  return r[(p + 1) % r.size()];
}

int PlabicGraph::cw_prev(int d) const {
  const auto& r = rotation(vertex_of(d));
  int p = position(d);
  return r[(p + r.size() - 1) % r.size()];
}

std::vector<int> PlabicGraph::internal_vertices() const {
  std::vector<int> out;
  for (auto it = verts_.lower_bound(0); it != verts_.end(); ++it) out.push_back(it->first);
  return out;
}

int PlabicGraph::max_vertex_id() const {
  if (verts_.empty() || verts_.rbegin()->first < 0) return -1;
  return verts_.rbegin()->first;
}

bool PlabicGraph::is_lollipop(int v) const {
  if (v < 0 || degree(v) != 1) return false;
  int d = rotation(v)[0];
  return is_boundary(head(d)) && !is_loop(edge_of(d));
}

std::vector<int> PlabicGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int d : rotation(v)) out.push_back(head(d));
  return out;
}

int PlabicGraph::add_vertex(Color c) {
  int id = max_vertex_id() + 1;
  verts_[id].color = c;
  return id;
}

void PlabicGraph::add_vertex_with_id(int id, Color c) {
  if (id < 0) throw Error(ErrorKind::InvalidGraph, "internal vertex ids must be nonnegative");
  if (verts_.count(id)) throw Error(ErrorKind::InvalidGraph, "duplicate vertex id " + std::to_string(id));
  verts_[id].color = c;
}

void PlabicGraph::set_color(int v, Color c) {
  auto it = verts_.find(v);
  if (it == verts_.end() || v < 0) throw Error(ErrorKind::InvalidGraph, "no internal vertex");
  it->second.color = c;
}

int PlabicGraph::new_edge() {
  int e = max_edge_id() + 1;
  edges_.insert(e);
  return e;
}

void PlabicGraph::add_edge_with_id(int e) {
  if (e < 0) throw Error(ErrorKind::InvalidGraph, "edge ids must be nonnegative");
  if (!edges_.insert(e).second) throw Error(ErrorKind::InvalidGraph, "duplicate edge id " + std::to_string(e));
}

void PlabicGraph::index_dart(int d, int v) {
  if (d < 0) return;
  if (d >= static_cast<int>(owner_.size())) owner_.resize(d + 1, kNone);
  owner_[d] = v;
}

void PlabicGraph::set_rotation(int v, std::vector<int> darts) {
  auto it = verts_.find(v);
  if (it == verts_.end()) throw Error(ErrorKind::InvalidGraph, "no vertex " + std::to_string(v));
  for (int d : it->second.rot)
    if (vertex_of(d) == v) owner_[d] = kNone;
  for (int d : darts) index_dart(d, v);
  it->second.rot = std::move(darts);
}

void PlabicGraph::remove_vertex(int v) {
  auto it = verts_.find(v);
  if (it == verts_.end()) return;
  for (int d : it->second.rot)
    if (vertex_of(d) == v) owner_[d] = kNone;
  verts_.erase(it);
}

void PlabicGraph::detach(int d) {
  int v = vertex_of(d);
  if (v == kNone) return;
  auto& r = verts_[v].rot;
  r.erase(std::remove(r.begin(), r.end(), d), r.end());
  owner_[d] = kNone;
}

void PlabicGraph::remove_edge(int e) {
  detach(2 * e);
  detach(2 * e + 1);
  edges_.erase(e);
}

void PlabicGraph::insert_after(int v, int after, int d) {
  auto& r = verts_.at(v).rot;
  if (after < 0) {
    r.insert(r.begin(), d);
  } else {
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it == r.end() ? r.end() : it + 1, d);
  }
  index_dart(d, v);
}

void PlabicGraph::replace_dart(int old_d, int new_d) {
  int v = vertex_of(old_d);
  auto& r = verts_.at(v).rot;
  std::replace(r.begin(), r.end(), old_d, new_d);
  owner_[old_d] = kNone;
  index_dart(new_d, v);
}

bool PlabicGraph::operator==(const PlabicGraph& o) const {
  if (b_ != o.b_ || edges_ != o.edges_ || verts_.size() != o.verts_.size()) return false;
  auto it = verts_.begin();
  auto jt = o.verts_.begin();
  for (; it != verts_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->first >= 0 && it->second.color != jt->second.color) return false;
    if (it->second.rot.size() != jt->second.rot.size()) return false;
    for (size_t k = 0; k < it->second.rot.size(); ++k)
      if (edge_of(it->second.rot[k]) != edge_of(jt->second.rot[k])) return false;
  }
  return true;
}

ValidationReport validate(const PlabicGraph& g) {
  ValidationReport rep;
  auto bad = [&](const std::string& s) { rep.problems.push_back(s); };
  if (g.b() < 1) {
    bad("b must be at least 1");
    return rep;
  }
  std::map<int, int> seen;  // dart -> occurrences
  std::vector<int> verts;
  for (int i = 1; i <= g.b(); ++i) verts.push_back(-i);
  for (int v : g.internal_vertices()) verts.push_back(v);
  for (int v : verts) {
    for (int d : g.rotation(v)) {
      if (!g.has_edge(edge_of(d)))
        bad("vertex " + std::to_string(v) + " lists unknown edge " + std::to_string(edge_of(d)));
      ++seen[d];
    }
  }
  for (int e : g.edges()) {
    int c0 = seen.count(2 * e) ? seen[2 * e] : 0;
    int c1 = seen.count(2 * e + 1) ? seen[2 * e + 1] : 0;
    if (c0 != 1 || c1 != 1)
      bad("edge " + std::to_string(e) + " must appear exactly twice in rotations (twin involution), found " +
          std::to_string(c0 + c1));
  }
  for (int i = 1; i <= g.b(); ++i)
    if (g.degree(-i) != 1)
      bad("boundary vertex " + std::to_string(i) + " has degree " + std::to_string(g.degree(-i)));
  if (!rep.ok()) return rep;

  std::set<int> reached;
  std::deque<int> q;
  for (int i = 1; i <= g.b(); ++i) {
    reached.insert(-i);
    q.push_back(-i);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int d : g.rotation(v)) {
      int w = g.head(d);
      if (reached.insert(w).second) q.push_back(w);
    }
  }
  for (int v : g.internal_vertices())
    if (!reached.count(v)) bad("internal vertex " + std::to_string(v) + " is not connected to the boundary");
  if (!rep.ok()) return rep;

  FaceMap fm = trace_faces(g);
  long V = g.b() + g.num_internal();
  long E = g.num_edges() + g.b();
  long F = static_cast<long>(fm.faces.size());
  if (V - E + F != 2)
    bad("Euler check failed: V - E + F = " + std::to_string(V - E + F) + " (rotation system is not planar in the disk)");
  int outer = 0;
  for (const auto& f : fm.faces) {
    if (f.kind == FaceKind::Outer) {
      ++outer;
      for (const auto& fd : f.darts)
        if (!fd.rim || (fd.dart & 1)) bad("outer face touches the interior");
    }
  }
  if (outer != 1) bad("expected exactly one outer face");
  return rep;
}

void require_valid(const PlabicGraph& g) {
  auto rep = validate(g);
  if (rep.ok()) return;
  std::ostringstream os;
  for (size_t i = 0; i < rep.problems.size(); ++i) os << (i ? "; " : "") << rep.problems[i];
  throw Error(ErrorKind::InvalidGraph, os.str());
}

std::vector<int> component_of(const PlabicGraph& g, int v) {
  std::set<int> seen{v};
  std::deque<int> q{v};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int d : g.rotation(x)) {
      int y = g.head(d);
      if (seen.insert(y).second) q.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

struct Numbering {
  std::map<int, int> vnum;    // old vertex id -> new index (internal only)
  std::vector<int> order;     // internal vertices in discovery order
  std::map<int, int> start;   // internal vertex -> dart to start its rotation at
  std::map<int, int> enm;     // old edge -> new edge
  std::map<int, int> flip;    // old edge -> 0 if old dart 2e becomes new side 0
};

Numbering number(const PlabicGraph& g) {
  Numbering n;
  std::vector<int> queue;
  auto visit = [&](int v, int from) {
    auto& r = g.rotation(v);
    if (r.empty()) return;
    size_t s = 0;
    if (from >= 0) s = std::find(r.begin(), r.end(), from) - r.begin();
    for (size_t k = 0; k < r.size(); ++k) {
      int d = r[(s + k) % r.size()];
      int e = edge_of(d);
      if (!n.enm.count(e)) {
        int id = static_cast<int>(n.enm.size());
        n.enm[e] = id;
        n.flip[e] = d & 1;
      }
      int w = g.head(d);
      if (w >= 0 && !n.vnum.count(w)) {
        n.vnum[w] = static_cast<int>(n.order.size());
        n.order.push_back(w);
        n.start[w] = twin(d);
        queue.push_back(w);
      }
    }
  };
  for (int i = 1; i <= g.b(); ++i) visit(-i, -1);
  for (size_t k = 0; k < queue.size(); ++k) visit(queue[k], n.start[queue[k]]);
  // stray components (invalid graphs) are numbered afterwards in id order
  for (int v : g.internal_vertices()) {
    if (n.vnum.count(v)) continue;
    n.vnum[v] = static_cast<int>(n.order.size());
    n.order.push_back(v);
    n.start[v] = g.rotation(v).empty() ? -1 : g.rotation(v)[0];
    size_t from = queue.size();
    queue.push_back(v);
    for (size_t k = from; k < queue.size(); ++k) visit(queue[k], n.start[queue[k]]);
  }
  return n;
}

}  // namespace

PlabicGraph canonicalize(const PlabicGraph& g) {
  Numbering n = number(g);
  PlabicGraph out(g.b());
  for (int v : n.order) out.add_vertex_with_id(n.vnum[v], g.color(v));
  for (size_t e = 0; e < n.enm.size(); ++e) out.add_edge_with_id(static_cast<int>(e));
  auto map_dart = [&](int d) { return 2 * n.enm[edge_of(d)] + ((d & 1) ^ n.flip[edge_of(d)]); };
  auto rotated = [&](int v, int s) {
    std::vector<int> r = g.rotation(v);
    if (s >= 0 && !r.empty()) std::rotate(r.begin(), std::find(r.begin(), r.end(), s), r.end());
    for (int& d : r) d = map_dart(d);
    return r;
  };
  for (int i = 1; i <= g.b(); ++i) out.set_rotation(-i, rotated(-i, -1));
  for (int v : n.order) out.set_rotation(n.vnum[v], rotated(v, n.start[v]));
  return out;
}

std::string canonical_key(const PlabicGraph& g) {
  PlabicGraph c = canonicalize(g);
  std::string s = std::to_string(c.b()) + "|";
  for (int v = -1; v >= -c.b(); --v) {
    for (int d : c.rotation(v)) s += std::to_string(d) + ",";
    s += ";";
  }
  for (int v : c.internal_vertices()) {
    s += c.color(v) == Color::Black ? 'B' : 'W';
    for (int d : c.rotation(v)) s += std::to_string(d) + ",";
    s += ";";
  }
  return s;
}

bool isomorphic(const PlabicGraph& a, const PlabicGraph& b) { return canonical_key(a) == canonical_key(b); }

CanonicalMap canonical_map(const PlabicGraph& g) {
  Numbering n = number(g);
  CanonicalMap m;
  m.vertex = n.vnum;
  for (int i = 1; i <= g.b(); ++i) m.vertex[-i] = -i;
  for (auto& [e, ne] : n.enm) {
    m.dart[2 * e] = 2 * ne + n.flip[e];
    m.dart[2 * e + 1] = 2 * ne + (1 ^ n.flip[e]);
  }
  return m;
}

}  // namespace plabic
