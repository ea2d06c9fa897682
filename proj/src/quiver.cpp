#include "plabic/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "plabic/io.hpp"
#include "plabic/labels.hpp"
#include "plabic/normalize.hpp"

namespace plabic {

int Quiver::index_of(const std::string& key) const {
  auto it = std::find(keys.begin(), keys.end(), key);
  return it == keys.end() ? -1 : static_cast<int>(it - keys.begin());
}

namespace {

void drop_frozen_pairs(Quiver& q) {
  for (int u = 0; u < q.size(); ++u)
    for (int v = 0; v < q.size(); ++v)
      if (q.frozen[u] && q.frozen[v]) q.m[u][v] = 0;
}

}  // namespace

Quiver quiver_of(const PlabicGraph& g) {
  FaceMap fm = face_map(g);
  std::map<int, std::string> key;
  if (is_reduced(g).reduced) {
    for (auto& [f, s] : face_labels_unchecked(g, LabelMode::Target).labels) key[f] = format_subset(s, g.b());
  }
  Quiver q;
  std::map<int, int> idx;
  for (const Face& f : fm.faces) {
    if (f.kind == FaceKind::Outer) continue;
    idx[f.id] = q.size();
    q.keys.push_back(key.count(f.id) ? key[f.id] : "f" + std::to_string(f.id));
    q.frozen.push_back(f.kind == FaceKind::Boundary);
    q.face.push_back(f.id);
  }
  q.m.assign(q.size(), std::vector<int>(q.size(), 0));
  for (int e : g.edges()) {
    int u = g.vertex_of(2 * e), w = g.vertex_of(2 * e + 1);
    if (u < 0 || w < 0 || g.color(u) == g.color(w)) continue;
    int d = g.color(u) == Color::Black ? 2 * e : 2 * e + 1;  // based at the black end
    int from = fm.face_of_dart.at(d), to = fm.face_of_dart.at(twin(d));
    if (from == to) continue;
    if (fm.faces[from].kind != FaceKind::Internal && fm.faces[to].kind != FaceKind::Internal) continue;
    // crossing from the left of d to its right keeps the white end on our left
    q.m[idx[from]][idx[to]] += 1;
    q.m[idx[to]][idx[from]] -= 1;
  }
  drop_frozen_pairs(q);
  return q;
}

Quiver rekey(const Quiver& q, const std::map<int, std::string>& face_key) {
  Quiver r = q;
  for (int k = 0; k < r.size(); ++k) {
    auto it = face_key.find(r.face[k]);
    if (it != face_key.end()) r.keys[k] = it->second;
  }
  return r;
}

Quiver mutate(const Quiver& q, int k) {
  if (k < 0 || k >= q.size()) throw Error(ErrorKind::BadLabel, "no quiver vertex " + std::to_string(k));
  if (q.frozen[k]) throw Error(ErrorKind::FrozenVertex, "vertex " + q.keys[k] + " is frozen");
  Quiver r = q;
  const int n = q.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.m[i][j] = -q.m[i][j];
      } else {
        int a = q.m[i][k], b = q.m[k][j];
        int s = (a > 0) - (a < 0);
        r.m[i][j] = q.m[i][j] + s * std::max(0, a * b);
      }
    }
  drop_frozen_pairs(r);
  return r;
}

Quiver mutate(const Quiver& q, const std::string& key) {
  int k = q.index_of(key);
  if (k < 0) throw Error(ErrorKind::BadLabel, "no quiver vertex " + key);
  return mutate(q, k);
}

bool same_quiver(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> to(a.size());
  for (int k = 0; k < a.size(); ++k) {
    to[k] = b.index_of(a.keys[k]);
    if (to[k] < 0 || a.frozen[k] != b.frozen[to[k]]) return false;
  }
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < a.size(); ++v)
      if (a.m[u][v] != b.m[to[u]][to[v]]) return false;
  return true;
}

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream o;
  o << "digraph Q {\n";
  for (int k = 0; k < q.size(); ++k)
    o << "  q" << k << " [label=\"" << q.keys[k] << "\"" << (q.frozen[k] ? ", shape=box" : "") << "];\n";
  for (int u = 0; u < q.size(); ++u)
    for (int v = 0; v < q.size(); ++v)
      for (int t = 0; t < q.m[u][v]; ++t) o << "  q" << u << " -> q" << v << ";\n";
  o << "}\n";
  return o.str();
}

// ---------------------------------------------------------------------------
// triangulations

namespace {

[[noreturn]] void not_triangulation(const std::string& why) { throw Error(ErrorKind::NotATriangulation, why); }

std::pair<int, int> seg(int p, int q) { return {std::min(p, q), std::max(p, q)}; }

bool is_side(std::pair<int, int> s, int m) { return s.second - s.first == 1 || (s.first == 1 && s.second == m); }

std::string seg_key(std::pair<int, int> s) { return std::to_string(s.first) + "-" + std::to_string(s.second); }

}  // namespace

void check_triangulation(int m, const std::vector<Triangle>& t) {
  if (m < 3) not_triangulation("a polygon needs at least 3 vertices");
  if (static_cast<int>(t.size()) != m - 2) not_triangulation("expected " + std::to_string(m - 2) + " triangles");
  std::map<std::pair<int, int>, int> count;
  for (const auto& tr : t) {
    for (int x : tr)
      if (x < 1 || x > m) not_triangulation("vertex " + std::to_string(x) + " out of range");
    if (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2]) not_triangulation("degenerate triangle");
    for (int k = 0; k < 3; ++k) ++count[seg(tr[k], tr[(k + 1) % 3])];
  }
  std::vector<std::pair<int, int>> diags;
  for (int p = 1; p <= m; ++p)
    if (count[seg(p, p % m + 1)] != 1) not_triangulation("side " + seg_key(seg(p, p % m + 1)) + " not in exactly one triangle");
  for (auto& [s, c] : count) {
    if (is_side(s, m)) continue;
    if (c != 2) not_triangulation("diagonal " + seg_key(s) + " not in exactly two triangles");
    diags.push_back(s);
  }
  if (static_cast<int>(diags.size()) != m - 3) not_triangulation("wrong number of diagonals");
  for (auto [a, b] : diags)
    for (auto [c, d] : diags)
      if (a < c && c < b && b < d) not_triangulation("diagonals " + seg_key({a, b}) + " and " + seg_key({c, d}) + " cross");
}

PlabicGraph from_triangulation(int m, const std::vector<Triangle>& t) {
  check_triangulation(m, t);
  Drawing d(m);
  const double pi = 3.14159265358979323846;
  auto at = [&](int p, double r) {
    double th = pi / 2 - 2 * pi * (p - 1) / m;
    return std::pair<double, double>{r * std::cos(th), r * std::sin(th)};
  };
  std::vector<int> white(m + 1);
  for (int p = 1; p <= m; ++p) {
    auto [x, y] = at(p, 1.0);
    white[p] = d.white(x, y);
  }
  for (const auto& tr : t) {
    double cx = 0, cy = 0;
    for (int p : tr) {
      auto [x, y] = at(p, 1.0);
      cx += x / 3;
      cy += y / 3;
    }
    int bl = d.black(cx, cy);
    for (int p : tr) d.edge(bl, white[p]);
  }
  for (int p = 1; p <= m; ++p) {
    auto [x, y] = at(p, 2.0);
    d.edge(d.boundary(p, x, y), white[p]);
  }
  return d.build();
}

Quiver triangulation_quiver(int m, const std::vector<Triangle>& t) {
  check_triangulation(m, t);
  std::set<std::pair<int, int>> segs;
  for (const auto& tr : t)
    for (int k = 0; k < 3; ++k) segs.insert(seg(tr[k], tr[(k + 1) % 3]));
  Quiver q;
  std::map<std::pair<int, int>, int> idx;
  for (auto s : segs) {
    idx[s] = q.size();
    q.keys.push_back(seg_key(s));
    q.frozen.push_back(is_side(s, m));
    q.face.push_back(-1);
  }
  q.m.assign(q.size(), std::vector<int>(q.size(), 0));
  for (auto tr : t) {
    std::sort(tr.begin(), tr.end());
    // vertices p < q < r sit clockwise; arrows pq -> qr -> pr -> pq follow the sides clockwise
    int a = idx[seg(tr[0], tr[1])], b = idx[seg(tr[1], tr[2])], c = idx[seg(tr[0], tr[2])];
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
      q.m[u][v] += 1;
      q.m[v][u] -= 1;
    }
  }
  drop_frozen_pairs(q);
  return q;
}

std::map<int, std::string> triangulation_face_keys(const PlabicGraph& g, int m) {
  FaceMap fm = face_map(g);
  std::map<int, std::string> out;
  for (const Face& f : fm.faces) {
    if (f.kind == FaceKind::Outer) continue;
    std::set<int> whites;
    for (const auto& fd : f.darts) {
      if (fd.rim) continue;
      int v = g.vertex_of(fd.dart);
      if (v >= 0 && v < m) whites.insert(v + 1);
    }
    if (whites.size() == 2) out[f.id] = seg_key(seg(*whites.begin(), *whites.rbegin()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// wiring diagrams

std::vector<Crossing> parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Crossing> out;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw Error(ErrorKind::BadWord, "bad letter '" + tok + "'");
    try {
      size_t used = 0;
      int i = std::stoi(tok.substr(1), &used);
      if (used + 1 != tok.size()) throw std::invalid_argument(tok);
      out.push_back({i, tok[0] == 'S'});
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::BadWord, "bad letter '" + tok + "'");
    }
  }
  return out;
}

PlabicGraph from_wiring(int n, const std::vector<Crossing>& word) {
  if (n < 1) throw Error(ErrorKind::BadWord, "need at least one wire");
  for (const auto& c : word)
    if (c.i < 1 || c.i >= n) throw Error(ErrorKind::BadWord, "s" + std::to_string(c.i) + " needs 1 <= i < n");
  const int len = static_cast<int>(word.size());
  Drawing d(2 * n);
  std::vector<std::vector<int>> level(n + 1);
  for (int j = 1; j <= n; ++j) level[j].push_back(d.boundary(j, 0, j));
  for (int k = 0; k < len; ++k) {
    const auto& c = word[k];
    Color top = c.thick ? Color::Black : Color::White;
    int lo = d.vertex(opposite(top), k + 1, c.i);
    int hi = d.vertex(top, k + 1, c.i + 1);
    d.edge(lo, hi);
    level[c.i].push_back(lo);
    level[c.i + 1].push_back(hi);
  }
  for (int j = 1; j <= n; ++j) {
    level[j].push_back(d.boundary(2 * n + 1 - j, len + 1, j));
    for (size_t k = 0; k + 1 < level[j].size(); ++k) d.edge(level[j][k], level[j][k + 1]);
  }
  return d.build();
}

PlabicGraph from_wiring(int n, const std::vector<int>& word) {
  std::vector<Crossing> w;
  for (int i : word) w.push_back({i, true});
  return from_wiring(n, w);
}

}  // namespace plabic
