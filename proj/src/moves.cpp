#include "plabic/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <unordered_map>

#include "plabic/normalize.hpp"
#include "plabic/trips.hpp"

namespace plabic {

namespace {

const char* const kKindNames[] = {"SquareM1",  "InsertBivalentM2", "RemoveBivalentM2", "ContractM3",
                                  "SplitM3",   "FlipM4",           "UrbanRenewal",     "NormalFlip"};

[[noreturn]] void illegal(const std::string& why) { throw Error(ErrorKind::IllegalMove, why); }

}  // namespace

const char* to_string(MoveKind k) { return kKindNames[static_cast<int>(k)]; }

MoveKind move_kind_from_string(const std::string& s) {
  for (int k = 0; k < 8; ++k)
    if (s == kKindNames[k]) return static_cast<MoveKind>(k);
  throw Error(ErrorKind::ParseError, "unknown move kind '" + s + "'");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

bool MoveSpec::operator==(const MoveSpec& o) const {
  return kind == o.kind && dart == o.dart && vertex == o.vertex && color == o.color && arc_start == o.arc_start &&
         arc_len == o.arc_len;
}

nlohmann::json to_json(const MoveSpec& m) {
  nlohmann::json j;
  j["kind"] = to_string(m.kind);
  switch (m.kind) {
    case MoveKind::SquareM1:
      j["dart"] = m.dart;
      j["square_condition_fails"] = m.square_condition_fails;
      break;
    case MoveKind::UrbanRenewal:
    case MoveKind::ContractM3:
    case MoveKind::FlipM4: j["dart"] = m.dart; break;
    case MoveKind::InsertBivalentM2:
      j["dart"] = m.dart;
      j["color"] = to_string(m.color);
      break;
    case MoveKind::RemoveBivalentM2:
    case MoveKind::NormalFlip: j["vertex"] = m.vertex; break;
    case MoveKind::SplitM3:
      j["vertex"] = m.vertex;
      j["arc_start"] = m.arc_start;
      j["arc_len"] = m.arc_len;
      break;
  }
  return j;
}

MoveSpec move_from_json(const nlohmann::json& j) {
  try {
    MoveSpec m;
    m.kind = move_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("dart")) m.dart = j["dart"].get<int>();
    if (j.contains("vertex")) m.vertex = j["vertex"].get<int>();
    if (j.contains("color")) {
      std::string c = j["color"].get<std::string>();
      if (c != "black" && c != "white") throw Error(ErrorKind::ParseError, "bad color '" + c + "'");
      m.color = c == "black" ? Color::Black : Color::White;
    }
    if (j.contains("arc_start")) m.arc_start = j["arc_start"].get<int>();
    if (j.contains("arc_len")) m.arc_len = j["arc_len"].get<int>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("move spec: ") + e.what());
  }
}

nlohmann::json certificate_to_json(const std::vector<MoveSpec>& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& m : c) j.push_back(to_json(m));
  return j;
}

std::vector<MoveSpec> certificate_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "certificate must be a JSON array");
  std::vector<MoveSpec> out;
  for (const auto& x : j) out.push_back(move_from_json(x));
  return out;
}

// ---------------------------------------------------------------------------
// raw rewriting

namespace rewrite {

int insert_bivalent(PlabicGraph& g, int d, Color c) {
  int v = g.add_vertex(c);
  int e2 = g.new_edge();
  int far = twin(d);
  g.replace_dart(far, 2 * e2 + 1);
  g.set_rotation(v, {far, 2 * e2});
  return v;
}

void remove_bivalent(PlabicGraph& g, int v) {
  const auto r = g.rotation(v);
  int x = r[0], y = r[1];
  g.replace_dart(twin(y), x);
  g.remove_edge(edge_of(y));
  g.remove_vertex(v);
}

void contract(PlabicGraph& g, int d) {
  int u = g.vertex_of(d), w = g.head(d);
  auto ru = g.rotation(u), rw = g.rotation(w);
  std::rotate(ru.begin(), std::find(ru.begin(), ru.end(), d), ru.end());
  std::rotate(rw.begin(), std::find(rw.begin(), rw.end(), twin(d)), rw.end());
  std::vector<int> merged(ru.begin() + 1, ru.end());
  merged.insert(merged.end(), rw.begin() + 1, rw.end());
  g.remove_edge(edge_of(d));
  g.remove_vertex(w);
  g.set_rotation(u, merged);
}

int split(PlabicGraph& g, int v, int start, int len) {
  const auto r = g.rotation(v);
  const int n = static_cast<int>(r.size());
  std::vector<int> arc, rest;
  for (int k = 0; k < n; ++k) (k < len ? arc : rest).push_back(r[(start + k) % n]);
  int w = g.add_vertex(g.color(v));
  int e = g.new_edge();
  std::vector<int> rv{2 * e};
  rv.insert(rv.end(), rest.begin(), rest.end());
  std::vector<int> rw{2 * e + 1};
  rw.insert(rw.end(), arc.begin(), arc.end());
  g.set_rotation(w, rw);
  g.set_rotation(v, rv);
  return w;
}

}  // namespace rewrite

// ---------------------------------------------------------------------------
// site recognition

namespace {

struct Square {
  std::vector<int> darts;  // face walk, darts[k] leaves verts[k]
  std::vector<int> verts;
};

// The four-dart internal face through d with four distinct internal vertices
// of alternating colors, if there is one.
std::optional<Square> square_at(const PlabicGraph& g, const FaceMap& fm, int d) {
  auto it = fm.face_of_dart.find(d);
  if (it == fm.face_of_dart.end()) return std::nullopt;
  const Face& f = fm.faces[it->second];
  if (f.kind != FaceKind::Internal || f.darts.size() != 4) return std::nullopt;
  Square s;
  for (const auto& fd : f.darts) {
    s.darts.push_back(fd.dart);
    s.verts.push_back(g.vertex_of(fd.dart));
  }
  for (int k = 0; k < 4; ++k) {
    if (s.verts[k] < 0) return std::nullopt;
    for (int l = 0; l < k; ++l)
      if (s.verts[k] == s.verts[l]) return std::nullopt;
    if (g.color(s.verts[k]) == g.color(s.verts[(k + 1) % 4])) return std::nullopt;
  }
  return s;
}

bool square_m1_ok(const PlabicGraph& g, const Square& s) {
  for (int v : s.verts)
    if (g.degree(v) != 3) return false;
  return true;
}

bool square_condition_fails(const FaceMap& fm, const Square& s) {
  std::vector<int> across;
  for (int d : s.darts) across.push_back(fm.face_of_dart.at(twin(d)));
  for (int k = 0; k < 4; ++k)
    if (across[k] == across[(k + 1) % 4]) return true;
  return false;
}

// the single dart at white square vertex k that leaves the square
int outside_dart(const PlabicGraph& g, const Square& s, int k) {
  int in = twin(s.darts[(k + 3) % 4]);
  for (int d : g.rotation(s.verts[k]))
    if (d != in && d != s.darts[k]) return d;
  return -1;
}

bool urban_ok(const PlabicGraph& g, const Square& s) {
  std::vector<int> outs;
  for (int k = 0; k < 4; ++k) {
    int v = s.verts[k];
    if (g.color(v) != Color::White) continue;
    if (g.degree(v) != 3) return false;
    int o = outside_dart(g, s, k);
    int n = g.head(o);
    if (n < 0 || n == v || g.color(n) != Color::Black) return false;
    if (std::find(s.verts.begin(), s.verts.end(), n) != s.verts.end()) return false;
    outs.push_back(n);
  }
  return outs.size() == 2 && outs[0] != outs[1];
}

bool flip_m4_ok(const PlabicGraph& g, int d) {
  int u = g.vertex_of(d), w = g.head(d);
  if (u < 0 || w < 0 || u == w) return false;
  if (g.color(u) != g.color(w) || g.degree(u) != 3 || g.degree(w) != 3) return false;
  for (int x : g.rotation(u))
    if (x != d && (g.head(x) == w || g.head(x) == u)) return false;
  for (int x : g.rotation(w))
    if (x != twin(d) && (g.head(x) == u || g.head(x) == w)) return false;
  return true;
}

bool normal_flip_ok(const PlabicGraph& g, int m) {
  if (!g.has_vertex(m) || m < 0 || g.color(m) != Color::Black || g.degree(m) != 2) return false;
  const auto& r = g.rotation(m);
  int w1 = g.head(r[0]), w2 = g.head(r[1]);
  if (w1 < 0 || w2 < 0 || w1 == w2) return false;
  for (int w : {w1, w2}) {
    if (g.color(w) != Color::White || g.degree(w) != 3) return false;
    for (int x : g.rotation(w)) {
      if (g.head(x) == m) continue;
      int h = g.head(x);
      if (h == w1 || h == w2 || h == m) return false;
    }
  }
  // each white meets m exactly once
  for (int w : {w1, w2}) {
    int c = 0;
    for (int x : g.rotation(w)) c += g.head(x) == m;
    if (c != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<MoveSpec> legal_moves(const PlabicGraph& g) { return legal_moves(g, {}); }

std::vector<MoveSpec> legal_moves(const PlabicGraph& g, const std::set<MoveKind>& kinds) {
  require_valid(g);
  auto want = [&](MoveKind k) { return kinds.empty() || kinds.count(k) > 0; };
  std::vector<MoveSpec> out;
  FaceMap fm = trace_faces(g);

  if (want(MoveKind::SquareM1) || want(MoveKind::UrbanRenewal)) {
    for (const Face& f : fm.faces) {
      if (f.kind != FaceKind::Internal || f.darts.size() != 4) continue;
      int d0 = f.darts[0].dart;
      for (const auto& fd : f.darts) d0 = std::min(d0, fd.dart);
      auto s = square_at(g, fm, d0);
      if (!s) continue;
      if (want(MoveKind::SquareM1) && square_m1_ok(g, *s)) {
        MoveSpec m;
        m.kind = MoveKind::SquareM1;
        m.dart = d0;
        m.square_condition_fails = square_condition_fails(fm, *s);
        out.push_back(m);
      }
      if (want(MoveKind::UrbanRenewal) && urban_ok(g, *s)) {
        MoveSpec m;
        m.kind = MoveKind::UrbanRenewal;
        m.dart = d0;
        out.push_back(m);
      }
    }
  }
  if (want(MoveKind::InsertBivalentM2))
    for (int e : g.edges())
      for (Color c : {Color::Black, Color::White}) {
        MoveSpec m;
        m.kind = MoveKind::InsertBivalentM2;
        m.dart = 2 * e;
        m.color = c;
        out.push_back(m);
      }
  for (int v : g.internal_vertices()) {
    const auto& r = g.rotation(v);
    const int n = static_cast<int>(r.size());
    if (want(MoveKind::RemoveBivalentM2) && n == 2 && edge_of(r[0]) != edge_of(r[1])) {
      MoveSpec m;
      m.kind = MoveKind::RemoveBivalentM2;
      m.vertex = v;
      out.push_back(m);
    }
    if (want(MoveKind::SplitM3))
      for (int s = 1; s < n; ++s)
        for (int len = 1; s + len <= n; ++len) {
          MoveSpec m;
          m.kind = MoveKind::SplitM3;
          m.vertex = v;
          m.arc_start = s;
          m.arc_len = len;
          out.push_back(m);
        }
    if (want(MoveKind::NormalFlip) && normal_flip_ok(g, v)) {
      MoveSpec m;
      m.kind = MoveKind::NormalFlip;
      m.vertex = v;
      out.push_back(m);
    }
  }
  for (int e : g.edges()) {
    int u = g.vertex_of(2 * e), w = g.vertex_of(2 * e + 1);
    if (u < 0 || w < 0 || u == w || g.color(u) != g.color(w)) continue;
    if (want(MoveKind::ContractM3)) {
      MoveSpec m;
      m.kind = MoveKind::ContractM3;
      m.dart = 2 * e;
      out.push_back(m);
    }
    if (want(MoveKind::FlipM4) && flip_m4_ok(g, 2 * e)) {
      MoveSpec m;
      m.kind = MoveKind::FlipM4;
      m.dart = 2 * e;
      out.push_back(m);
    }
  }
  return out;
}

PlabicGraph apply_move(const PlabicGraph& g, const MoveSpec& m) { return apply_move(g, m, nullptr); }

PlabicGraph apply_move(const PlabicGraph& g, const MoveSpec& m, MoveSpec* inverse) {
  require_valid(g);
  PlabicGraph h = g;
  MoveSpec inv;
  auto has_dart = [&](int d) { return d >= 0 && g.has_edge(edge_of(d)); };
  auto internal = [&](int v) { return v >= 0 && g.has_vertex(v); };

  switch (m.kind) {
    case MoveKind::SquareM1:
    case MoveKind::UrbanRenewal: {
      if (!has_dart(m.dart)) illegal("no dart " + std::to_string(m.dart));
      FaceMap fm = trace_faces(g);
      auto s = square_at(g, fm, m.dart);
      if (!s) illegal("dart " + std::to_string(m.dart) + " is not on an alternating square face");
      if (m.kind == MoveKind::SquareM1) {
        if (!square_m1_ok(g, *s)) illegal("square move needs four trivalent vertices");
        for (int v : s->verts) h.set_color(v, opposite(g.color(v)));
      } else {
        if (!urban_ok(g, *s)) illegal("urban renewal needs trivalent whites with distinct outside black neighbours");
        for (int k = 0; k < 4; ++k) {
          int v = s->verts[k];
          if (g.color(v) == Color::Black) {
            int n = g.degree(v);
            int start = (g.position(s->darts[k]) + 1) % n;
            rewrite::split(h, v, start, n - 2);
            h.set_color(v, Color::White);
          }
        }
        for (int k = 0; k < 4; ++k) {
          int v = s->verts[k];
          if (g.color(v) == Color::White) {
            int o = outside_dart(g, *s, k);
            h.set_color(v, Color::Black);
            rewrite::contract(h, o);
          }
        }
      }
      inv = m;
      inv.square_condition_fails = false;
      break;
    }
    case MoveKind::InsertBivalentM2: {
      if (!has_dart(m.dart)) illegal("no dart " + std::to_string(m.dart));
      int v = rewrite::insert_bivalent(h, m.dart, m.color);
      inv.kind = MoveKind::RemoveBivalentM2;
      inv.vertex = v;
      break;
    }
    case MoveKind::RemoveBivalentM2: {
      if (!internal(m.vertex) || g.degree(m.vertex) != 2) illegal("vertex is not bivalent");
      const auto& r = g.rotation(m.vertex);
      if (edge_of(r[0]) == edge_of(r[1])) illegal("bivalent vertex carries a loop");
      inv.kind = MoveKind::InsertBivalentM2;
      inv.dart = r[0];
      inv.color = g.color(m.vertex);
      rewrite::remove_bivalent(h, m.vertex);
      break;
    }
    case MoveKind::ContractM3: {
      if (!has_dart(m.dart)) illegal("no dart " + std::to_string(m.dart));
      int u = g.vertex_of(m.dart), w = g.head(m.dart);
      if (u < 0 || w < 0) illegal("contraction needs two internal endpoints");
      if (u == w) illegal("cannot contract a loop");
      if (g.color(u) != g.color(w)) illegal("contraction needs endpoints of the same color");
      inv.kind = MoveKind::SplitM3;
      inv.vertex = u;
      inv.arc_start = g.degree(u) - 1;
      inv.arc_len = g.degree(w) - 1;
      rewrite::contract(h, m.dart);
      if (h.degree(u) == 0) illegal("contraction would leave an isolated vertex");
      inv.arc_start %= h.degree(u);
      break;
    }
    case MoveKind::SplitM3: {
      if (!internal(m.vertex)) illegal("no internal vertex " + std::to_string(m.vertex));
      int n = g.degree(m.vertex);
      if (m.arc_start < 0 || m.arc_start >= n || m.arc_len < 0 || m.arc_len > n) illegal("arc out of range");
      int w = rewrite::split(h, m.vertex, m.arc_start, m.arc_len);
      inv.kind = MoveKind::ContractM3;
      inv.dart = h.rotation(m.vertex)[0];
      (void)w;
      break;
    }
    case MoveKind::FlipM4: {
      if (!has_dart(m.dart) || !flip_m4_ok(g, m.dart)) illegal("flip needs an edge between two trivalent vertices of one color");
      int u = g.vertex_of(m.dart);
      rewrite::contract(h, m.dart);
      int w = rewrite::split(h, u, 1, 2);
      (void)w;
      inv = m;
      inv.dart = h.rotation(u)[0];
      break;
    }
    case MoveKind::NormalFlip: {
      if (!normal_flip_ok(g, m.vertex)) illegal("normal flip needs a bivalent black between two trivalent whites");
      const auto& r = g.rotation(m.vertex);
      int t1 = twin(r[0]), t2 = twin(r[1]);
      int w1 = g.head(r[0]), w2 = g.head(r[1]);
      auto from = [&](int w, int t) {
        auto x = g.rotation(w);
        std::rotate(x.begin(), std::find(x.begin(), x.end(), t), x.end());
        return x;
      };
      auto a = from(w1, t1), b = from(w2, t2);
      h.set_rotation(w1, {t1, b[2], a[1]});
      h.set_rotation(w2, {t2, a[2], b[1]});
      inv = m;
      break;
    }
  }
  auto rep = validate(h);
  if (!rep.ok()) illegal("move breaks the graph: " + rep.problems.front());
  if (inverse) *inverse = inv;
  return h;
}

// ---------------------------------------------------------------------------
// search

namespace {

MoveSpec translate(const MoveSpec& m, const PlabicGraph& from, const PlabicGraph& to) {
  CanonicalMap a = canonical_map(from), b = canonical_map(to);
  std::map<int, int> vback, dback;
  for (auto& [x, y] : b.vertex) vback[y] = x;
  for (auto& [x, y] : b.dart) dback[y] = x;
  MoveSpec out = m;
  if (m.dart >= 0) out.dart = dback.at(a.dart.at(m.dart));
  if (m.vertex >= 0 || m.kind == MoveKind::RemoveBivalentM2 || m.kind == MoveKind::SplitM3 ||
      m.kind == MoveKind::NormalFlip)
    out.vertex = vback.at(a.vertex.at(m.vertex));
  if (m.kind == MoveKind::SplitM3) {
    int d = from.rotation(m.vertex)[m.arc_start];
    out.arc_start = to.position(dback.at(a.dart.at(d)));
  }
  return out;
}

struct Node {
  PlabicGraph graph;
  std::string parent;
  MoveSpec step;  // forward side: move from parent; backward side: move back to parent
};

}  // namespace

EquivalenceResult move_equivalent(const PlabicGraph& g1, const PlabicGraph& g2, const SearchOptions& opt) {
  require_valid(g1);
  require_valid(g2);
  EquivalenceResult res;
  if (g1.b() != g2.b()) {
    res.verdict = Verdict::NotEquivalent;
    res.reason = "different numbers of boundary vertices";
    return res;
  }
  if (trip_permutation(g1) != trip_permutation(g2)) {
    res.verdict = Verdict::NotEquivalent;
    res.decided_by_permutation = true;
    res.reason = "trip permutations differ";
    return res;
  }
  if (!opt.skip_permutation_shortcut) {
    bool r1 = is_reduced(g1).reduced, r2 = is_reduced(g2).reduced;
    if (r1 != r2) {
      res.verdict = Verdict::NotEquivalent;
      res.reason = "exactly one of the graphs is reduced";
      return res;
    }
    if (r1) {
      if (decorated_trip_permutation(g1) != decorated_trip_permutation(g2)) {
        res.verdict = Verdict::NotEquivalent;
        res.decided_by_permutation = true;
        res.reason = "decorated trip permutations differ";
        return res;
      }
      res.verdict = Verdict::Equivalent;
      res.decided_by_permutation = true;
      res.reason = "both reduced with the same decorated trip permutation";
    }
  }

  const std::string k1 = canonical_key(g1), k2 = canonical_key(g2);
  if (k1 == k2) {
    res.verdict = Verdict::Equivalent;
    res.certificate = std::vector<MoveSpec>{};
    if (res.reason.empty()) res.reason = "isomorphic";
    return res;
  }
  std::unordered_map<std::string, Node> seen[2];
  seen[0].emplace(k1, Node{g1, "", {}});
  seen[1].emplace(k2, Node{g2, "", {}});
  std::vector<std::string> frontier[2] = {{k1}, {k2}};
  long visited = 2;
  std::string meet;
  while (meet.empty() && visited < opt.budget && (!frontier[0].empty() || !frontier[1].empty())) {
    int side = frontier[0].empty() ? 1 : frontier[1].empty() ? 0 : (frontier[0].size() <= frontier[1].size() ? 0 : 1);
    std::vector<std::string> next;
    for (const std::string& key : frontier[side]) {
      const PlabicGraph cur = seen[side].at(key).graph;
      for (const MoveSpec& m : legal_moves(cur, opt.kinds)) {
        MoveSpec inv;
        PlabicGraph h;
        try {
          h = apply_move(cur, m, &inv);
        } catch (const Error&) {
          continue;
        }
        std::string k = canonical_key(h);
        if (seen[side].count(k)) continue;
        seen[side].emplace(k, Node{h, key, side == 0 ? m : inv});
        ++visited;
        next.push_back(k);
        if (seen[1 - side].count(k)) {
          meet = k;
          break;
        }
        if (visited >= opt.budget) break;
      }
      if (!meet.empty() || visited >= opt.budget) break;
    }
    frontier[side] = std::move(next);
  }
  if (meet.empty()) {
    if (res.verdict != Verdict::Equivalent) {
      res.verdict = Verdict::Unknown;
      res.reason = "search budget exhausted";
    }
    return res;
  }
  std::vector<MoveSpec> forward;
  for (std::string k = meet; !seen[0].at(k).parent.empty(); k = seen[0].at(k).parent) forward.push_back(seen[0].at(k).step);
  std::reverse(forward.begin(), forward.end());
  PlabicGraph cur = seen[0].at(meet).graph;
  for (std::string k = meet; !seen[1].at(k).parent.empty(); k = seen[1].at(k).parent) {
    const Node& n = seen[1].at(k);
    MoveSpec t = translate(n.step, n.graph, cur);
    cur = apply_move(cur, t);
    forward.push_back(t);
  }
  res.verdict = Verdict::Equivalent;
  res.certificate = forward;
  if (res.reason.empty()) res.reason = "move sequence found";
  return res;
}

}  // namespace plabic
