#include "plabic/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace plabic {

using nlohmann::json;

json to_json(const PlabicGraph& g) {
  json j;
  j["b"] = g.b();
  j["vertices"] = json::array();
  for (int v : g.internal_vertices()) j["vertices"].push_back({{"id", v}, {"color", to_string(g.color(v))}});
  j["edges"] = json::array();
  for (int e : g.edges()) j["edges"].push_back({{"id", e}});
  json rot = json::object();
  auto put = [&](int v) {
    json list = json::array();
    for (int d : g.rotation(v)) list.push_back(edge_of(d));
    rot[std::to_string(v)] = list;
  };
  for (int i = 1; i <= g.b(); ++i) put(-i);
  for (int v : g.internal_vertices()) put(v);
  j["rotation"] = rot;
  return j;
}

PlabicGraph from_json(const json& j) {
  try {
    int b = j.at("b").get<int>();
    if (b < 0) throw Error(ErrorKind::InvalidGraph, "negative b");
    PlabicGraph g(b);
    for (const auto& v : j.at("vertices")) {
      std::string c = v.at("color").get<std::string>();
      if (c != "black" && c != "white") throw Error(ErrorKind::InvalidGraph, "bad color '" + c + "'");
      g.add_vertex_with_id(v.at("id").get<int>(), c == "black" ? Color::Black : Color::White);
    }
    for (const auto& e : j.at("edges")) g.add_edge_with_id(e.at("id").get<int>());
    std::map<int, std::vector<int>> lists;
    for (const auto& [key, val] : j.at("rotation").items()) {
      size_t used = 0;
      int v = std::stoi(key, &used);
      if (used != key.size()) throw Error(ErrorKind::InvalidGraph, "bad rotation key '" + key + "'");
      if (!g.has_vertex(v)) throw Error(ErrorKind::InvalidGraph, "rotation for unknown vertex " + key);
      lists[v] = val.get<std::vector<int>>();
    }
    std::map<int, int> uses;
    for (auto& [v, list] : lists) {
      std::vector<int> darts;
      for (int e : list) {
        if (e < 0) throw Error(ErrorKind::InvalidGraph, "negative edge id in rotation");
        int side = std::min(uses[e]++, 1);
        darts.push_back(2 * e + side);
      }
      g.set_rotation(v, std::move(darts));
    }
    return g;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "rotation keys must be integers");
  }
}

std::string dump_graph(const PlabicGraph& g) { return to_json(g).dump(2) + "\n"; }

PlabicGraph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  return from_json(j);
}

// interior by barycentric (Tutte) relaxation
std::map<int, std::pair<double, double>> tutte_layout(const PlabicGraph& g) {
  std::map<int, std::pair<double, double>> p;
  const double pi = std::acos(-1.0);
  for (int i = 1; i <= g.b(); ++i) {
    double t = pi / 2 - 2 * pi * (i - 1) / g.b();
    p[-i] = {3 * std::cos(t), 3 * std::sin(t)};
  }
  for (int v : g.internal_vertices()) p[v] = {0, 0};
  for (int it = 0; it < 400; ++it) {
    for (int v : g.internal_vertices()) {
      double x = 0, y = 0;
      int n = 0;
      for (int w : g.neighbors(v)) {
        if (w == v) continue;
        x += p[w].first;
        y += p[w].second;
        ++n;
      }
      if (n) p[v] = {x / n, y / n};
    }
  }
  return p;
}

std::string to_dot(const PlabicGraph& g) {
  std::ostringstream os;
  os << "graph plabic {\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (int i = 1; i <= g.b(); ++i) os << "  b" << i << " [shape=plaintext, label=\"" << i << "\"];\n";
  for (int v : g.internal_vertices())
    os << "  v" << v << " [style=filled, fillcolor=" << (g.color(v) == Color::Black ? "black" : "white") << "];\n";
  auto name = [](int v) { return (v < 0 ? "b" + std::to_string(-v) : "v" + std::to_string(v)); };
  for (int e : g.edges())
    os << "  " << name(g.vertex_of(2 * e)) << " -- " << name(g.vertex_of(2 * e + 1)) << " [label=\"" << e
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_tikz(const PlabicGraph& g) {
  auto p = tutte_layout(g);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "\\begin{tikzpicture}\n  \\draw (0,0) circle (3);\n";
  for (int e : g.edges()) {
    auto a = p[g.vertex_of(2 * e)], c = p[g.vertex_of(2 * e + 1)];
    os << "  \\draw[thick] (" << a.first << "," << a.second << ") -- (" << c.first << "," << c.second << ");\n";
  }
  for (int v : g.internal_vertices())
    os << "  \\filldraw[fill=" << (g.color(v) == Color::Black ? "black" : "white") << "] (" << p[v].first << ","
       << p[v].second << ") circle (2pt);\n";
  for (int i = 1; i <= g.b(); ++i)
    os << "  \\node at (" << 1.1 * p[-i].first << "," << 1.1 * p[-i].second << ") {$" << i << "$};\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

int Drawing::boundary(int label, double x, double y) {
  if (label < 1 || label > b_) throw Error(ErrorKind::BadLabel, "boundary label out of range");
  bpos_.push_back({label, {x, y}});
  return -label;
}

int Drawing::vertex(Color c, double x, double y) {
  ipos_.push_back({c, {x, y}});
  return static_cast<int>(ipos_.size()) - 1;
}

Drawing::Pt Drawing::pos(int v) const {
  if (v >= 0) return ipos_.at(v).second;
  for (auto& [l, p] : bpos_)
    if (l == -v) return p;
  throw Error(ErrorKind::BadLabel, "boundary vertex without position");
}

void Drawing::edge(int u, int v) {
  Pt a = pos(u), c = pos(v);
  edges_.push_back({u, v, c.x - a.x, c.y - a.y, a.x - c.x, a.y - c.y});
}

void Drawing::edge(int u, int v, double cx, double cy) {
  Pt a = pos(u), c = pos(v);
  edges_.push_back({u, v, cx - a.x, cy - a.y, cx - c.x, cy - c.y});
}

void Drawing::edge_dirs(int u, int v, double ux, double uy, double vx, double vy) {
  edges_.push_back({u, v, ux, uy, vx, vy});
}

PlabicGraph Drawing::build() const {
  PlabicGraph g(b_);
  for (size_t i = 0; i < ipos_.size(); ++i) g.add_vertex_with_id(static_cast<int>(i), ipos_[i].first);
  std::map<int, std::vector<std::pair<double, int>>> around;
  for (size_t k = 0; k < edges_.size(); ++k) {
    const E& e = edges_[k];
    int id = static_cast<int>(k);
    g.add_edge_with_id(id);
    around[e.u].push_back({std::atan2(e.uy, e.ux), 2 * id});
    around[e.v].push_back({std::atan2(e.vy, e.vx), 2 * id + 1});
  }
  for (auto& [v, list] : around) {
    // clockwise = decreasing angle
    std::sort(list.begin(), list.end(), [](auto& a, auto& c) {
      if (a.first != c.first) return a.first > c.first;
      return a.second < c.second;
    });
    std::vector<int> r;
    for (auto& pr : list) r.push_back(pr.second);
    g.set_rotation(v, r);
  }
  return g;
}

}  // namespace plabic
