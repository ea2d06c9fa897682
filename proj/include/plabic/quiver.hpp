#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "plabic/graph.hpp"

namespace plabic {

struct Quiver {
  std::vector<std::string> keys;
  std::vector<bool> frozen;
  std::vector<int> face;             // face id in face_map(G), -1 if not from a graph
  std::vector<std::vector<int>> m;   // m[u][v] = #(u -> v) - #(v -> u)

  int size() const { return static_cast<int>(keys.size()); }
  int index_of(const std::string& key) const;  // -1 if absent
};

// Keys are target face labels when g is reduced, "f<id>" otherwise.
Quiver quiver_of(const PlabicGraph& g);
// Renames vertices through their face ids; faces missing from the map keep their key.
Quiver rekey(const Quiver& q, const std::map<int, std::string>& face_key);

// Frozen-frozen entries are cleared afterwards, as in quiver_of.
Quiver mutate(const Quiver& q, int k);
Quiver mutate(const Quiver& q, const std::string& key);

// Same keys, same frozen flags, same arrows.
bool same_quiver(const Quiver& a, const Quiver& b);

std::string quiver_to_dot(const Quiver& q);

// Polygon vertices 1..m in clockwise order; each triangle lists three of them.
using Triangle = std::array<int, 3>;
// Throws NotATriangulation.
void check_triangulation(int m, const std::vector<Triangle>& t);
PlabicGraph from_triangulation(int m, const std::vector<Triangle>& t);
// Q(T): one vertex per side or diagonal, keyed "p-q" with p < q; sides are
// frozen; inside each triangle the arrows run clockwise
// (pq -> qr -> pr for p < q < r).
Quiver triangulation_quiver(int m, const std::vector<Triangle>& t);
// For G = from_triangulation(m, t): face id -> "p-q" of the side or diagonal it sits on.
std::map<int, std::string> triangulation_face_keys(const PlabicGraph& g, int m);

// One letter per crossing: s_i swaps wires i and i+1 (wire 1 at the bottom).
// thick = true puts the black vertex on top, false puts white on top.
struct Crossing {
  int i;
  bool thick;
};
// Parses "s2 s3 S1 ...": lowercase s is thin, uppercase S is thick.
std::vector<Crossing> parse_word(const std::string& text);
// Boundary vertices are labeled clockwise from the lower left end of wire 1.
// Throws BadWord.
PlabicGraph from_wiring(int n, const std::vector<Crossing>& word);
// Ordinary wiring diagram: every crossing has black on top.
PlabicGraph from_wiring(int n, const std::vector<int>& word);

}  // namespace plabic
