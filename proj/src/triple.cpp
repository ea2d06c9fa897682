#include "plabic/triple.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plabic/io.hpp"

namespace plabic {

TripleView triple_view(const PlabicGraph& g) {
  if (!classify(g).normal) throw Error(ErrorKind::NotNormal, "triple diagrams come from normal plabic graphs");
  TripleView v;
  v.base = g;
  v.strands = all_trips(g);
  for (int x : g.internal_vertices())
    if (g.color(x) == Color::White) v.triple_points.push_back(x);
  return v;
}

std::vector<int> strand_permutation(const TripleView& v) {
  std::vector<int> p;
  for (const Trip& t : v.strands)
    if (!t.roundtrip) p.push_back(t.target);
  return p;
}

std::vector<MoveSpec> swivel_sites(const TripleView& v) {
  return legal_moves(v.base, {MoveKind::UrbanRenewal, MoveKind::NormalFlip});
}

TripleView swivel(const TripleView& v, const MoveSpec& site) {
  if (site.kind != MoveKind::UrbanRenewal && site.kind != MoveKind::NormalFlip)
    throw Error(ErrorKind::IllegalMove, "swivel sites are urban renewal or normal flip moves");
  return triple_view(apply_move(v.base, site));
}

Minimality minimality(const TripleView& v) {
  Minimality m;
  for (const BadFeature& f : bad_features(v.base)) {
    Badgon b;
    switch (f.kind) {
      case BadKind::Roundtrip: b.kind = "ClosedStrand"; break;
      case BadKind::EssentialSelfIntersection: b.kind = "Monogon"; break;
      case BadKind::BadDoubleCrossing: b.kind = "ParallelDigon"; break;
    }
    b.edges = f.edges;
    b.strands = f.trips;
    m.badgons.push_back(b);
  }
  m.minimal = m.badgons.empty();
  return m;
}

std::string strands_to_tikz(const TripleView& v) {
  const PlabicGraph& g = v.base;
  auto pos = tutte_layout(g);
  std::string pic = to_tikz(g);
  pic.erase(pic.rfind("\\end{tikzpicture}"));
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(3);
  const char* colors[] = {"red", "blue", "teal", "orange", "violet", "brown", "magenta", "olive"};
  int k = 0;
  for (const Trip& t : v.strands) {
    // polyline through edge midpoints, nudged to the left of each dart so
    // the two strands using an edge stay apart
    o << "  \\draw[" << colors[k++ % 8] << ", ->] ";
    for (size_t s = 0; s < t.darts.size(); ++s) {
      int d = t.darts[s];
      auto a = pos[g.vertex_of(d)], c = pos[g.head(d)];
      double mx = (a.first + c.first) / 2, my = (a.second + c.second) / 2;
      double dx = c.first - a.first, dy = c.second - a.second;
      double len = std::max(1e-9, std::hypot(dx, dy));
      o << (s ? " -- " : "") << "(" << mx - 0.08 * dy / len << "," << my + 0.08 * dx / len << ")";
    }
    if (t.roundtrip) o << " -- cycle";
    o << ";\n";
  }
  return pic + o.str() + "\\end{tikzpicture}\n";
}

}  // namespace plabic
