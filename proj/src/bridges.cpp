#include "plabic/bridges.hpp"

#include <algorithm>
#include <numeric>

#include "plabic/io.hpp"
#include "plabic/moves.hpp"

namespace plabic {

namespace {

bool fixed_at(const std::vector<long>& w, int i, int b) { return w[i - 1] == i || w[i - 1] == i + b; }

}  // namespace

BridgeSequence bcfw_factorize(const BoundedAffinePermutation& f) {
  check_window(f);
  const int b = f.b();
  std::vector<long> w = f.window;
  BridgeSequence s;
  s.b = b;
  while (true) {
    bool all_fixed = true;
    for (int i = 1; i <= b; ++i) all_fixed &= fixed_at(w, i, b);
    if (all_fixed) break;
    bool found = false;
    for (int i = 1; i <= b && !found; ++i) {
      if (fixed_at(w, i, b)) continue;
      for (int j = i + 1; j <= b; ++j) {
        if (!fixed_at(w, j, b)) {
          if (w[i - 1] < w[j - 1]) {
            std::swap(w[i - 1], w[j - 1]);
            s.transpositions.push_back({i, j});
            found = true;
          }
          break;  // anything further right has a non-fixed position in between
        }
      }
    }
    if (!found) throw Error(ErrorKind::MalformedWindow, "no admissible bridge; window is not bounded affine");
  }
  for (int i = 1; i <= b; ++i) s.base.push_back(w[i - 1] == i ? Color::Black : Color::White);
  return s;
}

std::vector<int> transposition_product(const BridgeSequence& s) {
  std::vector<int> p(s.b);
  std::iota(p.begin(), p.end(), 1);
  // swap positions, rightmost transposition first
  for (auto it = s.transpositions.rbegin(); it != s.transpositions.rend(); ++it)
    std::swap(p[it->first - 1], p[it->second - 1]);
  return p;
}

PlabicGraph bridge_graph(const DecoratedPermutation& p) {
  check_permutation(p);
  const int b = p.b();
  BridgeSequence s = bcfw_factorize(affinize(p));
  Drawing d(b);
  std::vector<int> last(b + 1);
  for (int i = 1; i <= b; ++i) last[i] = d.boundary(i, i, 0);
  const int n = static_cast<int>(s.transpositions.size());
  for (int k = 0; k < n; ++k) {
    auto [i, j] = s.transpositions[k];
    double y = -(k + 1);
    int wv = d.white(i, y), bv = d.black(j, y);
    d.edge(last[i], wv);
    d.edge(last[j], bv);
    d.edge(wv, bv);
    last[i] = wv;
    last[j] = bv;
  }
  for (int i = 1; i <= b; ++i)
    if (last[i] < 0) d.edge(last[i], d.vertex(s.base[i - 1], i, -0.5));
  PlabicGraph g = d.build();
  for (bool again = true; again;) {
    again = false;
    for (int v : g.internal_vertices()) {
      if (g.degree(v) != 2) continue;
      auto nb = g.neighbors(v);
      if (nb[0] < 0 && nb[1] < 0) continue;
      rewrite::remove_bivalent(g, v);
      again = true;
      break;
    }
  }
  return g;
}

}  // namespace plabic
