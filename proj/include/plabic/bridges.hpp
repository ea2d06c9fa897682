#pragma once

#include <utility>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/perms.hpp"

namespace plabic {

struct BridgeSequence {
  int b = 0;
  // in the order found; the first one is the topmost bridge
  std::vector<std::pair<int, int>> transpositions;
  // lollipop colors of the identity-mod-b window reached at the end
  std::vector<Color> base;
};

// Repeatedly swaps f(i), f(j) for the smallest admissible (i, j): i < j,
// f(i) < f(j), neither fixed, everything strictly between them fixed.
BridgeSequence bcfw_factorize(const BoundedAffinePermutation& f);

// Right-to-left product of the transpositions, as a permutation of 1..b.
std::vector<int> transposition_product(const BridgeSequence& s);

PlabicGraph bridge_graph(const DecoratedPermutation& p);

}  // namespace plabic
