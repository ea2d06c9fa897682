#pragma once

#include <string>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/moves.hpp"
#include "plabic/trips.hpp"

namespace plabic {

// A triple diagram seen through its normal plabic graph: strands are the
// trips, triple points are the white vertices.
struct TripleView {
  PlabicGraph base;
  std::vector<Trip> strands;
  std::vector<int> triple_points;
};

// Throws NotNormal.
TripleView triple_view(const PlabicGraph& g);
std::vector<int> strand_permutation(const TripleView& v);

// site must be an UrbanRenewal or NormalFlip move of the base graph.
TripleView swivel(const TripleView& v, const MoveSpec& site);
std::vector<MoveSpec> swivel_sites(const TripleView& v);

struct Badgon {
  std::string kind;  // "ClosedStrand", "Monogon", "ParallelDigon"
  std::vector<int> edges;
  std::vector<int> strands;
};

struct Minimality {
  bool minimal = false;
  std::vector<Badgon> badgons;
};

Minimality minimality(const TripleView& v);

std::string strands_to_tikz(const TripleView& v);

}  // namespace plabic
