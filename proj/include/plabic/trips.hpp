#pragma once

#include <map>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/perms.hpp"

namespace plabic {

struct Trip {
  bool roundtrip = false;
  int source = 0;  // boundary labels, 0 for roundtrips
  int target = 0;
  std::vector<int> darts;
};

// Next dart of the trip arriving along d: black leaves by the clockwise
// predecessor of the arrival dart, white by its clockwise successor.
int trip_step(const PlabicGraph& g, int d);

Trip trip_from(const PlabicGraph& g, int i);
// one-way trips 1..b, then roundtrips (ordered by smallest dart)
std::vector<Trip> all_trips(const PlabicGraph& g);
std::vector<int> trip_permutation(const PlabicGraph& g);
DecoratedPermutation decorated_trip_permutation(const PlabicGraph& g);

using EdgeLabeling = std::map<int, std::vector<int>>;  // edge id -> sorted labels
EdgeLabeling edge_labels(const PlabicGraph& g);
bool resonance(const PlabicGraph& g);

enum class BadKind { Roundtrip, EssentialSelfIntersection, BadDoubleCrossing };
const char* to_string(BadKind k);

struct BadFeature {
  BadKind kind;
  std::vector<int> edges;  // ESI: {e}; BDC: {e1, e2}; roundtrip: its edges
  std::vector<int> trips;  // source labels involved (0 for a roundtrip)
};

std::vector<BadFeature> bad_features(const PlabicGraph& g);

}  // namespace plabic
