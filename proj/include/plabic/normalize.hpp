#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plabic/graph.hpp"

namespace plabic {

// Why a graph was found not to be reduced.
struct Witness {
  std::string kind;  // "Loop", "InternalLeaf", "Roundtrip", "EssentialSelfIntersection", "BadDoubleCrossing"
  int stage = 0;     // normalization stage that found it; 0 when it came from the bad-feature scan
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> trips;
};
nlohmann::json to_json(const Witness& w);

struct RemovedLollipop {
  int label;
  Color color;
};

struct NormalizeResult {
  bool ok = false;  // false means not reduced, see witness
  PlabicGraph graph;
  // Lollipops taken out in stage 3. They are put back as black lollipops at
  // the end so the result stays a valid normal graph.
  std::vector<RemovedLollipop> lollipops_removed;
  Witness witness;
};

NormalizeResult normalize(const PlabicGraph& g);

struct ReducedResult {
  bool reduced = false;
  Witness witness;
};

ReducedResult is_reduced(const PlabicGraph& g);

}  // namespace plabic
