#pragma once

#include <map>
#include <set>
#include <vector>

#include "plabic/graph.hpp"
#include "plabic/perms.hpp"

namespace plabic {

enum class LabelMode { Source, Target };
const char* to_string(LabelMode m);

struct FaceLabeling {
  LabelMode mode = LabelMode::Target;
  std::map<int, Subset> labels;  // non-outer face id (as in face_map) -> label
};

// Throws NotReduced unless g is reduced.
FaceLabeling face_labels(const PlabicGraph& g, LabelMode mode);
// Same, skipping the reducedness check (the caller vouches for it).
FaceLabeling face_labels_unchecked(const PlabicGraph& g, LabelMode mode);

using Collection = std::vector<Subset>;  // sorted, duplicates removed
Collection label_collection(const FaceLabeling& l);

bool strongly_equivalent(const PlabicGraph& g1, const PlabicGraph& g2);

struct EnumerateOptions {
  long limit = 200000;  // graphs explored before giving up with TooLarge
  int threads = 1;
};

// All maximal weakly separated collections arising as target face labels of
// reduced graphs with decorated trip permutation p.
std::set<Collection> enumerate_ws(const DecoratedPermutation& p, const EnumerateOptions& opt = {});

// Contract every same-colored internal edge and drop bivalent vertices
// (except ones between two boundary vertices) until nothing changes.
// Throws NotReduced if a loop appears.
PlabicGraph contracted_form(const PlabicGraph& g);

// Square faces of a contracted form: four distinct internal vertices,
// alternating colors, any degrees >= 3. Returns one dart per such face.
std::vector<int> generalized_square_sites(const PlabicGraph& g);
// Split the corners to make them trivalent, square move, contract again.
PlabicGraph generalized_square_move(const PlabicGraph& g, int dart);

}  // namespace plabic
