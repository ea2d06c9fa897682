#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "plabic/graph.hpp"

namespace plabic {

enum class MoveKind { SquareM1, InsertBivalentM2, RemoveBivalentM2, ContractM3, SplitM3, FlipM4, UrbanRenewal, NormalFlip };
const char* to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

// Which fields matter depends on the kind:
//   SquareM1, UrbanRenewal     dart on the square face (any of its four)
//   InsertBivalentM2           dart (the new vertex goes on its edge), color
//   RemoveBivalentM2           vertex
//   ContractM3, FlipM4         dart of the edge
//   SplitM3                    vertex, arc_start, arc_len (arc moves to the new vertex)
//   NormalFlip                 vertex (the bivalent black between the two whites)
struct MoveSpec {
  MoveKind kind = MoveKind::SquareM1;
  int dart = -1;
  int vertex = -1;
  Color color = Color::Black;
  int arc_start = 0;
  int arc_len = 0;
  // M1 only: some two consecutive faces around the square coincide, so the
  // move need not act on the quiver as a mutation
  bool square_condition_fails = false;

  bool operator==(const MoveSpec& o) const;
};

nlohmann::json to_json(const MoveSpec& m);
MoveSpec move_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const std::vector<MoveSpec>& c);
std::vector<MoveSpec> certificate_from_json(const nlohmann::json& j);

// Every applicable move. SplitM3 is listed for contiguous arcs that avoid
// rotation position 0 and leave both halves nonempty (no leaf creation).
std::vector<MoveSpec> legal_moves(const PlabicGraph& g);
std::vector<MoveSpec> legal_moves(const PlabicGraph& g, const std::set<MoveKind>& kinds);

// Throws IllegalMove when the spec does not fit the graph.
PlabicGraph apply_move(const PlabicGraph& g, const MoveSpec& m);

// Applies m and also returns a spec that undoes it on the result.
PlabicGraph apply_move(const PlabicGraph& g, const MoveSpec& m, MoveSpec* inverse);

// Raw rewriting steps used by the moves and by normalization. They check
// only what they need to stay well-formed.
namespace rewrite {
// inserts a vertex of color c in the middle of edge_of(d); returns its id
int insert_bivalent(PlabicGraph& g, int d, Color c);
// removes bivalent vertex v, keeping the edge of its first dart
void remove_bivalent(PlabicGraph& g, int v);
// contracts the edge of d into vertex_of(d), which survives
void contract(PlabicGraph& g, int d);
// moves the cyclic arc [start, start+len) of v's rotation to a new vertex of
// the same color joined to v; returns the new vertex
int split(PlabicGraph& g, int v, int start, int len);
}  // namespace rewrite

enum class Verdict { Equivalent, NotEquivalent, Unknown };
const char* to_string(Verdict v);

struct EquivalenceResult {
  Verdict verdict = Verdict::Unknown;
  // moves that take the first graph to one isomorphic to the second
  std::optional<std::vector<MoveSpec>> certificate;
  bool decided_by_permutation = false;
  std::string reason;
};

struct SearchOptions {
  long budget = 20000;           // states visited, both directions together
  std::set<MoveKind> kinds;      // empty means all kinds
  bool skip_permutation_shortcut = false;
};

EquivalenceResult move_equivalent(const PlabicGraph& g1, const PlabicGraph& g2, const SearchOptions& opt = {});

}  // namespace plabic
