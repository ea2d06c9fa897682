#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "plabic/error.hpp"

namespace plabic {

enum class Color { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }
const char* to_string(Color c);

// Darts: edge e owns darts 2e and 2e+1, so twin(d) = d ^ 1.
inline int twin(int d) { return d ^ 1; }
inline int edge_of(int d) { return d >> 1; }

// A plabic graph stored as a rotation system. Boundary vertex with label i
// has vertex id -i; internal vertices have ids >= 0. Rotation lists are
// clockwise.
class PlabicGraph {
 public:
  PlabicGraph() = default;
  explicit PlabicGraph(int b);

  int b() const { return b_; }

  bool has_vertex(int v) const { return verts_.count(v) != 0; }
  bool has_edge(int e) const { return edges_.count(e) != 0; }
  static bool is_boundary(int v) { return v < 0; }
  static int label_of(int v) { return -v; }
  static int boundary_id(int label) { return -label; }

  Color color(int v) const;
  const std::vector<int>& rotation(int v) const;
  int degree(int v) const { return static_cast<int>(rotation(v).size()); }

  // vertex a dart is based at, or kNone
  int vertex_of(int d) const;
  int head(int d) const { return vertex_of(twin(d)); }
  // index of d in the rotation of its vertex
  int position(int d) const;
  int cw_next(int d) const;
  int cw_prev(int d) const;

  std::vector<int> internal_vertices() const;
  std::vector<int> edges() const { return {edges_.begin(), edges_.end()}; }
  const std::set<int>& edge_set() const { return edges_; }
  int num_internal() const { return static_cast<int>(verts_.size()) - b_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int max_edge_id() const { return edges_.empty() ? -1 : *edges_.rbegin(); }
  int max_vertex_id() const;
  bool is_loop(int e) const { return vertex_of(2 * e) == vertex_of(2 * e + 1); }
  bool is_lollipop(int v) const;
  std::vector<int> neighbors(int v) const;

  // Construction and rewriting. These keep the dart index in sync but do not
  // enforce the plabic invariants; call validate() afterwards.
  int add_vertex(Color c);
  void add_vertex_with_id(int id, Color c);
  void set_color(int v, Color c);
  int new_edge();
  void add_edge_with_id(int e);
  void set_rotation(int v, std::vector<int> darts);
  void remove_vertex(int v);
  void remove_edge(int e);
  // detaches dart d from its vertex without touching the edge record
  void detach(int d);
  // inserts d into the rotation of v right after dart `after` (or at front if after < 0)
  void insert_after(int v, int after, int d);
  void replace_dart(int old_d, int new_d);

  bool operator==(const PlabicGraph& o) const;
  bool operator!=(const PlabicGraph& o) const { return !(*this == o); }

  static constexpr int kNone = -1000000000;

 private:
  struct VertexRec {
    Color color = Color::Black;
    std::vector<int> rot;
  };
  void index_dart(int d, int v);

  int b_ = 0;
  std::map<int, VertexRec> verts_;
  std::set<int> edges_;
  std::vector<int> owner_;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport validate(const PlabicGraph& g);
// throws InvalidGraph with the report text
void require_valid(const PlabicGraph& g);

enum class FaceKind { Internal, Boundary, Outer };
const char* to_string(FaceKind k);

// Rim dart 2(i-1) runs i -> i+1 along the outside of the disk, 2(i-1)+1 runs back.
struct FaceDart {
  int dart;
  bool rim;
  bool operator==(const FaceDart& o) const { return dart == o.dart && rim == o.rim; }
};

struct Face {
  int id = 0;
  FaceKind kind = FaceKind::Internal;
  std::vector<FaceDart> darts;
};

struct FaceMap {
  std::vector<Face> faces;
  std::map<int, int> face_of_dart;  // graph dart -> face id
  int outer = -1;
  int non_outer_count() const { return static_cast<int>(faces.size()) - 1; }
};

std::vector<Face> faces(const PlabicGraph& g);
FaceMap face_map(const PlabicGraph& g);
// No validation; usable on intermediate graphs whose boundary vertices may be bare.
FaceMap trace_faces(const PlabicGraph& g);
int count_non_outer_faces(const PlabicGraph& g);

struct Classification {
  bool bipartite = false;
  bool trivalent = false;
  bool normal = false;
  std::vector<int> lollipops;        // internal vertex ids
  std::vector<int> internal_leaves;  // includes lollipops
};

Classification classify(const PlabicGraph& g);

// Collapse every collapsible tree (repeatedly) and return the result.
PlabicGraph collapse_trees(const PlabicGraph& g);

// Renumber vertices and edges by a traversal from the boundary; two graphs are
// isomorphic (fixing boundary labels) iff their canonical forms are equal.
PlabicGraph canonicalize(const PlabicGraph& g);
std::string canonical_key(const PlabicGraph& g);
bool isomorphic(const PlabicGraph& a, const PlabicGraph& b);

// Where canonicalize() sends each internal vertex and each dart.
struct CanonicalMap {
  std::map<int, int> vertex;
  std::map<int, int> dart;
};
CanonicalMap canonical_map(const PlabicGraph& g);

// Sorted vertex ids of the connected component containing v.
std::vector<int> component_of(const PlabicGraph& g, int v);

}  // namespace plabic
