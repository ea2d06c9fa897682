#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "figures.hpp"
#include "oracles.hpp"
#include "plabic/bridges.hpp"
#include "plabic/io.hpp"
#include "plabic/labels.hpp"
#include "plabic/moves.hpp"
#include "plabic/normalize.hpp"
#include "plabic/trips.hpp"
#include "random_graphs.hpp"

using namespace plabic;

namespace {

Subset S(const std::string& s) { return parse_subset(s, 9); }

// Target labels from scratch: cut the disk along each trip and flood the
// faces on its left without crossing the trip's edges.
std::map<int, Subset> flood_labels(const PlabicGraph& g) {
  FaceMap fm = face_map(g);
  const int n = static_cast<int>(fm.faces.size());
  auto pi = decorated_trip_permutation(g);
  std::map<int, Subset> out;
  for (const Face& f : fm.faces)
    if (f.kind != FaceKind::Outer) out[f.id];
  for (const Trip& t : all_trips(g)) {
    if (t.source == t.target) {
      if (pi.decoration(t.target) == Decoration::Over)
        for (auto& [f, s] : out) s.push_back(t.target);
      continue;
    }
    std::set<int> cut;
    for (int d : t.darts) cut.insert(edge_of(d));
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e : g.edges())
      if (!cut.count(e)) parent[find(fm.face_of_dart.at(2 * e))] = find(fm.face_of_dart.at(2 * e + 1));
    std::set<int> left;
    for (int d : t.darts) left.insert(find(fm.face_of_dart.at(d)));
    for (auto& [f, s] : out)
      if (left.count(find(f))) s.push_back(t.target);
  }
  for (auto& [f, s] : out) std::sort(s.begin(), s.end());
  return out;
}

}  // namespace

TEST_CASE("labels of the figure graphs") {
  auto g = figures::plabic3();
  auto src = face_labels(g, LabelMode::Source).labels;
  auto tgt = face_labels(g, LabelMode::Target).labels;
  std::set<std::pair<Subset, Subset>> pairs;
  for (auto& [f, s] : src) pairs.insert({s, tgt.at(f)});
  CHECK(pairs == std::set<std::pair<Subset, Subset>>{
                     {S("135"), S("345")}, {S("134"), S("356")}, {S("345"), S("346")}, {S("356"), S("134")}});
  auto a = label_collection(face_labels(figures::plabic_a(), LabelMode::Target));
  CHECK(a == Collection{S("12"), S("14"), S("15"), S("23"), S("24"), S("34"), S("45")});

  Drawing d(1);
  int v = d.white(0, 0);
  d.edge(d.boundary(1, 0, 1), v);
  for (auto mode : {LabelMode::Source, LabelMode::Target})
    CHECK(label_collection(face_labels(d.build(), mode)) == Collection{S("1")});
}

TEST_CASE("labels need a reduced graph") {
  try {
    face_labels(figures::roundtrip_hexagon(), LabelMode::Target);
    FAIL("labeled a non-reduced graph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReduced);
  }
}

TEST_CASE("target labels match the flood-fill definition") {
  std::mt19937 rng(11);
  for (int k = 0; k < 150; ++k) {
    auto g = k % 2 ? figures::random_trivalent(rng, 7, 6) : figures::random_reduced(rng, 7, 10);
    auto lab = face_labels(g, LabelMode::Target).labels;
    CHECK(lab == flood_labels(g));
  }
}

TEST_CASE("label cardinality and adjacent faces") {
  std::mt19937 rng(12);
  for (int k = 0; k < 150; ++k) {
    auto g = figures::random_reduced(rng, 7, 12);
    auto p = decorated_trip_permutation(g);
    size_t a = anti_excedances(p);
    FaceMap fm = face_map(g);
    for (auto mode : {LabelMode::Source, LabelMode::Target}) {
      auto lab = face_labels(g, mode).labels;
      for (auto& [f, s] : lab) CHECK(s.size() == a);
      for (int e : g.edges()) {
        int f1 = fm.face_of_dart.at(2 * e), f2 = fm.face_of_dart.at(2 * e + 1);
        if (f1 == f2 || f1 == fm.outer || f2 == fm.outer) continue;
        std::vector<int> diff;
        std::set_symmetric_difference(lab[f1].begin(), lab[f1].end(), lab[f2].begin(), lab[f2].end(),
                                      std::back_inserter(diff));
        CHECK(diff.size() == 2);
      }
    }
  }
}

TEST_CASE("strong equivalence") {
  auto g = figures::braid_square(1);
  auto m2 = legal_moves(g, {MoveKind::InsertBivalentM2}).front();
  CHECK(strongly_equivalent(g, apply_move(g, m2)));
  auto m1 = legal_moves(g, {MoveKind::SquareM1}).front();
  CHECK_FALSE(strongly_equivalent(g, apply_move(g, m1)));
  CHECK_FALSE(strongly_equivalent(bridge_graph(parse_permutation("3 4 5 1 2")), bridge_graph(parse_permutation("4 5 1 2 3"))));
}

TEST_CASE("weakly separated collections from graphs") {
  SECTION("Catalan counts for a = 2") {
    CHECK(enumerate_ws(pi_ab(2, 4)).size() == 2);
    CHECK(enumerate_ws(pi_ab(2, 5)).size() == 5);
    CHECK(enumerate_ws(pi_ab(2, 6)).size() == 14);
  }
  SECTION("pi_36") { CHECK(enumerate_ws(pi_ab(3, 6)).size() == 34); }
  SECTION("a decorated identity has one collection") {
    auto found = enumerate_ws(parse_permutation("1^ 2^ 3^"));
    REQUIRE(found.size() == 1);
    CHECK(*found.begin() == Collection{S("123")});
  }
  SECTION("threads do not change the result") {
    EnumerateOptions one, four;
    four.threads = 4;
    auto p = parse_permutation("4 6 5 1 2 3");
    CHECK(enumerate_ws(p, one) == enumerate_ws(p, four));
    CHECK(enumerate_ws(pi_ab(3, 6), one) == enumerate_ws(pi_ab(3, 6), four));
  }
  SECTION("the sandwich holds for random permutations") {
    std::mt19937 rng(13);
    for (int k = 0; k < 30; ++k) {
      auto p = figures::random_permutation(rng, 2 + rng() % 5);
      auto nk = necklace_from_perm(p);
      for (const auto& c : enumerate_ws(p)) {
        for (const auto& I : nk.sets) CHECK(std::binary_search(c.begin(), c.end(), I));
        for (const auto& I : c) {
          CHECK(oracle::in_positroid(nk.sets, I, p.b()));
          for (const auto& J : c) CHECK(oracle::weakly_separated(I, J, p.b()));
        }
      }
    }
  }
  SECTION("budget") {
    EnumerateOptions opt;
    opt.limit = 3;
    try {
      enumerate_ws(pi_ab(3, 6), opt);
      FAIL("no budget error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooLarge);
    }
  }
}
