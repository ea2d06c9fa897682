// plabic: command-line front end for the plabic library.
//
// Graphs are read and written in the JSON format of plabic/io.hpp. A graph
// argument may be a path, "-" for stdin, or "@name" for fixtures/name.json
// (the fixture directory can be moved with PLABIC_FIXTURES).

#include <cmath>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plabic/bridges.hpp"
#include "plabic/io.hpp"
#include "plabic/labels.hpp"
#include "plabic/moves.hpp"
#include "plabic/normalize.hpp"
#include "plabic/perms.hpp"
#include "plabic/quiver.hpp"
#include "plabic/triple.hpp"
#include "plabic/trips.hpp"

#ifndef PLABIC_FIXTURE_DIR
#define PLABIC_FIXTURE_DIR "fixtures"
#endif

using nlohmann::json;
using namespace plabic;

namespace {

std::string slurp(const std::string& where) {
  if (where == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::string path = where;
  if (!where.empty() && where[0] == '@') {
    const char* dir = std::getenv("PLABIC_FIXTURES");
    path = std::string(dir ? dir : PLABIC_FIXTURE_DIR) + "/" + where.substr(1) + ".json";
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

PlabicGraph load(const std::string& where) {
  PlabicGraph g = parse_graph(slurp(where));
  require_valid(g);
  return g;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<long> parse_longs(const std::string& s) {
  std::istringstream in(s);
  std::vector<long> out;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::MalformedWindow, "not an integer: '" + tok + "'");
    }
  }
  return out;
}

json perm_json(const DecoratedPermutation& p) { return format_permutation(p); }

json subsets_json(const std::vector<Subset>& v, int b) {
  json a = json::array();
  for (const Subset& s : v) a.push_back(format_subset(s, b));
  return a;
}

json info(const PlabicGraph& g) {
  json j;
  auto report = validate(g);
  j["valid"] = report.ok();
  j["b"] = g.b();
  j["vertices"] = g.internal_vertices().size();
  j["edges"] = g.edges().size();
  auto c = classify(g);
  j["bipartite"] = c.bipartite;
  j["trivalent"] = c.trivalent;
  j["normal"] = c.normal;
  j["lollipops"] = c.lollipops;
  FaceMap fm = face_map(g);
  int internal = 0;
  for (const Face& f : fm.faces) internal += f.kind == FaceKind::Internal;
  j["faces"] = fm.non_outer_count();
  j["internal_faces"] = internal;
  j["trip_permutation"] = trip_permutation(g);
  try {
    j["decorated_permutation"] = perm_json(decorated_trip_permutation(g));
  } catch (const Error& e) {
    j["decorated_permutation"] = nullptr;
    j["decoration_error"] = e.what();
  }
  auto r = is_reduced(g);
  j["reduced"] = r.reduced;
  if (!r.reduced) j["witness"] = to_json(r.witness);
  return j;
}

json trips_json(const PlabicGraph& g) {
  json a = json::array();
  for (const Trip& t : all_trips(g)) {
    json x;
    x["roundtrip"] = t.roundtrip;
    if (!t.roundtrip) {
      x["source"] = t.source;
      x["target"] = t.target;
    }
    x["darts"] = t.darts;
    a.push_back(x);
  }
  return a;
}

json quiver_json(const Quiver& q) {
  json j;
  j["keys"] = q.keys;
  j["frozen"] = q.frozen;
  json arrows = json::array();
  for (int u = 0; u < q.size(); ++u)
    for (int v = 0; v < q.size(); ++v)
      if (q.m[u][v] > 0) arrows.push_back({q.keys[u], q.keys[v], q.m[u][v]});
  j["arrows"] = arrows;
  return j;
}

std::vector<Triangle> parse_triangles(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  std::vector<Triangle> t;
  if (!j.is_array()) throw Error(ErrorKind::NotATriangulation, "expected a list of triangles");
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 3) throw Error(ErrorKind::NotATriangulation, "each triangle needs 3 vertices");
    t.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>()});
  }
  return t;
}

PlabicGraph lollipops(const std::string& colors) {
  Drawing d(static_cast<int>(colors.size()));
  const double pi = 3.14159265358979323846;
  for (size_t k = 0; k < colors.size(); ++k) {
    double th = pi / 2 - 2 * pi * k / colors.size();
    Color c;
    if (colors[k] == 'b' || colors[k] == 'B')
      c = Color::Black;
    else if (colors[k] == 'w' || colors[k] == 'W')
      c = Color::White;
    else
      throw Error(ErrorKind::ParseError, "lollipop colors are 'b' or 'w'");
    int v = d.vertex(c, std::cos(th), std::sin(th));
    d.edge(d.boundary(static_cast<int>(k) + 1, 2 * std::cos(th), 2 * std::sin(th)), v);
  }
  return d.build();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plabic graph toolkit"};
  app.require_subcommand(1);
  std::function<void()> run;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->require_subcommand(1);
  std::string perm_text, tri_text, word_text, colors;
  int wires = 0;
  auto* gen_bridge = gen->add_subcommand("bridge", "Bridge decomposition of a decorated permutation");
  gen_bridge->add_option("perm", perm_text, "e.g. \"3 4 5 1 2 6^\"")->required();
  gen_bridge->callback([&] { run = [&] { std::cout << dump_graph(bridge_graph(parse_permutation(perm_text))); }; });
  auto* gen_tri = gen->add_subcommand("triangulation", "Graph of a polygon triangulation");
  gen_tri->add_option("triangles", tri_text, "JSON list of triples, e.g. [[1,2,3],[1,3,4]]")->required();
  gen_tri->callback([&] {
    run = [&] {
      auto t = parse_triangles(tri_text);
      std::cout << dump_graph(from_triangulation(static_cast<int>(t.size()) + 2, t));
    };
  });
  auto* gen_word = gen->add_subcommand("word", "Graph of a wiring diagram");
  gen_word->add_option("n", wires, "number of wires")->required();
  gen_word->add_option("word", word_text, "e.g. \"s2 s3 s2\"")->required();
  gen_word->callback([&] {
    run = [&] {
      auto w = parse_word(word_text);
      for (auto& c : w) c.thick = true;
      std::cout << dump_graph(from_wiring(wires, w));
    };
  });
  auto* gen_dword = gen->add_subcommand("dword", "Graph of a double wiring diagram (S thick, s thin)");
  gen_dword->add_option("n", wires, "number of wires")->required();
  gen_dword->add_option("word", word_text, "e.g. \"S1 s2 S2\"")->required();
  gen_dword->callback([&] { run = [&] { std::cout << dump_graph(from_wiring(wires, parse_word(word_text))); }; });
  auto* gen_lol = gen->add_subcommand("lollipops", "One lollipop per boundary vertex");
  gen_lol->add_option("colors", colors, "e.g. bwb")->required();
  gen_lol->callback([&] { run = [&] { std::cout << dump_graph(lollipops(colors)); }; });

  // graph analysis
  std::string g1, g2;
  auto* cmd_info = app.add_subcommand("info", "Validity, normality, reducedness, permutation, face counts");
  cmd_info->add_option("graph", g1)->required();
  cmd_info->callback([&] {
    run = [&] {
      PlabicGraph g = parse_graph(slurp(g1));
      if (!validate(g).ok()) {
        json j;
        j["valid"] = false;
        j["problems"] = validate(g).problems;
        print(j);
        return;
      }
      print(info(g));
    };
  });

  auto* cmd_trips = app.add_subcommand("trips", "All trips");
  cmd_trips->add_option("graph", g1)->required();
  cmd_trips->callback([&] { run = [&] { print(trips_json(load(g1))); }; });

  std::string mode = "target";
  auto* cmd_labels = app.add_subcommand("labels", "Face labels of a reduced graph");
  cmd_labels->add_option("graph", g1)->required();
  cmd_labels->add_option("--mode", mode)->check(CLI::IsMember({"source", "target"}));
  cmd_labels->callback([&] {
    run = [&] {
      PlabicGraph g = load(g1);
      auto l = face_labels(g, mode == "source" ? LabelMode::Source : LabelMode::Target);
      json j;
      j["mode"] = mode;
      for (auto& [f, s] : l.labels) j["labels"][std::to_string(f)] = format_subset(s, g.b());
      j["collection"] = subsets_json(label_collection(l), g.b());
      print(j);
    };
  });

  std::string spec_text;
  bool list_moves = false;
  auto* cmd_move = app.add_subcommand("move", "Apply a move given as JSON, or list legal moves");
  cmd_move->add_option("graph", g1)->required();
  auto* spec_opt = cmd_move->add_option("--spec", spec_text, "e.g. {\"kind\":\"M1\",\"dart\":4}");
  cmd_move->add_flag("--list", list_moves)->excludes(spec_opt);
  cmd_move->callback([&] {
    run = [&] {
      PlabicGraph g = load(g1);
      if (list_moves) {
        json a = json::array();
        for (const auto& m : legal_moves(g)) a.push_back(to_json(m));
        print(a);
        return;
      }
      if (spec_text.empty()) throw CLI::ValidationError("--spec", "either --spec or --list is required");
      json j;
      try {
        j = json::parse(spec_text);
      } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
      }
      std::cout << dump_graph(apply_move(g, move_from_json(j)));
    };
  });

  long budget = 20000;
  auto* cmd_equiv = app.add_subcommand("equiv", "Decide move equivalence");
  cmd_equiv->add_option("g1", g1)->required();
  cmd_equiv->add_option("g2", g2)->required();
  cmd_equiv->add_option("--budget", budget, "states to explore")->check(CLI::PositiveNumber);
  cmd_equiv->callback([&] {
    run = [&] {
      SearchOptions opt;
      opt.budget = budget;
      auto r = move_equivalent(load(g1), load(g2), opt);
      json j;
      j["verdict"] = to_string(r.verdict);
      j["reason"] = r.reason;
      j["decided_by_permutation"] = r.decided_by_permutation;
      j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
      print(j);
    };
  });

  bool dot = false;
  auto* cmd_quiver = app.add_subcommand("quiver", "Quiver of a graph");
  cmd_quiver->add_option("graph", g1)->required();
  cmd_quiver->add_flag("--dot", dot);
  cmd_quiver->callback([&] {
    run = [&] {
      Quiver q = quiver_of(load(g1));
      if (dot)
        std::cout << quiver_to_dot(q);
      else
        print(quiver_json(q));
    };
  });

  // permutations
  auto* perm = app.add_subcommand("perm", "Permutation tools");
  perm->require_subcommand(1);
  std::string arg;
  int a = 0, b = 0;
  auto* p_aff = perm->add_subcommand("affinize", "Bounded affine permutation window of a decorated permutation");
  p_aff->add_option("perm", arg)->required();
  p_aff->callback([&] {
    run = [&] {
      auto f = affinize(parse_permutation(arg));
      std::string sep;
      for (long x : f.window) std::cout << sep << x, sep = " ";
      std::cout << "\n";
    };
  });
  auto* p_len = perm->add_subcommand("length", "Length of a bounded affine permutation window");
  p_len->add_option("window", arg)->required();
  p_len->callback([&] {
    run = [&] {
      BoundedAffinePermutation f{parse_longs(arg)};
      check_window(f);
      std::cout << length(f) << "\n";
    };
  });
  auto* p_neck = perm->add_subcommand("necklace", "Grassmann necklace of a decorated permutation");
  p_neck->add_option("perm", arg)->required();
  p_neck->callback([&] {
    run = [&] {
      auto p = parse_permutation(arg);
      auto n = necklace_from_perm(p);
      std::string sep;
      for (const auto& s : n.sets) std::cout << sep << format_subset(s, p.b()), sep = " ";
      std::cout << "\n";
    };
  });
  auto* p_pos = perm->add_subcommand("positroid", "Positroid of a decorated permutation");
  p_pos->add_option("perm", arg)->required();
  p_pos->callback([&] {
    run = [&] {
      auto p = parse_permutation(arg);
      for (const auto& s : positroid(necklace_from_perm(p))) std::cout << format_subset(s, p.b()) << "\n";
    };
  });
  auto* p_dab = perm->add_subcommand("dab", "Number of decorated permutations of b with a anti-excedances");
  p_dab->add_option("a", a)->required();
  p_dab->add_option("b", b)->required();
  p_dab->callback([&] { run = [&] { std::cout << count_Dab(a, b) << "\n"; }; });

  // weakly separated collections
  auto* ws = app.add_subcommand("ws", "Weakly separated collections");
  ws->require_subcommand(1);
  long limit = 200000;
  int threads = 1;
  auto* ws_enum = ws->add_subcommand("enumerate", "Face label collections of all reduced graphs for a permutation");
  ws_enum->add_option("perm", arg)->required();
  ws_enum->add_option("--limit", limit, "graphs explored before giving up")->check(CLI::PositiveNumber);
  ws_enum->add_option("--threads", threads)->check(CLI::PositiveNumber);
  ws_enum->callback([&] {
    run = [&] {
      auto p = parse_permutation(arg);
      EnumerateOptions opt;
      opt.limit = limit;
      opt.threads = threads;
      // one collection per line, subsets separated by spaces
      for (const auto& c : enumerate_ws(p, opt)) {
        std::string sep;
        for (const auto& s : c) std::cout << sep << format_subset(s, p.b()), sep = " ";
        std::cout << "\n";
      }
    };
  });

  // export
  auto* ex = app.add_subcommand("export", "Drawings");
  ex->require_subcommand(1);
  bool strands = false;
  auto* ex_dot = ex->add_subcommand("dot", "Graphviz");
  ex_dot->add_option("graph", g1)->required();
  ex_dot->callback([&] { run = [&] { std::cout << to_dot(load(g1)); }; });
  auto* ex_tikz = ex->add_subcommand("tikz", "TikZ picture");
  ex_tikz->add_option("graph", g1)->required();
  ex_tikz->add_flag("--strands", strands, "overlay the strands of a normal graph");
  ex_tikz->callback([&] {
    run = [&] {
      PlabicGraph g = load(g1);
      std::cout << (strands ? strands_to_tikz(triple_view(g)) : to_tikz(g));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    run();
  } catch (const Error& e) {
    json j;
    j["error"] = to_string(e.kind());
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    json j;
    j["error"] = "ParseError";
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 1;
  }
  return 0;
}
