#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plabic/graph.hpp"

namespace plabic {

nlohmann::json to_json(const PlabicGraph& g);
// Builds the graph without validating it; pair with validate().
PlabicGraph from_json(const nlohmann::json& j);
std::string dump_graph(const PlabicGraph& g);
PlabicGraph parse_graph(const std::string& text);

std::string to_dot(const PlabicGraph& g);
std::string to_tikz(const PlabicGraph& g);
// Display positions: boundary on a circle of radius 3, interior relaxed.
std::map<int, std::pair<double, double>> tutte_layout(const PlabicGraph& g);

// Builds a rotation system from a straight-line (or quadratic Bezier)
// drawing: neighbours are ordered clockwise by the angle of the edge as it
// leaves each vertex. Coordinates use y pointing up, as in the figures.
class Drawing {
 public:
  explicit Drawing(int b) : b_(b) {}
  int boundary(int label, double x, double y);
  int vertex(Color c, double x, double y);
  int black(double x, double y) { return vertex(Color::Black, x, y); }
  int white(double x, double y) { return vertex(Color::White, x, y); }
  void edge(int u, int v);
  // curved edge: the tangent at u points at (cx, cy), the tangent at v comes from (cx, cy)
  void edge(int u, int v, double cx, double cy);
  // explicit leaving directions at both ends
  void edge_dirs(int u, int v, double ux, double uy, double vx, double vy);
  PlabicGraph build() const;

 private:
  struct Pt {
    double x, y;
  };
  struct E {
    int u, v;
    double ux, uy, vx, vy;
  };
  Pt pos(int v) const;
  int b_;
  std::vector<std::pair<int, Pt>> bpos_;
  std::vector<std::pair<Color, Pt>> ipos_;
  std::vector<E> edges_;
};

}  // namespace plabic
