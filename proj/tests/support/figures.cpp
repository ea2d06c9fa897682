#include "figures.hpp"

#include "plabic/io.hpp"

using plabic::Drawing;
using plabic::PlabicGraph;

namespace figures {

namespace {

// the five-boundary graph shared by plabic_a and plabic_b
void square_with_skirt(Drawing& d) {
  int b1 = d.black(0, 0), w2 = d.white(0, 30), b3 = d.black(30, 30), w4 = d.white(30, 0);
  int w5 = d.white(-10, -25), b6 = d.black(15, -40), w7 = d.white(40, -25);
  int o1 = d.boundary(1, -12, 48), o2 = d.boundary(2, 42, 48), o3 = d.boundary(3, 59, -46);
  int o4 = d.boundary(4, 15, -65), o5 = d.boundary(5, -29, -46);
  d.edge(b1, w4);
  d.edge(w2, b3);
  d.edge(b1, w2);
  d.edge(w4, b3);
  d.edge(b1, w5);
  d.edge(w4, w7);
  d.edge(b6, w5);
  d.edge(b6, w7);
  d.edge(b6, o4);
  d.edge(o1, w2);
  d.edge(o2, b3);
  d.edge(o5, w5);
  d.edge(o3, w7);
}

}  // namespace

PlabicGraph plabic_a() {
  Drawing d(5);
  square_with_skirt(d);
  return d.build();
}

PlabicGraph plabic_b() {
  Drawing d(6);
  square_with_skirt(d);
  int w = d.white(-30, -5);
  d.edge(d.boundary(6, -45, -5), w);
  return d.build();
}

PlabicGraph move_equiv_right() {
  Drawing d(6);
  int b1 = d.black(0, 30), w2 = d.white(30, 30), w3 = d.white(30, 0), w4 = d.white(0, -15);
  int b5 = d.black(15, -15), b6 = d.black(40, -25), w7 = d.white(15, -40);
  int o1 = d.boundary(1, -12, 48), o2 = d.boundary(2, 42, 48), o3 = d.boundary(3, 59, -46);
  int o4 = d.boundary(4, 15, -65), o5 = d.boundary(5, -29, -46), o6 = d.boundary(6, -45, -5);
  d.edge(b1, w2);
  d.edge(w3, w2);
  d.edge(w4, b1);
  d.edge(w4, b5);
  d.edge(b5, w7);
  d.edge(b5, w3);
  d.edge(w3, b6);
  d.edge(w7, b6);
  d.edge(w7, o4);
  d.edge(o1, b1);
  d.edge(o2, w2);
  d.edge(o5, w4);
  d.edge(o3, b6);
  int lw = d.white(-30, -5);
  d.edge(o6, lw);
  return d.build();
}

PlabicGraph plabic3() {
  Drawing d(6);
  int b1 = d.black(30, 30), w2 = d.white(50, 3), w3 = d.white(-10, 0), b4 = d.black(30, -25);
  int o1 = d.boundary(1, -12, 48), o2 = d.boundary(2, 42, 48), o3 = d.boundary(3, 74, 3);
  int o4 = d.boundary(4, 59, -46), o5 = d.boundary(5, 15, -65), o6 = d.boundary(6, -29, -46);
  d.edge(o2, b1);
  d.edge(o4, b4);
  d.edge(o5, b4);
  d.edge(o6, w3);
  d.edge(w3, o1);
  d.edge(o3, w2);
  d.edge(w3, b4);
  return d.build();
}

std::vector<PlabicGraph> bijreg() {
  std::vector<PlabicGraph> out;
  {
    Drawing d(3);
    d.edge(d.boundary(1, 0, 80), d.black(0, 50));
    d.edge(d.boundary(2, 80, 0), d.black(50, 0));
    d.edge(d.boundary(3, -59, -56), d.black(-35, -25));
    out.push_back(d.build());
  }
  {
    Drawing d(3);
    d.edge(d.boundary(1, 0, 80), d.black(0, 50));
    int m = d.black(11, -15);
    d.edge(d.boundary(3, -55, -60), m);
    d.edge(m, d.boundary(2, 80, 0));
    out.push_back(d.build());
  }
  {
    Drawing d(3);
    d.edge(d.boundary(2, 80, 0), d.black(50, 0));
    int m = d.black(-5, 10);
    d.edge(d.boundary(3, -48, -65), m);
    d.edge(m, d.boundary(1, 3, 80));
    out.push_back(d.build());
  }
  {
    Drawing d(3);
    d.edge(d.boundary(3, -52, -58), d.black(-32, -35));
    int m = d.black(20, 20);
    d.edge(d.boundary(1, 0, 80), m);
    d.edge(m, d.boundary(2, 80, 0));
    out.push_back(d.build());
  }
  {
    Drawing d(3);
    int w = d.white(0, 0);
    int m1 = d.black(0, 45), m2 = d.black(45, 0), m3 = d.black(-20, -35);
    d.edge(d.boundary(1, 0, 80), m1);
    d.edge(d.boundary(2, 80, 0), m2);
    d.edge(d.boundary(3, -40, -70), m3);
    d.edge(m1, w);
    d.edge(m2, w);
    d.edge(m3, w);
    out.push_back(d.build());
  }
  {
    Drawing d(3);
    int v = d.black(0, 0);
    d.edge(v, d.boundary(1, 0, 80));
    d.edge(v, d.boundary(2, 80, 0));
    d.edge(v, d.boundary(3, -52, -60));
    out.push_back(d.build());
  }
  return out;
}

PlabicGraph plabic2_right() {
  Drawing d(2);
  int w0 = d.white(10, 0), b60 = d.black(10, 60), b20 = d.black(10, 20), w40 = d.white(10, 40);
  int w3020 = d.white(30, 20), b3040 = d.black(30, 40), bl = d.black(-20, 30), br = d.black(70, 30);
  int w4060 = d.white(40, 60);
  d.edge(b20, w40);
  d.edge(w0, b20);
  d.edge(w40, b60);
  d.edge(w3020, b3040);
  d.edge_dirs(w3020, b3040, 1, 0, 1, 0);
  d.edge(w0, br, 70, 0);
  d.edge(w0, bl, -20, 0);
  d.edge(b60, bl, -20, 60);
  d.edge(b60, w4060);
  d.edge(br, w4060);
  d.edge(bl, d.boundary(1, -35, 30));
  d.edge(br, d.boundary(2, 85, 30));
  d.edge(b20, w3020);
  d.edge(w40, b3040);
  return d.build();
}

// three strips of four wires' worth of faces; ends at x = 0 and x = 100
PlabicGraph mutation_strip(int k) {
  Drawing d(4);
  int l1 = d.boundary(1, -10, 40), r2 = d.boundary(2, 110, 40), r3 = d.boundary(3, 110, 0), l4 = d.boundary(4, -10, 0);
  int b10_0 = d.black(10, 0), w30_0 = d.white(30, 0), b70_0 = d.black(70, 0), w90_0 = d.white(90, 0);
  int w10_20 = d.white(10, 20), b30_20 = d.black(30, 20), b10_40 = d.black(10, 40), w90_40 = d.white(90, 40);
  d.edge(l4, b10_0);
  d.edge(b10_0, w30_0);
  d.edge(b70_0, w90_0);
  d.edge(w90_0, r3);
  d.edge(w10_20, b30_20);
  d.edge(l1, b10_40);
  d.edge(w90_40, r2);
  d.edge(b10_0, w10_20);
  d.edge(w10_20, b10_40);
  d.edge(b30_20, w30_0);
  d.edge(w90_0, w90_40);
  if (k == 0 || k == 1) {
    bool swapped = k == 1;
    int m50 = d.vertex(swapped ? plabic::Color::White : plabic::Color::Black, 50, 20);
    int m70 = d.vertex(swapped ? plabic::Color::Black : plabic::Color::White, 70, 20);
    int t50 = d.vertex(swapped ? plabic::Color::Black : plabic::Color::White, 50, 40);
    int t70 = d.vertex(swapped ? plabic::Color::White : plabic::Color::Black, 70, 40);
    d.edge(w30_0, b70_0);
    d.edge(b30_20, m50);
    d.edge(m50, m70);
    d.edge(b10_40, t50);
    d.edge(t50, t70);
    d.edge(t70, w90_40);
    d.edge(m50, t50);
    d.edge(b70_0, m70);
    d.edge(m70, t70);
  } else {
    int b50_0 = d.black(50, 0), w50_20 = d.white(50, 20), b50_40 = d.black(50, 40), w70_40 = d.white(70, 40);
    d.edge(w30_0, b50_0);
    d.edge(b50_0, b70_0);
    d.edge(b30_20, w50_20);
    d.edge(b10_40, b50_40);
    d.edge(b50_40, w70_40);
    d.edge(w70_40, w90_40);
    d.edge(w50_20, b50_40);
    d.edge(w50_20, b50_0);
    d.edge(b70_0, w70_40);
  }
  return d.build();
}

PlabicGraph square_tricky() {
  Drawing d(3);
  int b10_20 = d.black(10, 20), w10_40 = d.white(10, 40), w30_20 = d.white(30, 20), b30_40 = d.black(30, 40);
  int bm = d.black(-10, 30), wm = d.white(-30, 30);
  int b_top = d.black(-50, 40), b_bot = d.black(-50, 20), w_left = d.white(-70, 30);
  d.edge(b10_20, w10_40);
  d.edge(w30_20, b30_40);
  d.edge_dirs(w30_20, b30_40, 1, 0, 1, 0);
  d.edge(b10_20, w30_20);
  d.edge(w10_40, b30_40);
  d.edge(w10_40, bm);
  d.edge(b10_20, bm);
  d.edge(bm, wm);
  d.edge(wm, b_top);
  d.edge(wm, b_bot);
  d.edge(b_top, w_left);
  d.edge(b_bot, w_left);
  d.edge(b_top, d.boundary(1, -50, 70));
  d.edge(b_bot, d.boundary(2, -50, -10));
  d.edge(w_left, d.boundary(3, -100, 30));
  return d.build();
}

// wires at y = 0, 20, 40; left ends 1, 2, 3 from the bottom, right ends 4, 5, 6 from the top
PlabicGraph braid_square(int k) {
  Drawing d(6);
  int l1 = d.boundary(1, -10, 0), l2 = d.boundary(2, -10, 20), l3 = d.boundary(3, -10, 40);
  int r4 = d.boundary(4, 70, 40), r5 = d.boundary(5, 70, 20), r6 = d.boundary(6, 70, 0);
  if (k == 0) {
    int w10 = d.white(10, 0), w30 = d.white(30, 20), w50 = d.white(50, 0);
    int b10 = d.black(10, 20), b30 = d.black(30, 40), b50 = d.black(50, 20);
    d.edge(l3, b30);
    d.edge(b30, r4);
    d.edge(l2, b10);
    d.edge(b10, w30);
    d.edge(w30, b50);
    d.edge(b50, r5);
    d.edge(l1, w10);
    d.edge(w10, w50);
    d.edge(w50, r6);
    d.edge(w10, b10);
    d.edge(w30, b30);
    d.edge(w50, b50);
  } else if (k == 1 || k == 2) {
    bool swapped = k == 2;
    auto c = [&](bool white) { return white != swapped ? plabic::Color::White : plabic::Color::Black; };
    int w0 = d.white(30, 0), top = d.black(30, 40);
    int s30 = d.vertex(c(true), 30, 30), s10 = d.vertex(c(true), 30, 10);
    int s20 = d.vertex(c(false), 20, 20), s40 = d.vertex(c(false), 40, 20);
    d.edge(l3, top);
    d.edge(top, r4);
    d.edge(l2, s20);
    d.edge(s40, r5);
    d.edge(l1, w0);
    d.edge(w0, r6);
    d.edge(w0, s10);
    d.edge(s30, top);
    d.edge(s30, s40);
    d.edge(s30, s20);
    d.edge(s10, s40);
    d.edge(s10, s20);
  } else {
    int b10 = d.black(10, 40), w10 = d.white(10, 20), w30 = d.white(30, 0);
    int b30 = d.black(30, 20), w50 = d.white(50, 20), b50 = d.black(50, 40);
    d.edge(l3, b10);
    d.edge(b10, b50);
    d.edge(b50, r4);
    d.edge(l2, w10);
    d.edge(w10, b30);
    d.edge(b30, w50);
    d.edge(w50, r5);
    d.edge(l1, w30);
    d.edge(w30, r6);
    d.edge(w10, b10);
    d.edge(w30, b30);
    d.edge(w50, b50);
  }
  return d.build();
}

std::vector<plabic::Triangle> octagon_triangles() {
  return {{1, 2, 3}, {1, 3, 8}, {3, 5, 8}, {3, 4, 5}, {5, 7, 8}, {5, 6, 7}};
}

PlabicGraph octagon_graph() {
  Drawing d(8);
  const double px[] = {0, 20, 40, 60, 60, 40, 20, 0, 0};
  const double py[] = {0, 60, 60, 40, 20, 0, 0, 20, 40};
  int w[9];
  for (int p = 1; p <= 8; ++p) w[p] = d.white(px[p], py[p]);
  for (int p = 1; p <= 8; ++p) d.edge(w[p], d.boundary(p, 30 + 2 * (px[p] - 30), 30 + 2 * (py[p] - 30)));
  auto tri = [&](double x, double y, int a, int b, int c) {
    int v = d.black(x, y);
    d.edge(v, w[a]);
    d.edge(v, w[b]);
    d.edge(v, w[c]);
  };
  tri(32, 28, 3, 5, 8);
  tri(12, 21, 5, 7, 8);
  tri(22, 5, 5, 6, 7);
  tri(55, 21, 3, 4, 5);
  tri(20, 48, 1, 3, 8);
  tri(38, 55, 1, 2, 3);
  return d.build();
}

// G(D) for s2 s3 s2 s1 s2 s3 on four wires, as drawn
PlabicGraph wiring_d1() {
  Drawing d(8);
  int w20_20 = d.white(20, 20), w60_20 = d.white(60, 20), b80_20 = d.black(80, 20), w100_20 = d.white(100, 20);
  int b20_40 = d.black(20, 40), w40_40 = d.white(40, 40), b60_40 = d.black(60, 40), b100_40 = d.black(100, 40);
  int w120_40 = d.white(120, 40), b40_60 = d.black(40, 60), b120_60 = d.black(120, 60), w80_0 = d.white(80, 0);
  d.edge(d.boundary(1, -10, 0), w80_0);
  d.edge(w80_0, d.boundary(8, 150, 0));
  d.edge(d.boundary(2, -10, 20), w20_20);
  d.edge(w20_20, w60_20);
  d.edge(w60_20, b80_20);
  d.edge(b80_20, w100_20);
  d.edge(w100_20, d.boundary(7, 150, 20));
  d.edge(d.boundary(3, -10, 40), b20_40);
  d.edge(b20_40, w40_40);
  d.edge(w40_40, b60_40);
  d.edge(b60_40, b100_40);
  d.edge(b100_40, w120_40);
  d.edge(w120_40, d.boundary(6, 150, 40));
  d.edge(d.boundary(4, -10, 60), b40_60);
  d.edge(b40_60, b120_60);
  d.edge(b120_60, d.boundary(5, 150, 60));
  d.edge(w20_20, b20_40);
  d.edge(w80_0, b80_20);
  d.edge(w60_20, b60_40);
  d.edge(w100_20, b100_40);
  d.edge(w40_40, b40_60);
  d.edge(w120_40, b120_60);
  return d.build();
}

// the tree hangs off the black vertex v, which also meets boundary 1, 2, 3
PlabicGraph collapsible_tree() {
  Drawing d(3);
  int v = d.black(10, 10);
  int w1 = d.white(10, 20), w0 = d.white(0, 20), b2 = d.black(20, 20), b3 = d.black(10, 30);
  int b4 = d.black(30, 20), w5 = d.white(20, 30), b6 = d.black(20, 40), w7 = d.white(40, 20);
  d.edge(v, d.boundary(1, -10, 10));
  d.edge(v, d.boundary(2, 30, 10));
  d.edge(v, d.boundary(3, 10, -10));
  d.edge(v, w1);
  d.edge(w1, w0);
  d.edge(w1, b2);
  d.edge(w1, b3);
  d.edge(b2, b4);
  d.edge(b2, w5);
  d.edge(b4, w7);
  d.edge(w5, b6);
  return d.build();
}

PlabicGraph fork_not_lollipop() {
  Drawing d(1);
  int w = d.white(20, 10);
  d.edge(d.boundary(1, 20, -5), w);
  d.edge(w, d.black(10, 10));
  d.edge(w, d.black(30, 10));
  return d.build();
}

PlabicGraph leaf_at_trivalent(bool black_leaf) {
  Drawing d(2);
  plabic::Color lc = black_leaf ? plabic::Color::Black : plabic::Color::White;
  int v = d.vertex(plabic::opposite(lc), 15, 15);
  d.edge(d.vertex(lc, 1, 15), v);
  d.edge(v, d.boundary(1, 35, 30));
  d.edge(v, d.boundary(2, 35, 0));
  return d.build();
}

PlabicGraph hollow_digon(plabic::Color left, plabic::Color right) {
  Drawing d(2);
  int u = d.vertex(left, 15, 15), v = d.vertex(right, 30, 15);
  d.edge(d.boundary(1, -5, 15), u);
  d.edge(v, d.boundary(2, 50, 15));
  d.edge(u, v, 22, 30);
  d.edge(u, v, 22, 0);
  return d.build();
}

PlabicGraph normal_plabic() {
  Drawing d(5);
  int o1 = d.boundary(1, -95, 145), o2 = d.boundary(2, 95, 145), o3 = d.boundary(3, 128, -118);
  int o4 = d.boundary(4, 0, -176), o5 = d.boundary(5, -128, -118);
  int b3 = d.black(-60, 115), w4 = d.white(-25, 80), b5 = d.black(25, 80), b6 = d.black(-25, 30);
  int w7 = d.white(25, 30), b8 = d.black(37.5, 1.5), w9 = d.white(-50, -25), w10 = d.white(50, -25);
  int b11 = d.black(-88, -70), b12 = d.black(0, -70), b13 = d.black(88, -70);
  d.edge(o1, b3);
  d.edge(b3, w4);
  d.edge(o2, b5);
  d.edge(w4, b5);
  d.edge(w4, b6);
  d.edge(b5, w7);
  d.edge(b6, w7);
  d.edge(b6, w9);
  d.edge(w7, b8);
  d.edge(b8, w10);
  d.edge(w9, b11);
  d.edge(b11, o5);
  d.edge(w10, b13);
  d.edge(b13, o3);
  d.edge(w9, b12);
  d.edge(w10, b12);
  d.edge(b12, o4);
  return d.build();
}

PlabicGraph make_bip_left() {
  Drawing d(5);
  int w20_20 = d.white(20, 20), b50_20 = d.black(50, 20), w80_20 = d.white(80, 20);
  int b20_50 = d.black(20, 50), w50_50 = d.white(50, 50), b80_50 = d.black(80, 50);
  d.edge(d.boundary(5, 0, 20), w20_20);
  d.edge(d.boundary(1, 0, 50), b20_50);
  d.edge(d.boundary(3, 100, 20), w80_20);
  d.edge(d.boundary(2, 100, 50), b80_50);
  d.edge(d.boundary(4, 50, 5), b50_20);
  d.edge(w20_20, b50_20);
  d.edge(b20_50, w50_50);
  d.edge(b50_20, w80_20);
  d.edge(w50_50, b80_50);
  d.edge(w20_20, b20_50);
  d.edge(w80_20, b80_50);
  return d.build();
}

PlabicGraph make_bip_right() {
  Drawing d(5);
  int b0 = d.black(0, 20), b100 = d.black(100, 20), w20 = d.white(20, 20), b50 = d.black(50, 20);
  int w80 = d.white(80, 20), top = d.black(50, 50);
  d.edge(d.boundary(5, -20, 20), b0);
  d.edge(b0, w20);
  d.edge(d.boundary(1, -20, 50), top);
  d.edge(d.boundary(3, 120, 20), b100);
  d.edge(b100, w80);
  d.edge(d.boundary(2, 120, 50), top);
  d.edge(w20, b50);
  d.edge(b50, w80);
  d.edge(d.boundary(4, 50, 5), b50);
  d.edge(w20, top);
  d.edge(w80, top);
  return d.build();
}

// a hexagon whose blacks point inward (to a white hub) and whites outward
PlabicGraph roundtrip_hexagon() {
  Drawing d(3);
  int b20_0 = d.black(20, 0), w50_0 = d.white(50, 0), w0 = d.white(0, 20);
  int b20_40 = d.black(20, 40), w50_40 = d.white(50, 40), b70 = d.black(70, 20);
  int hub = d.white(35, 20);
  d.edge(b20_0, w50_0);
  d.edge(b20_40, w50_40);
  d.edge(w0, b20_0);
  d.edge(w0, b20_40);
  d.edge(b70, w50_0);
  d.edge(b70, w50_40);
  d.edge(hub, b20_0);
  d.edge(hub, b20_40);
  d.edge(hub, b70);
  d.edge(w0, d.boundary(1, -20, 20));
  d.edge(w50_40, d.boundary(2, 70, 60));
  d.edge(w50_0, d.boundary(3, 70, -20));
  return d.build();
}

PlabicGraph double_crossing() {
  Drawing d(4);
  int w00 = d.white(0, 0), b030 = d.black(0, 30), b300 = d.black(30, 0);
  int w3030 = d.white(30, 30), w600 = d.white(60, 0), b6030 = d.black(60, 30);
  d.edge(w00, b300);
  d.edge(b300, w600);
  d.edge(b030, w3030);
  d.edge(w3030, b6030);
  d.edge(w00, b030);
  d.edge(b300, w3030);
  d.edge(w600, b6030);
  d.edge(b030, d.boundary(1, -17, 47));
  d.edge(b6030, d.boundary(2, 77, 47));
  d.edge(w600, d.boundary(3, 77, -17));
  d.edge(w00, d.boundary(4, -17, -17));
  return d.build();
}

namespace {

// boundary points for the urban renewal pictures, clockwise from the upper left
void urban_boundary(Drawing& d, bool bivalent, int out[8]) {
  out[1] = d.boundary(1, -25, 45);
  out[2] = d.boundary(2, -20, 55);
  out[3] = d.boundary(3, -10, 60);
  out[4] = d.boundary(4, 50, 50);
  if (bivalent) {
    out[5] = d.boundary(5, -20, -20);
  } else {
    out[5] = d.boundary(5, 55, -5);
    out[6] = d.boundary(6, 45, -20);
    out[7] = d.boundary(7, -20, -20);
  }
}

}  // namespace

PlabicGraph urban_left(bool bivalent) {
  Drawing d(bivalent ? 5 : 7);
  int o[8];
  urban_boundary(d, bivalent, o);
  int w00 = d.white(0, 0), b030 = d.black(0, 30), w3030 = d.white(30, 30), b300 = d.black(30, 0);
  int bll = d.black(-5, -5), bur = d.black(35, 35);
  d.edge(w00, b030);
  d.edge(b030, w3030);
  d.edge(w3030, b300);
  d.edge(b300, w00);
  d.edge(w00, bll);
  d.edge(bll, o[bivalent ? 5 : 7]);
  d.edge(w3030, bur);
  d.edge(bur, o[4]);
  for (int i = 1; i <= 3; ++i) d.edge(b030, o[i]);
  if (!bivalent) {
    d.edge(b300, o[5]);
    d.edge(b300, o[6]);
  }
  return d.build();
}

PlabicGraph urban_right(bool bivalent) {
  Drawing d(bivalent ? 5 : 7);
  int o[8];
  urban_boundary(d, bivalent, o);
  int b88 = d.black(8, 8), w822 = d.white(8, 22), b2222 = d.black(22, 22), w228 = d.white(22, 8);
  int bul = d.black(-1.3, 31.3), blr = d.black(31.3, -1.3);
  d.edge(b88, w822);
  d.edge(w822, b2222);
  d.edge(b2222, w228);
  d.edge(w228, b88);
  d.edge(b88, o[bivalent ? 5 : 7]);
  d.edge(b2222, o[4]);
  d.edge(w822, bul);
  d.edge(w228, blr);
  for (int i = 1; i <= 3; ++i) d.edge(bul, o[i]);
  if (!bivalent) {
    d.edge(blr, o[5]);
    d.edge(blr, o[6]);
  }
  return d.build();
}

std::vector<Named> all() {
  std::vector<Named> v = {
      {"plabic_a", plabic_a()},
      {"plabic_b", plabic_b()},
      {"move_equiv_right", move_equiv_right()},
      {"plabic3", plabic3()},
      {"plabic2_right", plabic2_right()},
      {"square_tricky", square_tricky()},
      {"octagon_graph", octagon_graph()},
      {"wiring_d1", wiring_d1()},
      {"collapsible_tree", collapsible_tree()},
      {"fork_not_lollipop", fork_not_lollipop()},
      {"leaf_black_at_white", leaf_at_trivalent(true)},
      {"leaf_white_at_black", leaf_at_trivalent(false)},
      {"hollow_digon_ww", hollow_digon(plabic::Color::White, plabic::Color::White)},
      {"hollow_digon_bw", hollow_digon(plabic::Color::Black, plabic::Color::White)},
      {"hollow_digon_bb", hollow_digon(plabic::Color::Black, plabic::Color::Black)},
      {"normal_plabic", normal_plabic()},
      {"make_bip_left", make_bip_left()},
      {"make_bip_right", make_bip_right()},
      {"roundtrip_hexagon", roundtrip_hexagon()},
      {"double_crossing", double_crossing()},
      {"urban_left", urban_left(false)},
      {"urban_right", urban_right(false)},
      {"urban_left_bivalent", urban_left(true)},
      {"urban_right_bivalent", urban_right(true)},
  };
  auto b = bijreg();
  for (size_t k = 0; k < b.size(); ++k) v.push_back({"bijreg_" + std::to_string(k + 1), b[k]});
  for (int k = 0; k < 3; ++k) v.push_back({"mutation_strip_" + std::to_string(k + 1), mutation_strip(k)});
  for (int k = 0; k < 4; ++k) v.push_back({"braid_square_" + std::to_string(k + 1), braid_square(k)});
  return v;
}

}  // namespace figures
