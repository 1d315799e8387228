#include "trigroup/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "trigroup/constructions.hpp"
#include "trigroup/json_io.hpp"
#include "trigroup/triangle_group.hpp"

namespace trigroup {

namespace {

const std::map<std::string, Figure> kFigures{
    {"fig1_desargues", Figure::Fig1Desargues},   {"fig2_pascal", Figure::Fig2Pascal},
    {"fig3_dual", Figure::Fig3Dual},             {"fig4_axis_infinity", Figure::Fig4AxisInfinity},
    {"fig5_boxplus_zero", Figure::Fig5BoxplusZero}, {"fig6_degenerate", Figure::Fig6Degenerate},
    {"fig7_a_boxplus_a", Figure::Fig7ABoxplusA},
};

/// Exact drawing list; rasterized only at the very end.
struct Sketch {
  std::string title;
  struct Pt {
    HomPoint p;
    std::string label;
  };
  struct Seg {
    HomPoint a, b;
    std::string cls;
  };
  struct Ln {
    HomLine l;
    std::string cls;
  };
  struct Arrow {
    Rational dx, dy;
    std::string label;
  };
  std::vector<Pt> points;
  std::vector<Seg> segments;
  std::vector<Ln> lines;
  std::vector<Arrow> arrows;
  std::vector<std::vector<HomPoint>> polylines;

  void point(const HomPoint& p, const std::string& label) {
    if (p.is_infinite()) {
      arrows.push_back({p[0], p[1], label});
    } else {
      points.push_back({p, label});
    }
  }
  void seg(const HomPoint& a, const HomPoint& b, const std::string& cls) {
    segments.push_back({a, b, cls});
  }
  void triangle(const std::array<HomPoint, 3>& v, const std::string& cls) {
    for (int i = 0; i < 3; ++i) seg(v[i], v[(i + 1) % 3], cls);
  }
  void line(const HomLine& l, const std::string& cls) { lines.push_back({l, cls}); }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* stroke_of(const std::string& cls) {
  if (cls == "a") return "#1f77b4";
  if (cls == "b") return "#d62728";
  if (cls == "c") return "#2ca02c";
  if (cls == "axis") return "#9467bd";
  if (cls == "conic") return "#ff7f0e";
  return "#999999";
}

bool dashed(const std::string& cls) { return cls == "guide" || cls == "axis"; }

std::string render(const Sketch& sk, const std::string& warning) {
  // Exact bounding box over the finite content.
  bool have = false;
  Rational xmin(0), xmax(0), ymin(0), ymax(0);
  const auto grow = [&](const HomPoint& p) {
    if (p.is_infinite()) return;
    const auto [x, y] = p.to_affine();
    if (!have) {
      xmin = xmax = x;
      ymin = ymax = y;
      have = true;
      return;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& p : sk.points) grow(p.p);
  for (const auto& s : sk.segments) {
    grow(s.a);
    grow(s.b);
  }
  for (const auto& pl : sk.polylines)
    for (const HomPoint& p : pl) grow(p);
  if (!have) {
    xmin = ymin = Rational(-1);
    xmax = ymax = Rational(1);
  }
  if (xmin == xmax) xmax = xmin + 1;
  if (ymin == ymax) ymax = ymin + 1;
  const Rational mx = (xmax - xmin) / 10, my = (ymax - ymin) / 10;
  xmin -= mx;
  xmax += mx;
  ymin -= my;
  ymax += my;

  const double W = 840, H = 620, pad = 20;
  const double bx = xmin.to_double(), by = ymin.to_double();
  const double bw = (xmax - xmin).to_double(), bh = (ymax - ymin).to_double();
  const double scale = std::min((W - 2 * pad) / bw, (H - 2 * pad) / bh);
  const double ox = (W - scale * bw) / 2, oy = (H - scale * bh) / 2;
  const auto sx = [&](double x) { return ox + scale * (x - bx); };
  const auto sy = [&](double y) { return H - (oy + scale * (y - by)); };
  const auto px = [&](const HomPoint& p) {
    const auto [x, y] = p.to_affine();
    return std::pair<double, double>{sx(x.to_double()), sy(y.to_double())};
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"620\" "
        "viewBox=\"0 0 840 620\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"840\" height=\"620\" fill=\"#ffffff\"/>\n"
     << "<text x=\"12\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << sk.title
     << "</text>\n";
  if (!warning.empty())
    os << "<text x=\"12\" y=\"40\" font-family=\"sans-serif\" font-size=\"13\" "
          "fill=\"#c00000\">warning: "
       << warning << "</text>\n";

  // Full lines, clipped exactly against the rational viewport box.
  for (const auto& ln : sk.lines) {
    const std::array<HomLine, 4> edges{HomLine(1, 0, -xmin), HomLine(1, 0, -xmax),
                                       HomLine(0, 1, -ymin), HomLine(0, 1, -ymax)};
    std::vector<HomPoint> hits;
    for (const HomLine& e : edges) {
      if (e == ln.l) continue;
      const HomPoint m = meet(e, ln.l);
      if (m.is_infinite()) continue;
      const auto [x, y] = m.to_affine();
      if (x < xmin || x > xmax || y < ymin || y > ymax) continue;
      if (std::find(hits.begin(), hits.end(), m) == hits.end()) hits.push_back(m);
    }
    if (hits.size() < 2) continue;
    std::sort(hits.begin(), hits.end(), [](const HomPoint& a, const HomPoint& b) {
      const auto [ax, ay] = a.to_affine();
      const auto [bx2, by2] = b.to_affine();
      return ax != bx2 ? ax < bx2 : ay < by2;
    });
    const auto [x1, y1] = px(hits.front());
    const auto [x2, y2] = px(hits.back());
    os << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
       << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke_of(ln.cls)
       << "\" stroke-width=\"1\"" << (dashed(ln.cls) ? " stroke-dasharray=\"6 4\"" : "")
       << "/>\n";
  }

  for (const auto& pl : sk.polylines) {
    os << "<polyline fill=\"none\" stroke=\"" << stroke_of("conic") << "\" stroke-width=\"1.5\" points=\"";
    for (const HomPoint& p : pl) {
      const auto [x, y] = px(p);
      os << fmt(x) << "," << fmt(y) << " ";
    }
    os << "\"/>\n";
  }

  for (const auto& s : sk.segments) {
    const auto [x1, y1] = px(s.a);
    const auto [x2, y2] = px(s.b);
    os << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
       << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke_of(s.cls) << "\" stroke-width=\"1.5\""
       << (dashed(s.cls) ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  }

  for (const auto& p : sk.points) {
    const auto [x, y] = px(p.p);
    os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\"#000000\"/>\n"
       << "<text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << p.label << "</text>\n";
  }

  // Points at infinity: labeled arrows at the canvas boundary.
  for (const auto& a : sk.arrows) {
    double dx = a.dx.to_double(), dy = -a.dy.to_double();
    const double n = std::hypot(dx, dy);
    if (n == 0) continue;
    dx /= n;
    dy /= n;
    const double cx = W / 2, cy = H / 2;
    const double tmax =
        std::min(dx != 0 ? ((dx > 0 ? W - 30 - cx : 30 - cx) / dx) : 1e18,
                 dy != 0 ? ((dy > 0 ? H - 30 - cy : 30 - cy) / dy) : 1e18);
    const double tipx = cx + dx * tmax, tipy = cy + dy * tmax;
    const double tailx = tipx - 24 * dx, taily = tipy - 24 * dy;
    os << "<line x1=\"" << fmt(tailx) << "\" y1=\"" << fmt(taily) << "\" x2=\"" << fmt(tipx)
       << "\" y2=\"" << fmt(tipy) << "\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n"
       << "<polygon points=\"" << fmt(tipx) << "," << fmt(tipy) << " "
       << fmt(tipx - 8 * dx + 3 * dy) << "," << fmt(tipy - 8 * dy - 3 * dx) << " "
       << fmt(tipx - 8 * dx - 3 * dy) << "," << fmt(tipy - 8 * dy + 3 * dx)
       << "\" fill=\"#555555\"/>\n"
       << "<text x=\"" << fmt(tailx - 10 * dx + 6) << "\" y=\"" << fmt(taily - 10 * dy - 6)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << a.label << "</text>\n";
  }

  os << "</svg>\n";
  return os.str();
}

void require(bool ok, const char* what) {
  if (!ok) throw GeometryError(std::string("figure invariant failed: ") + what);
}

std::string n1(int i) { return std::to_string(i + 1); }

CentralScene demo_central() { return random_central_scene(2); }

Sketch sketch_central(const CentralScene& scene, const char* title) {
  Sketch sk;
  sk.title = title;
  const CentralConstruction c = main_construction_central(scene);
  for (int i = 0; i < 3; ++i) {
    require(incident(c.C[i], scene.l[i]), "C_i on l_i");
    sk.line(scene.l[i], "guide");
  }
  require(collinear(c.S[0], c.S[1], c.S[2]), "S_k collinear");
  sk.line(join(c.S[0], c.S[1]), "axis");
  sk.point(scene.S, "S");
  for (int i = 0; i < 3; ++i) {
    sk.point(scene.A[i], "A" + n1(i));
    sk.point(scene.B[i], "B" + n1(i));
    sk.point(c.C[i], "C" + n1(i));
    sk.point(c.S[i], "S" + n1(i));
  }
  sk.triangle(scene.A, "a");
  sk.triangle(scene.B, "b");
  sk.triangle({c.C[0], c.C[1], c.C[2]}, "c");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) sk.point(c.P(i, j), "P" + n1(i) + n1(j));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) sk.line(join(c.P(i, j), c.P(j, i)), "guide");
  return sk;
}

Sketch sketch_pascal(const ConicHexagon& hex) {
  Sketch sk;
  sk.title = "Generalized Pascal: the lines QijQji share a point";
  const HomPoint center = generalized_pascal_center(hex);
  const auto Q = cross_meets(hex.A, hex.B);
  const std::array<HomPoint, 6> order{hex.A[0], hex.B[2], hex.A[1],
                                      hex.B[0], hex.A[2], hex.B[1]};
  const std::array<std::string, 6> names{"A1", "B3", "A2", "B1", "A3", "B2"};
  for (int i = 0; i < 6; ++i) {
    sk.point(order[i], names[i]);
    sk.seg(order[i], order[(i + 1) % 6], "a");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) sk.point(*Q[i][j], "Q" + n1(i) + n1(j));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const HomLine l = join(*Q[i][j], *Q[j][i]);
      require(incident(center, l), "center on QijQji");
      sk.line(l, "guide");
    }
  sk.point(center, "Z");
  // Trace of the conic through the hexagon, sampled exactly.
  std::vector<HomPoint> trace;
  const HomPoint base = hex.A[0];
  for (int n = -60; n <= 60; ++n) {
    try {
      const HomPoint p = conic_point(hex.conic, base, Rational(n, 3));
      if (!p.is_infinite()) trace.push_back(p);
    } catch (const TangentParameter&) {
    }
  }
  sk.polylines.push_back(std::move(trace));
  return sk;
}

Sketch sketch_axis(const AxisScene& scene) {
  Sketch sk;
  sk.title = "Axis model: C is perspective to A and B from s";
  const auto C = main_construction_axis(scene);
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    require(incident(scene.L[k], join(C[i], C[j])), "side of C through L_k");
  }
  sk.line(scene.s, "axis");
  for (int k = 0; k < 3; ++k) {
    sk.point(scene.L[k], "L" + n1(k));
    sk.point(scene.A[k], "A" + n1(k));
    sk.point(scene.B[k], "B" + n1(k));
    sk.point(C[k], "C" + n1(k));
  }
  sk.triangle(scene.A, "a");
  sk.triangle(scene.B, "b");
  sk.triangle(C, "c");
  return sk;
}

struct ElementScene {
  ReferenceFrame frame;
  TriangleElement x, y;
};

ElementScene element_scene(const std::optional<Json>& scene, const Triple& dx, const Triple& dy) {
  if (!scene) {
    return ElementScene{ReferenceFrame::standard(), TriangleElement(dx), TriangleElement(dy)};
  }
  const Json& j = *scene;
  ReferenceFrame frame =
      j.contains("frame") ? frame_from_json(j.at("frame")) : ReferenceFrame::standard();
  TriangleElement x = j.contains("x") ? element_from_json(j.at("x")) : TriangleElement(dx);
  TriangleElement y = j.contains("y") ? element_from_json(j.at("y")) : TriangleElement(dy);
  return ElementScene{frame, x, y};
}

void label_triangle(Sketch& sk, const GeometricTriangle& t, const char* stem,
                    const std::string& cls) {
  for (int i = 0; i < 3; ++i) sk.point(t.v[i], stem + n1(i));
  sk.triangle(t.v, cls);
}

Sketch sketch_axis_infinity(const ElementScene& es) {
  Sketch sk;
  sk.title = "Axis at infinity: corresponding sides of A, B and A [#] B are parallel";
  const GeometricTriangle A = triangle_from_bary(es.x, es.frame);
  const GeometricTriangle B = triangle_from_bary(es.y, es.frame);
  const TriangleElement c = presum_geometric(es.x, es.y, es.frame);
  require(c == presum_coords(es.x, es.y), "pre-sum coordinates");
  const GeometricTriangle C = triangle_from_bary(c, es.frame);
  label_triangle(sk, A, "A", "a");
  label_triangle(sk, B, "B", "b");
  label_triangle(sk, C, "C", "c");
  for (int k = 0; k < 3; ++k) sk.point(es.frame.side_direction_point(k), "L" + n1(k));
  return sk;
}

Sketch sketch_boxplus_zero(const ElementScene& es) {
  Sketch sk;
  sk.title = "Pre-sum with the zero element: the reflection in the mass center";
  const GeometricTriangle A = triangle_from_bary(es.x, es.frame);
  const TriangleElement c = presum_geometric(es.x, TriangleElement::zero(), es.frame);
  require(c == reflect_mass_center(es.x), "A [#] 0 is the reflection of A");
  const GeometricTriangle C = triangle_from_bary(c, es.frame);
  require(C == reflect_triangle(A), "vertexwise reflection");
  label_triangle(sk, A, "A", "a");
  label_triangle(sk, C, "C", "c");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) sk.seg(A.v[i], C.v[j], "guide");
  const auto dirs = pseudo_vertices(TriangleElement::zero());
  for (int k = 0; k < 3; ++k) sk.point(es.frame.direction_point(dirs[k]), "M" + n1(k));
  return sk;
}

Sketch sketch_degenerate(const ElementScene& es) {
  Sketch sk;
  sk.title = "Coinciding-side pre-sum: recovered vertices on the shared lines";
  const GeometricTriangle A = triangle_from_bary(es.x, es.frame);
  const GeometricTriangle B = triangle_from_bary(es.y, es.frame);
  const TriangleElement c = presum_geometric(es.x, es.y, es.frame);
  require(c == presum_coords(es.x, es.y), "degenerate pre-sum coordinates");
  const GeometricTriangle C = triangle_from_bary(c, es.frame);
  label_triangle(sk, A, "A", "a");
  label_triangle(sk, B, "B", "b");
  label_triangle(sk, C, "C", "c");
  for (int k = 0; k < 3; ++k) sk.point(es.frame.side_direction_point(k), "S" + n1(k));
  return sk;
}

Sketch sketch_half(const ElementScene& es) {
  Sketch sk;
  sk.title =
      "Central model at the centroid: X_i on the sides, Y_i harmonic complements of S";
  const HalfConstruction hc = build_half_construction(es.x, es.frame);
  for (int i = 0; i < 3; ++i)
    require(cross_ratio(hc.S, hc.Y[i], hc.A.v[i], hc.X[i]) == Rational(-1),
            "harmonic quadruple");
  label_triangle(sk, hc.A, "A", "a");
  sk.point(hc.S, "S");
  for (int i = 0; i < 3; ++i) {
    sk.point(hc.X[i], "X" + n1(i));
    sk.point(hc.Y[i], "Y" + n1(i));
    sk.seg(hc.Y[i], hc.S, "guide");
  }
  sk.triangle(hc.Y, "c");
  return sk;
}

}  // namespace

std::string figure_name(Figure f) {
  for (const auto& [name, fig] : kFigures)
    if (fig == f) return name;
  return "unknown";
}

std::optional<Figure> figure_from_name(const std::string& name) {
  const auto it = kFigures.find(name);
  if (it == kFigures.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fig] : kFigures) v.push_back(name);
    return v;
  }();
  return names;
}

FigureResult emit_figure(Figure fig, const std::optional<nlohmann::json>& scene) {
  const Rational h(1, 2), q(1, 4);
  try {
    Sketch sk;
    switch (fig) {
      case Figure::Fig1Desargues: {
        const CentralScene s = scene ? central_scene_from_json(*scene) : demo_central();
        sk = sketch_central(s, "Desargues and its generalization: C is perspective to A and B from S");
        break;
      }
      case Figure::Fig2Pascal: {
        const ConicHexagon hx = scene ? hexagon_from_json(*scene) : random_conic_hexagon(19);
        sk = sketch_pascal(hx);
        break;
      }
      case Figure::Fig3Dual: {
        const AxisScene s = scene ? axis_scene_from_json(*scene) : random_axis_scene(6);
        sk = sketch_axis(s);
        break;
      }
      case Figure::Fig4AxisInfinity:
        sk = sketch_axis_infinity(element_scene(scene, Triple{Rational(1), h, h},
                                                Triple{q, Rational(1), h}));
        break;
      case Figure::Fig5BoxplusZero:
        sk = sketch_boxplus_zero(element_scene(scene, Triple{Rational(1), h, q},
                                               Triple{Rational(0), Rational(0), Rational(0)}));
        break;
      case Figure::Fig6Degenerate: {
        // Default pair shares the vertex B1 == A1 (two sides on each of two
        // shared lines).
        const TriangleElement x(Rational(1), h, q);
        const Rational a = x.coordinate_sum();
        const Rational b(1);
        Triple beta;
        const Triple center{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
        for (int i = 0; i < 3; ++i) {
          const Rational e1 = (i == 0) ? Rational(1) : Rational(0);
          beta[i] = (b / a) * (x.delta()[i] - center[i] + e1) + center[i] - e1;
        }
        sk = sketch_degenerate(element_scene(scene, x.delta(), beta));
        break;
      }
      case Figure::Fig7ABoxplusA:
        sk = sketch_half(element_scene(scene, Triple{Rational(1), h, h},
                                       Triple{Rational(0), Rational(0), Rational(0)}));
        break;
    }
    return FigureResult{render(sk, ""), false, ""};
  } catch (const DegenerateConstruction& e) {
    Sketch sk;
    sk.title = std::string("figure ") + figure_name(fig) + " (degenerate input)";
    return FigureResult{render(sk, e.label), true, e.label};
  }
}

}  // namespace trigroup
