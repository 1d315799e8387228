#include "trigroup/scenes.hpp"

#include <algorithm>

#include "trigroup/constructions.hpp"

namespace trigroup {

namespace {

bool all_distinct(const std::vector<HomPoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return false;
  return true;
}

bool all_distinct_lines(const std::vector<HomLine>& ls) {
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (ls[i] == ls[j]) return false;
  return true;
}

HomPoint random_affine(SplitMix64& rng) {
  return HomPoint::affine(rng.coordinate(), rng.coordinate());
}

}  // namespace

void CentralScene::validate() const {
  for (int i = 0; i < 3; ++i) {
    if (!incident(S, l[i])) throw GeometryError("central scene: l_i must pass through S");
    if (!incident(A[i], l[i]) || !incident(B[i], l[i]))
      throw GeometryError("central scene: A_i and B_i must lie on l_i");
    if (A[i] == B[i] || A[i] == S || B[i] == S)
      throw GeometryError("central scene: A_i, B_i, S must be distinct");
  }
  if (!all_distinct_lines({l[0], l[1], l[2]}))
    throw GeometryError("central scene: lines must be distinct");
  if (!all_distinct({S, A[0], A[1], A[2], B[0], B[1], B[2]}))
    throw GeometryError("central scene: the nine points must be distinct");
  if (collinear(A[0], A[1], A[2]) || collinear(B[0], B[1], B[2]))
    throw GeometryError("central scene: triangles must be nondegenerate");
}

CentralScene CentralScene::transformed(const ProjMap& map) const {
  CentralScene out{map(S),
                   {map(l[0]), map(l[1]), map(l[2])},
                   {map(A[0]), map(A[1]), map(A[2])},
                   {map(B[0]), map(B[1]), map(B[2])}};
  return out;
}

void AxisScene::validate() const {
  for (int k = 0; k < 3; ++k) {
    if (!incident(L[k], s)) throw GeometryError("axis scene: L_k must lie on s");
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    if (!incident(L[k], join(A[i], A[j])) || !incident(L[k], join(B[i], B[j])))
      throw GeometryError("axis scene: side _i_j must pass through L_k");
  }
  if (!all_distinct({L[0], L[1], L[2]})) throw GeometryError("axis scene: L_k must be distinct");
  if (collinear(A[0], A[1], A[2]) || collinear(B[0], B[1], B[2]))
    throw GeometryError("axis scene: triangles must be nondegenerate");
  for (int i = 0; i < 3; ++i)
    if (incident(A[i], s) || incident(B[i], s))
      throw GeometryError("axis scene: vertices must avoid the axis");
}

AxisScene AxisScene::transformed(const ProjMap& map) const {
  AxisScene out{map(s),
                {map(L[0]), map(L[1]), map(L[2])},
                {map(A[0]), map(A[1]), map(A[2])},
                {map(B[0]), map(B[1]), map(B[2])}};
  return out;
}

void ConicHexagon::validate() const {
  if (conic.is_degenerate()) throw GeometryError("hexagon conic must be nondegenerate");
  std::vector<HomPoint> six{A[0], A[1], A[2], B[0], B[1], B[2]};
  if (!all_distinct(six)) throw GeometryError("hexagon vertices must be distinct");
  for (const HomPoint& p : six)
    if (!conic.contains(p)) throw GeometryError("hexagon vertex not on the conic");
}

void PappusInstance::validate() const {
  if (la == lb) throw GeometryError("pappus instance: lines must be distinct");
  const HomPoint m = meet(la, lb);
  for (int i = 0; i < 3; ++i) {
    if (!incident(A[i], la) || !incident(B[i], lb))
      throw GeometryError("pappus instance: triples must lie on their lines");
    if (A[i] == m || B[i] == m)
      throw GeometryError("pappus instance: points must avoid the common point");
  }
  if (!all_distinct({A[0], A[1], A[2], B[0], B[1], B[2]}))
    throw GeometryError("pappus instance: points must be distinct");
}

CentralScene random_central_scene(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    try {
      const HomPoint S = random_affine(rng);
      std::array<HomLine, 3> l{HomLine::at_infinity(), HomLine::at_infinity(),
                               HomLine::at_infinity()};
      std::array<HomPoint, 3> A{S, S, S}, B{S, S, S};
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        const HomPoint t = random_affine(rng);
        if (t == S) {
          ok = false;
          break;
        }
        l[i] = join(S, t);
        // Points on l_i as affine combinations S + u (t - S), u != 0.
        const auto [sx, sy] = S.to_affine();
        const auto [tx, ty] = t.to_affine();
        const Rational u = rng.small_rational(true);
        Rational v = rng.small_rational(true);
        while (v == u) v = rng.small_rational(true);
        A[i] = HomPoint::affine(sx + u * (tx - sx), sy + u * (ty - sy));
        B[i] = HomPoint::affine(sx + v * (tx - sx), sy + v * (ty - sy));
      }
      if (!ok) continue;
      CentralScene scene{S, l, A, B};
      scene.validate();
      // The whole derived roster must exist and stay distinct; the
      // construction throws if any defining lines coincide.
      const CentralConstruction c = main_construction_central(scene);
      std::vector<HomPoint> roster{S, A[0], A[1], A[2], B[0], B[1], B[2],
                                   c.C[0], c.C[1], c.C[2]};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) roster.push_back(c.P(i, j));
      if (!all_distinct(roster)) continue;
      std::vector<HomLine> lines{l[0], l[1], l[2]};
      for (int k = 0; k < 3; ++k) {
        const int i = (k + 1) % 3, j = (k + 2) % 3;
        lines.push_back(join(A[i], A[j]));
        lines.push_back(join(B[i], B[j]));
      }
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) lines.push_back(join(c.P(i, j), c.P(j, i)));
      if (!all_distinct_lines(lines)) continue;
      return scene;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeneralPositionExhausted();
}

AxisScene random_axis_scene(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    try {
      const HomPoint p1 = random_affine(rng);
      const HomPoint p2 = random_affine(rng);
      if (p1 == p2) continue;
      const HomLine s = join(p1, p2);
      std::array<HomPoint, 3> L{p1, p1, p1};
      std::vector<Rational> ts;
      for (int k = 0; k < 3; ++k) {
        Rational t = rng.small_rational();
        while (std::find(ts.begin(), ts.end(), t) != ts.end()) t = rng.small_rational();
        ts.push_back(t);
        Triple c;
        for (int m = 0; m < 3; ++m) c[m] = p1[m] + t * p2[m];
        L[k] = HomPoint(c);
      }
      auto make_triangle = [&](std::array<HomPoint, 3>& T) {
        const HomPoint t1 = random_affine(rng);
        if (incident(t1, s)) throw GeometryError("vertex on axis");
        Triple c;
        const Rational u = rng.small_rational(true);
        for (int m = 0; m < 3; ++m) c[m] = t1[m] + u * L[2][m];
        const HomPoint t2 = HomPoint(c);
        T = {t1, t2, meet(join(t1, L[1]), join(t2, L[0]))};
      };
      AxisScene scene{s, L, {p1, p1, p1}, {p1, p1, p1}};
      make_triangle(scene.A);
      make_triangle(scene.B);
      scene.validate();
      std::vector<HomPoint> roster{scene.A[0], scene.A[1], scene.A[2],
                                   scene.B[0], scene.B[1], scene.B[2]};
      if (!all_distinct(roster)) continue;
      const auto C = main_construction_axis(scene);
      if (collinear(C[0], C[1], C[2])) continue;
      return scene;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeneralPositionExhausted();
}

ConicHexagon random_conic_hexagon(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    try {
      std::array<HomPoint, 5> five{random_affine(rng), random_affine(rng), random_affine(rng),
                                   random_affine(rng), random_affine(rng)};
      const Conic conic = conic_through_5(five);
      if (conic.is_degenerate()) continue;
      std::vector<Rational> ts;
      for (int k = 0; k < 6; ++k) {
        Rational t(rng.uniform(-40, 40), rng.uniform(1, 4));
        while (std::find(ts.begin(), ts.end(), t) != ts.end())
          t = Rational(rng.uniform(-40, 40), rng.uniform(1, 4));
        ts.push_back(t);
      }
      std::sort(ts.begin(), ts.end());
      std::array<HomPoint, 6> pts{five[0], five[0], five[0], five[0], five[0], five[0]};
      for (int k = 0; k < 6; ++k) pts[k] = conic_point(conic, five[0], ts[k]);
      // Traversal order A1 B3 A2 B1 A3 B2.
      ConicHexagon hex{conic,
                       {pts[0], pts[2], pts[4]},
                       {pts[3], pts[5], pts[1]}};
      hex.validate();
      return hex;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeneralPositionExhausted();
}

PappusInstance random_pappus_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    try {
      const HomPoint pa = random_affine(rng), qa = random_affine(rng);
      const HomPoint pb = random_affine(rng), qb = random_affine(rng);
      const HomLine la = join(pa, qa), lb = join(pb, qb);
      if (la == lb) continue;
      auto on_line = [&](const HomPoint& p, const HomPoint& q) {
        Triple c;
        const Rational t = rng.small_rational();
        for (int m = 0; m < 3; ++m) c[m] = p[m] + t * q[m];
        return HomPoint(c);
      };
      PappusInstance inst{la, lb,
                          {on_line(pa, qa), on_line(pa, qa), on_line(pa, qa)},
                          {on_line(pb, qb), on_line(pb, qb), on_line(pb, qb)}};
      inst.validate();
      (void)pappus_line(inst.A, inst.B);
      (void)generalized_pappus_center(inst.A, inst.B);
      return inst;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeneralPositionExhausted();
}

AxisScene polarize(const CentralScene& scene, const Conic& polarity) {
  AxisScene out{polarity.polar(scene.S),
                {polarity.pole(scene.l[0]), polarity.pole(scene.l[1]), polarity.pole(scene.l[2])},
                {scene.S, scene.S, scene.S},
                {scene.S, scene.S, scene.S}};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    out.A[i] = polarity.pole(join(scene.A[j], scene.A[k]));
    out.B[i] = polarity.pole(join(scene.B[j], scene.B[k]));
  }
  return out;
}

}  // namespace trigroup
