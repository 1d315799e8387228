#include "trigroup/triangle_group.hpp"

#include <optional>
#include <vector>

namespace trigroup {

namespace {

const Rational kThird(1, 3);
const Triple kCenter{Rational(1, 3), Rational(1, 3), Rational(1, 3)};

int third(int i, int j) { return 3 - i - j; }

TriangleKind derive_kind(const Triple& d) {
  if (!(d[0] + d[1] + d[2]).is_zero()) return TriangleKind::Geometric;
  for (int k = 0; k < 3; ++k) {
    bool match = true;
    for (int i = 0; i < 3; ++i) {
      const Rational want = (i == k) ? Rational(-2, 3) : kThird;
      if (d[i] != want) {
        match = false;
        break;
      }
    }
    if (match) return TriangleKind::CompletelyPseudo;
  }
  return TriangleKind::Pseudo;
}

Triple basis(int k) {
  Triple e{Rational(0), Rational(0), Rational(0)};
  e[k] = Rational(1);
  return e;
}

}  // namespace

std::string kind_name(TriangleKind k) {
  switch (k) {
    case TriangleKind::Geometric:
      return "geometric";
    case TriangleKind::Pseudo:
      return "pseudo";
    case TriangleKind::CompletelyPseudo:
      return "completely_pseudo";
  }
  return "unknown";
}

TriangleElement::TriangleElement(Triple delta) : delta_(std::move(delta)), kind_(derive_kind(delta_)) {}

TriangleElement::TriangleElement(Rational d1, Rational d2, Rational d3)
    : TriangleElement(Triple{std::move(d1), std::move(d2), std::move(d3)}) {}

std::string TriangleElement::str() const {
  return "(" + delta_[0].str() + ", " + delta_[1].str() + ", " + delta_[2].str() + ") [" +
         kind_name(kind_) + "]";
}

TriangleElement TriangleElement::completely_pseudo(int slot) {
  Triple d{kThird, kThird, kThird};
  d[slot] = Rational(-2, 3);
  return TriangleElement(d);
}

ReferenceFrame::ReferenceFrame(const HomPoint& e1, const HomPoint& e2, const HomPoint& e3)
    : e_{e1, e2, e3} {
  for (const HomPoint& e : e_)
    if (e.is_infinite()) throw GeometryError("reference triangle vertices must be finite");
  if (collinear(e1, e2, e3)) throw GeometryError("reference triangle must be nondegenerate");
  // Invert [[x1 x2 x3], [y1 y2 y3], [1 1 1]] once; barycentric reads are
  // then a single matrix-vector product.
  Mat m(3, Vec(3, Rational(0)));
  for (int j = 0; j < 3; ++j) {
    const auto [x, y] = e_[j].to_affine();
    m[0][j] = x;
    m[1][j] = y;
    m[2][j] = Rational(1);
  }
  const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  inv_ = Mat(3, Vec(3, Rational(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
      const int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      inv_[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / det;
    }
}

ReferenceFrame ReferenceFrame::standard() {
  return ReferenceFrame(HomPoint::affine(0, 0), HomPoint::affine(1, 0), HomPoint::affine(0, 1));
}

Triple ReferenceFrame::coords_of_point(const HomPoint& p) const {
  Vec b(3);
  if (p.is_infinite()) {
    b = {p[0], p[1], Rational(0)};
  } else {
    const auto [x, y] = p.to_affine();
    b = {x, y, Rational(1)};
  }
  Triple c;
  for (int i = 0; i < 3; ++i) c[i] = inv_[i][0] * b[0] + inv_[i][1] * b[1] + inv_[i][2] * b[2];
  return c;
}

HomPoint ReferenceFrame::point_from_coords(const Triple& c) const {
  Rational x(0), y(0), z(0);
  for (int i = 0; i < 3; ++i) {
    const auto [ex, ey] = e_[i].to_affine();
    x += c[i] * ex;
    y += c[i] * ey;
    z += c[i];
  }
  return HomPoint(x, y, z);
}

HomPoint ReferenceFrame::side_direction_point(int k) const {
  const int i = (k + 1) % 3, j = (k + 2) % 3;
  const auto [xi, yi] = e_[i].to_affine();
  const auto [xj, yj] = e_[j].to_affine();
  return HomPoint::direction(xj - xi, yj - yi);
}

HomPoint centroid(const GeometricTriangle& t) {
  Rational x(0), y(0);
  for (const HomPoint& v : t.v) {
    const auto [vx, vy] = v.to_affine();
    x += vx;
    y += vy;
  }
  return HomPoint::affine(x / 3, y / 3);
}

TriangleElement bary_from_triangle(const GeometricTriangle& d, const ReferenceFrame& frame) {
  for (const HomPoint& v : d.v)
    if (v.is_infinite()) throw SideMismatch();
  if (d.v[0] == d.v[1] || d.v[1] == d.v[2] || d.v[0] == d.v[2] ||
      collinear(d.v[0], d.v[1], d.v[2]))
    throw SideMismatch();
  // Each side must be parallel to the corresponding side of E.
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const auto [dix, diy] = d.v[i].to_affine();
    const auto [djx, djy] = d.v[j].to_affine();
    const auto [eix, eiy] = frame.vertex(i).to_affine();
    const auto [ejx, ejy] = frame.vertex(j).to_affine();
    if (!((djx - dix) * (ejy - eiy) - (djy - diy) * (ejx - eix)).is_zero())
      throw SideMismatch();
  }
  const HomPoint d0 = centroid(d);
  const GeometricTriangle e_tri{{frame.vertex(0), frame.vertex(1), frame.vertex(2)}};
  const HomPoint e0 = centroid(e_tri);
  // Ratio of the homothety carrying D to E: E_i - E_0 = d (D_i - D_0).
  const auto [d0x, d0y] = d0.to_affine();
  const auto [e0x, e0y] = e0.to_affine();
  const auto [d1x, d1y] = d.v[0].to_affine();
  const auto [e1x, e1y] = frame.vertex(0).to_affine();
  const Rational ratio =
      (d1x != d0x) ? (e1x - e0x) / (d1x - d0x) : (e1y - e0y) / (d1y - d0y);
  if (ratio.is_zero()) throw SideMismatch();
  for (int i = 0; i < 3; ++i) {
    const auto [dx, dy] = d.v[i].to_affine();
    const auto [ex, ey] = frame.vertex(i).to_affine();
    if (ex - e0x != ratio * (dx - d0x) || ey - e0y != ratio * (dy - d0y))
      throw SideMismatch();
  }
  const Triple center = frame.coords_of_point(d0);
  return TriangleElement(ratio * center[0], ratio * center[1], ratio * center[2]);
}

GeometricTriangle triangle_from_bary(const TriangleElement& t, const ReferenceFrame& frame) {
  if (!t.is_geometric()) throw ZeroSum();
  const Rational d = t.coordinate_sum();
  const auto vertex = [&](int k) {
    Triple c;
    for (int i = 0; i < 3; ++i) c[i] = (t.delta()[i] - kThird + (i == k ? Rational(1) : Rational(0))) / d;
    return frame.point_from_coords(c);
  };
  return GeometricTriangle{{vertex(0), vertex(1), vertex(2)}};
}

TriangleElement presum_coords(const TriangleElement& x, const TriangleElement& y) {
  return TriangleElement(-(x.delta()[0] + y.delta()[0]), -(x.delta()[1] + y.delta()[1]),
                         -(x.delta()[2] + y.delta()[2]));
}

TriangleElement sum(const TriangleElement& x, const TriangleElement& y) {
  return TriangleElement(x.delta()[0] + y.delta()[0], x.delta()[1] + y.delta()[1],
                         x.delta()[2] + y.delta()[2]);
}

TriangleElement sum_with_fixed(const TriangleElement& f, const TriangleElement& x,
                               const TriangleElement& y) {
  return presum_coords(f, presum_coords(x, y));
}

TriangleElement reflect_mass_center(const TriangleElement& x) {
  if (!x.is_geometric()) throw ZeroSum();
  return TriangleElement(-x.delta()[0], -x.delta()[1], -x.delta()[2]);
}

GeometricTriangle reflect_triangle(const GeometricTriangle& t) {
  const auto [gx, gy] = centroid(t).to_affine();
  const auto flip = [&](const HomPoint& v) {
    const auto [x, y] = v.to_affine();
    return HomPoint::affine(Rational(2) * gx - x, Rational(2) * gy - y);
  };
  return GeometricTriangle{{flip(t.v[0]), flip(t.v[1]), flip(t.v[2])}};
}

std::array<Direction, 3> pseudo_vertices(const TriangleElement& p) {
  if (p.is_geometric()) throw NonZeroSum();
  std::array<Direction, 3> out;
  for (int k = 0; k < 3; ++k) {
    Triple v;
    bool zero = true;
    for (int i = 0; i < 3; ++i) {
      v[i] = p.delta()[i] - kThird + (i == k ? Rational(1) : Rational(0));
      if (!v[i].is_zero()) zero = false;
    }
    if (zero) throw CompletelyPseudoInput();
    out[k].y = v;
  }
  return out;
}

GeometricTriangle pseudo_parameterize(const TriangleElement& p, const ReferenceFrame& frame) {
  if (p.is_geometric()) throw NonZeroSum();
  const TriangleElement beta(-p.delta()[0] - kThird, -p.delta()[1] - kThird,
                             -p.delta()[2] - kThird);
  return triangle_from_bary(beta, frame);
}

namespace {

/// Recovers the unique zero-sum element whose ordered vertex directions are
/// the three given points at infinity. Inverts the Definition-11 formulas
/// exactly: p - (1/3,1/3,1/3) + e_k must be proportional to the observed
/// direction triple of C_k, for all k simultaneously.
TriangleElement element_from_infinite_vertices(const std::array<HomPoint, 3>& c,
                                               const ReferenceFrame& frame) {
  std::array<Triple, 3> w;
  for (int k = 0; k < 3; ++k) {
    if (!c[k].is_infinite()) throw DegenerateConstruction("pseudo vertex not at infinity");
    w[k] = frame.coords_of_point(c[k]);
  }
  Mat m(3, Vec(2));
  Vec rhs(3);
  for (int r = 0; r < 3; ++r) {
    m[r][0] = w[0][r];
    m[r][1] = -w[1][r];
    rhs[r] = basis(0)[r] - basis(1)[r];
  }
  const auto lam = solve_unique(m, rhs);
  if (!lam) throw DegenerateConstruction("pseudo vertex directions are inconsistent");
  // Zero scales would claim a vanishing direction for an existing point.
  if ((*lam)[0].is_zero() || (*lam)[1].is_zero())
    throw DegenerateConstruction("pseudo vertex directions are inconsistent");
  Triple p;
  for (int i = 0; i < 3; ++i) p[i] = (*lam)[0] * w[0][i] + kCenter[i] - basis(0)[i];
  // Cross-check the remaining slot: p - center + e_2 parallel to w2.
  Triple v2;
  bool zero = true;
  for (int i = 0; i < 3; ++i) {
    v2[i] = p[i] - kCenter[i] + basis(2)[i];
    if (!v2[i].is_zero()) zero = false;
  }
  const Triple x = cross(v2, w[2]);
  if (zero || !x[0].is_zero() || !x[1].is_zero() || !x[2].is_zero())
    throw DegenerateConstruction("pseudo vertex directions are inconsistent");
  return TriangleElement(p);
}

/// Axis-model construction C_k = A_iB_j ^ A_jB_i with the shared-line
/// repairs. B may contain points at infinity (pseudo operand).
TriangleElement construct_presum(const std::array<HomPoint, 3>& A,
                                 const std::array<HomPoint, 3>& B,
                                 const ReferenceFrame& frame) {
  std::array<std::optional<HomPoint>, 3> C;
  std::array<std::optional<HomLine>, 3> home;  // carrier of an undefined vertex
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    std::optional<HomLine> l1, l2;
    if (A[i] != B[j]) l1 = join(A[i], B[j]);
    if (A[j] != B[i]) l2 = join(A[j], B[i]);
    if (l1 && l2 && *l1 != *l2)
      C[k] = meet(*l1, *l2);
    else
      home[k] = l1 ? l1 : l2;
  }

  int defined = 0, finite = 0, infinite = 0;
  for (int k = 0; k < 3; ++k) {
    if (!C[k]) continue;
    ++defined;
    (C[k]->is_infinite() ? infinite : finite)++;
  }
  if (defined < 3) {
    for (int k = 0; k < 3; ++k)
      if (!C[k] && !home[k])
        throw DegenerateConstruction("C" + std::to_string(k + 1) + " has no carrier line");
    if (defined == 0) throw DegenerateConstruction("no pre-sum vertex is constructible");
    if (finite == defined) {
      // Geometric result: recover C_k on its carrier through a defined
      // vertex and the matching side direction.
      int m = 0;
      while (!C[m]) ++m;
      for (int k = 0; k < 3; ++k) {
        if (C[k]) continue;
        const int n = third(k, m);
        const HomLine guide = join(*C[m], frame.side_direction_point(n));
        if (guide == *home[k])
          throw DegenerateConstruction("C" + std::to_string(k + 1) + " repair line coincides");
        C[k] = meet(guide, *home[k]);
        if (C[k]->is_infinite())
          throw DegenerateConstruction("C" + std::to_string(k + 1) + " escaped to infinity");
      }
      finite = 3;
    } else if (infinite == defined) {
      // Pseudo result: the missing vertex is the infinite point of its
      // carrier line.
      for (int k = 0; k < 3; ++k)
        if (!C[k]) C[k] = meet(*home[k], HomLine::at_infinity());
      infinite = 3;
    } else {
      throw DegenerateConstruction("pre-sum vertices mix finite and infinite");
    }
    defined = 3;
  }

  const std::array<HomPoint, 3> pts{*C[0], *C[1], *C[2]};
  if (finite == 3) return bary_from_triangle(GeometricTriangle{pts}, frame);
  if (infinite == 3) return element_from_infinite_vertices(pts, frame);
  throw DegenerateConstruction("pre-sum vertices mix finite and infinite");
}

/// A boxplus A: the triangle whose vertices are the side midpoints.
TriangleElement medial_rule(const TriangleElement& x, const ReferenceFrame& frame) {
  const GeometricTriangle a = triangle_from_bary(x, frame);
  const auto mid = [&](int k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    return midpoint(a.v[i], a.v[j]);
  };
  return bary_from_triangle(GeometricTriangle{{mid(0), mid(1), mid(2)}}, frame);
}

/// Operands symmetric about the midpoint of a common side (A_i == B_j and
/// A_j == B_i): the result is the distinguished zero-sum element with -2/3
/// in the slot of the shared side. The two constructible vertices are
/// points at infinity and must match its direction formulas.
TriangleElement symmetric_side_rule(const TriangleElement& x, const TriangleElement& y,
                                    const std::array<HomPoint, 3>& A,
                                    const std::array<HomPoint, 3>& B, int i, int j,
                                    const ReferenceFrame& frame) {
  const int k = third(i, j);
  const TriangleElement result = presum_coords(x, y);
  if (result.kind() != TriangleKind::CompletelyPseudo ||
      result != TriangleElement::completely_pseudo(k))
    throw GeometryError("symmetric-side pre-sum did not produce the distinguished element");
  for (const int s : {i, j}) {
    const int a = (s + 1) % 3, b = (s + 2) % 3;
    const HomLine l1 = join(A[a], B[b]);
    const HomLine l2 = join(A[b], B[a]);
    if (l1 == l2) throw DegenerateConstruction("C" + std::to_string(s + 1));
    const HomPoint cs = meet(l1, l2);
    if (!cs.is_infinite())
      throw GeometryError("symmetric-side pre-sum vertex is not at infinity");
    Triple v;
    for (int t = 0; t < 3; ++t) v[t] = result.delta()[t] - kThird + (t == s ? Rational(1) : Rational(0));
    const Triple obs = frame.coords_of_point(cs);
    const Triple cr = cross(v, obs);
    if (!cr[0].is_zero() || !cr[1].is_zero() || !cr[2].is_zero())
      throw GeometryError("symmetric-side vertex direction mismatch");
  }
  return result;
}

/// Geometric operand with a distinguished zero-sum operand: reflection in
/// the midpoint of the side matching its -2/3 slot.
TriangleElement side_reflection_rule(const TriangleElement& g, const TriangleElement& cp,
                                     const ReferenceFrame& frame) {
  int slot = -1;
  for (int k = 0; k < 3; ++k)
    if (cp == TriangleElement::completely_pseudo(k)) slot = k;
  if (slot < 0) throw GeometryError("internal: not a completely-pseudo element");
  const GeometricTriangle a = triangle_from_bary(g, frame);
  const int i = (slot + 1) % 3, j = (slot + 2) % 3;
  const auto [mx, my] = midpoint(a.v[i], a.v[j]).to_affine();
  const auto flip = [&](const HomPoint& v) {
    const auto [x, y] = v.to_affine();
    return HomPoint::affine(Rational(2) * mx - x, Rational(2) * my - y);
  };
  return bary_from_triangle(GeometricTriangle{{flip(a.v[0]), flip(a.v[1]), flip(a.v[2])}},
                            frame);
}

}  // namespace

TriangleElement presum_geometric(const TriangleElement& x, const TriangleElement& y,
                                 const ReferenceFrame& frame) {
  const TriangleKind kx = x.kind(), ky = y.kind();

  if (kx == TriangleKind::Geometric && ky == TriangleKind::Geometric) {
    if (x == y) return medial_rule(x, frame);
    const GeometricTriangle a = triangle_from_bary(x, frame);
    const GeometricTriangle b = triangle_from_bary(y, frame);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && a.v[i] == b.v[j] && a.v[j] == b.v[i])
          return symmetric_side_rule(x, y, a.v, b.v, i, j, frame);
    return construct_presum(a.v, b.v, frame);
  }

  if (kx != TriangleKind::Geometric && ky == TriangleKind::Geometric)
    return presum_geometric(y, x, frame);

  if (kx == TriangleKind::Geometric && ky == TriangleKind::CompletelyPseudo)
    return side_reflection_rule(x, y, frame);

  if (kx == TriangleKind::Geometric && ky == TriangleKind::Pseudo) {
    const GeometricTriangle a = triangle_from_bary(x, frame);
    const auto dirs = pseudo_vertices(y);
    const std::array<HomPoint, 3> b{frame.direction_point(dirs[0]),
                                    frame.direction_point(dirs[1]),
                                    frame.direction_point(dirs[2])};
    return construct_presum(a.v, b, frame);
  }

  if (kx == TriangleKind::CompletelyPseudo && ky == TriangleKind::CompletelyPseudo)
    throw Unsupported("no geometric rule for pre-summing two completely-pseudo elements");

  // Pseudo with pseudo (a completely-pseudo partner is admitted through its
  // parameterizing triangle).
  return pseudo_presum_via_lemma(x, y, frame);
}

HalfConstruction build_half_construction(const TriangleElement& a, const ReferenceFrame& frame) {
  const GeometricTriangle A = triangle_from_bary(a, frame);
  const HomPoint S = centroid(A);
  const auto x_at = [&](int i) {
    const int p = (i + 1) % 3, q = (i + 2) % 3;
    return meet(join(A.v[p], A.v[q]), join(S, A.v[i]));
  };
  const std::array<HomPoint, 3> X{x_at(0), x_at(1), x_at(2)};
  const auto y_at = [&](int i) { return harmonic_conjugate(S, A.v[i], X[i]); };
  return HalfConstruction{A, S, X, {y_at(0), y_at(1), y_at(2)}};
}

TriangleElement half(const TriangleElement& a, const ReferenceFrame& frame) {
  const HalfConstruction hc = build_half_construction(a, frame);
  return bary_from_triangle(GeometricTriangle{hc.Y}, frame);
}

TriangleElement pseudo_presum_via_lemma(const TriangleElement& x, const TriangleElement& y,
                                        const ReferenceFrame& frame) {
  if (x.is_geometric() || y.is_geometric()) throw NonZeroSum();
  const GeometricTriangle b = pseudo_parameterize(x, frame);
  const GeometricTriangle c = pseudo_parameterize(y, frame);
  const GeometricTriangle d{
      {midpoint(b.v[0], c.v[0]), midpoint(b.v[1], c.v[1]), midpoint(b.v[2], c.v[2])}};
  const TriangleElement eps(kThird, kThird, kThird);
  const TriangleElement dd = bary_from_triangle(d, frame);
  TriangleElement t = presum_coords(eps, dd);
  try {
    t = presum_geometric(eps, dd, frame);
  } catch (const DegenerateConstruction&) {
    // keep the coordinate value for irregular midpoint triangles
  }
  // The midpoint route lands on the half of the pre-sum; doubling by
  // self-pre-sum yields the element itself.
  return presum_coords(t, t);
}

}  // namespace trigroup
