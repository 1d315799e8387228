#pragma once

#include <array>
#include <string>

#include "trigroup/linalg.hpp"
#include "trigroup/projective.hpp"

namespace trigroup {

enum class TriangleKind { Geometric, Pseudo, CompletelyPseudo };

std::string kind_name(TriangleKind k);

/// Element of the space of triangles, carried by an exact coordinate
/// triple (delta1, delta2, delta3).
///
///   * Geometric        <=> delta1 + delta2 + delta3 != 0
///   * CompletelyPseudo <=> delta is one of (-2/3,1/3,1/3), (1/3,-2/3,1/3),
///                          (1/3,1/3,-2/3)
///   * Pseudo           <=> any other zero-sum triple
///
/// Coordinates are NOT homogeneous: distinct triples are distinct elements
/// (scaling a pseudo element changes its triple of vertex directions).
class TriangleElement {
 public:
  explicit TriangleElement(Triple delta);
  TriangleElement(Rational d1, Rational d2, Rational d3);

  TriangleKind kind() const { return kind_; }
  const Triple& delta() const { return delta_; }
  Rational coordinate_sum() const { return delta_[0] + delta_[1] + delta_[2]; }

  bool is_geometric() const { return kind_ == TriangleKind::Geometric; }
  bool is_zero_sum() const { return kind_ != TriangleKind::Geometric; }

  friend bool operator==(const TriangleElement& a, const TriangleElement& b) {
    return a.delta_ == b.delta_;
  }
  friend bool operator!=(const TriangleElement& a, const TriangleElement& b) {
    return !(a == b);
  }

  std::string str() const;

  /// The three distinguished zero-sum triples; slot k carries the -2/3.
  static TriangleElement completely_pseudo(int slot);
  static TriangleElement zero() { return TriangleElement(0, 0, 0); }

 private:
  Triple delta_;
  TriangleKind kind_;
};

/// Zero-sum coordinate triple of a direction (a point on the line at
/// infinity); homogeneous up to scale, never all zero.
struct Direction {
  Triple y;
};

/// Vertex triangle realized in a frame: three finite points whose sides are
/// parallel to the corresponding sides of the reference triangle.
struct GeometricTriangle {
  std::array<HomPoint, 3> v;

  friend bool operator==(const GeometricTriangle& a, const GeometricTriangle& b) {
    return a.v == b.v;
  }
};

/// Reference triangle E for barycentric coordinates. The perspective axis
/// is the line at infinity throughout, so the admissible vertex triangles
/// are exactly those with sides parallel to E's sides.
class ReferenceFrame {
 public:
  ReferenceFrame(const HomPoint& e1, const HomPoint& e2, const HomPoint& e3);

  static ReferenceFrame standard();  // (0,0), (1,0), (0,1)

  const HomPoint& vertex(int i) const { return e_[i]; }
  const std::array<HomPoint, 3>& vertices() const { return e_; }

  /// Barycentric coordinates of any point: finite points give sum-1
  /// triples, points at infinity give zero-sum direction triples.
  Triple coords_of_point(const HomPoint& p) const;

  /// Point with the given coordinates: homogeneous combination
  /// sum(c_i * E_i); zero-sum input lands on the line at infinity.
  HomPoint point_from_coords(const Triple& c) const;

  HomPoint direction_point(const Direction& d) const { return point_from_coords(d.y); }

  /// Point at infinity of the side direction (E_i E_j) opposite slot k.
  HomPoint side_direction_point(int k) const;

  friend bool operator==(const ReferenceFrame& a, const ReferenceFrame& b) {
    return a.e_ == b.e_;
  }

 private:
  std::array<HomPoint, 3> e_;
  Mat inv_;  // inverse of the column matrix [E1 E2 E3] with z-normalized vertices
};

HomPoint centroid(const GeometricTriangle& t);

/// delta_i = d * d_i where (d_1,d_2,d_3) is the mass center of D in
/// barycentrics and d is the ratio of the homothety carrying D to E
/// (d = 1 for a pure translation). Throws SideMismatch when D is not a
/// homothety image of E under the vertex correspondence.
TriangleElement bary_from_triangle(const GeometricTriangle& d, const ReferenceFrame& frame);

/// Inverse realization: vertex k has barycentrics
/// (delta - (1/3,1/3,1/3) + e_k) / d. Throws ZeroSum for non-geometric
/// elements.
GeometricTriangle triangle_from_bary(const TriangleElement& t, const ReferenceFrame& frame);

/// Coordinate pre-sum: componentwise -(x + y). Total on all kinds.
TriangleElement presum_coords(const TriangleElement& x, const TriangleElement& y);

/// Geometric pre-sum: the axis-model construction with the axis at
/// infinity, including every degenerate-case rule (coinciding sides, equal
/// operands, centrally symmetric operands, pseudo operands via the
/// parameterization route). Partial: throws Unsupported for pairings with
/// no geometric rule and DegenerateConstruction for unlucky instances.
TriangleElement presum_geometric(const TriangleElement& x, const TriangleElement& y,
                                 const ReferenceFrame& frame);

/// Group sum: componentwise x + y (pre-sum then reflection in the mass
/// center, when both routes exist).
TriangleElement sum(const TriangleElement& x, const TriangleElement& y);

/// Definition-style sum with an arbitrary fixed element F:
/// presum(F, presum(x, y)).
TriangleElement sum_with_fixed(const TriangleElement& f, const TriangleElement& x,
                               const TriangleElement& y);

/// Negates the coordinates; geometrically the point reflection of the
/// vertex triangle in its mass center. Geometric elements only.
TriangleElement reflect_mass_center(const TriangleElement& x);

/// Point reflection of the realized triangle in its own centroid.
GeometricTriangle reflect_triangle(const GeometricTriangle& t);

/// Central-model data behind half(): S is the centroid, X_i the meet of
/// side A_jA_k with SA_i, and Y_i the harmonic complement of S to
/// {A_i, X_i}. Y is the realization of the half element.
struct HalfConstruction {
  GeometricTriangle A;
  HomPoint S;
  std::array<HomPoint, 3> X;
  std::array<HomPoint, 3> Y;
};

HalfConstruction build_half_construction(const TriangleElement& a, const ReferenceFrame& frame);

/// The element X with presum(X, X) == a, i.e. coordinates -a/2, derived
/// geometrically from the harmonic construction above.
TriangleElement half(const TriangleElement& a, const ReferenceFrame& frame);

/// Ordered vertex directions of a pseudo element: slot k is
/// (p - (1/3,1/3,1/3) + e_k). Throws CompletelyPseudoInput when a slot
/// would vanish (exactly the three distinguished triples).
std::array<Direction, 3> pseudo_vertices(const TriangleElement& p);

/// The unique triangle B, centrally symmetric to E, with
/// presum(coords(E), coords(B)) == p; its coordinates are
/// -p - (1/3,1/3,1/3). Defined for every zero-sum element.
GeometricTriangle pseudo_parameterize(const TriangleElement& p, const ReferenceFrame& frame);

/// Pre-sum of two zero-sum elements through their parameterizing
/// triangles: D_i = midpoint(B_i, C_i), t = presum(E, D) computed from the
/// realized triangles, and the result is the doubled element
/// presum(t, t). Agrees exactly with presum_coords.
TriangleElement pseudo_presum_via_lemma(const TriangleElement& x, const TriangleElement& y,
                                        const ReferenceFrame& frame);

}  // namespace trigroup
