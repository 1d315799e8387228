#pragma once

#include <array>

#include "trigroup/projmap.hpp"
#include "trigroup/projective.hpp"

namespace trigroup {

/// Conic P^T S P = 0 with S a nonzero symmetric matrix, stored with its
/// entries scale-normalized like a homogeneous triple so equal conics
/// compare equal structurally.
class Conic {
 public:
  explicit Conic(const Matrix3& sym);

  Rational eval(const HomPoint& p) const;
  /// Polar bilinear form B(p, q); B(p, p) == eval(p).
  Rational bilinear(const HomPoint& p, const HomPoint& q) const;
  bool contains(const HomPoint& p) const { return eval(p).is_zero(); }
  bool is_degenerate() const;

  /// Polar line of a point (tangent when the point is on the conic).
  HomLine polar(const HomPoint& p) const;
  /// Pole of a line; requires a nondegenerate conic.
  HomPoint pole(const HomLine& l) const;

  /// Image under a projective map: the conic through the mapped points.
  Conic transformed(const ProjMap& map) const;

  const Matrix3& matrix() const { return m_; }

  friend bool operator==(const Conic& a, const Conic& b) { return a.m_ == b.m_; }

 private:
  Matrix3 m_;
};

/// The conic through five distinct points, no four collinear: exact
/// nullspace of the 5x6 monomial matrix. Throws UnderDetermined when the
/// nullspace has dimension > 1. With three collinear points the result is
/// degenerate but still unique.
Conic conic_through_5(const std::array<HomPoint, 5>& pts);

/// Second intersection of the conic with the line through `base` (a point
/// of the conic) determined by the rational parameter t. Distinct
/// parameters give distinct points except for finitely many t. Throws
/// TangentParameter when the parameter line is tangent at base.
HomPoint conic_point(const Conic& c, const HomPoint& base, const Rational& t);

}  // namespace trigroup
