#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>

#include "trigroup/errors.hpp"
#include "trigroup/exact.hpp"

namespace trigroup {

using Triple = std::array<Rational, 3>;

/// Scale-normal form shared by all homogeneous coefficient vectors:
/// denominators cleared, entries divided by their gcd, first nonzero entry
/// positive. Equality of canonical data is then plain structural equality.
/// Throws GeometryError when every entry is zero.
void scale_normalize(std::span<Rational> values);

Triple canonicalize_triple(const Triple& t);

/// Point of the rational projective plane, stored canonically.
/// z == 0 marks the points at infinity; there is no type-level split
/// between affine and infinite points.
class HomPoint {
 public:
  HomPoint(Rational x, Rational y, Rational z) : c_(canonicalize_triple({x, y, z})) {}
  explicit HomPoint(const Triple& t) : c_(canonicalize_triple(t)) {}

  static HomPoint affine(const Rational& x, const Rational& y) { return HomPoint(x, y, 1); }
  /// Point at infinity in direction (dx, dy).
  static HomPoint direction(const Rational& dx, const Rational& dy) { return HomPoint(dx, dy, 0); }

  const Rational& operator[](int i) const { return c_[i]; }
  const Triple& coords() const { return c_; }

  bool is_infinite() const { return c_[2].is_zero(); }
  /// Affine (x, y); the point must be finite.
  std::pair<Rational, Rational> to_affine() const;

  friend bool operator==(const HomPoint& a, const HomPoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HomPoint& a, const HomPoint& b) { return !(a == b); }

  std::string str() const;

 private:
  Triple c_;
};

/// Line ux + vy + wz = 0, canonicalized the same way as points.
class HomLine {
 public:
  HomLine(Rational u, Rational v, Rational w) : c_(canonicalize_triple({u, v, w})) {}
  explicit HomLine(const Triple& t) : c_(canonicalize_triple(t)) {}

  static HomLine at_infinity() { return HomLine(0, 0, 1); }

  const Rational& operator[](int i) const { return c_[i]; }
  const Triple& coeffs() const { return c_; }

  friend bool operator==(const HomLine& a, const HomLine& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HomLine& a, const HomLine& b) { return !(a == b); }

  std::string str() const;

 private:
  Triple c_;
};

Triple cross(const Triple& a, const Triple& b);
Rational det3(const Triple& a, const Triple& b, const Triple& c);

/// Line through two distinct points. Throws CoincidentPoints if p == q.
HomLine join(const HomPoint& p, const HomPoint& q);

/// Intersection of two distinct lines. Throws CoincidentLines if l == m.
HomPoint meet(const HomLine& l, const HomLine& m);

bool incident(const HomPoint& p, const HomLine& l);

bool collinear(const HomPoint& p, const HomPoint& q, const HomPoint& r);
bool concurrent(const HomLine& l, const HomLine& m, const HomLine& n);

/// Cross-ratio (a,b; c,d) of four pairwise distinct collinear points under
/// the convention ((c-a)/(c-b)) : ((d-a)/(d-b)) read in any affine chart of
/// the line. For pairwise distinct arguments the value is a finite nonzero
/// rational; the result does not depend on the chart.
Rational cross_ratio(const HomPoint& a, const HomPoint& b, const HomPoint& c, const HomPoint& d);

/// The point y on the common line with cross_ratio(s, y, a, x) == -1.
HomPoint harmonic_conjugate(const HomPoint& s, const HomPoint& a, const HomPoint& x);

/// Midpoint of two finite points (the affine structure comes from the line
/// at infinity being fixed).
HomPoint midpoint(const HomPoint& p, const HomPoint& q);

}  // namespace trigroup
