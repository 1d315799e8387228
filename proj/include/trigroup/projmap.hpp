#pragma once

#include <array>

#include "trigroup/projective.hpp"

namespace trigroup {

using Matrix3 = std::array<Triple, 3>;

/// Invertible projective transformation of the plane. Acts on points by the
/// matrix, on lines by the cofactor matrix (inverse-transpose up to scale),
/// so incidence is preserved exactly.
class ProjMap {
 public:
  explicit ProjMap(const Matrix3& m);

  static ProjMap identity();

  HomPoint operator()(const HomPoint& p) const;
  HomLine operator()(const HomLine& l) const;

  ProjMap inverse() const;
  friend ProjMap operator*(const ProjMap& a, const ProjMap& b);

  const Matrix3& matrix() const { return m_; }

 private:
  Matrix3 m_;
};

Matrix3 cofactor_matrix(const Matrix3& m);
Rational det(const Matrix3& m);

/// The unique (up to scale) map sending src[i] to dst[i] for four points in
/// general position on each side. Throws DegenerateQuadruple when any three
/// of either quadruple are collinear.
ProjMap map_from_correspondence(const std::array<HomPoint, 4>& src,
                                const std::array<HomPoint, 4>& dst);

}  // namespace trigroup
