#include "trigroup/projmap.hpp"

#include "trigroup/linalg.hpp"

namespace trigroup {

Rational det(const Matrix3& m) { return det3(m[0], m[1], m[2]); }

Matrix3 cofactor_matrix(const Matrix3& m) {
  Matrix3 c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      c[i][j] = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
    }
  }
  return c;
}

ProjMap::ProjMap(const Matrix3& m) : m_(m) {
  if (det(m_).is_zero()) throw GeometryError("projective map must be invertible");
}

ProjMap ProjMap::identity() {
  return ProjMap(Matrix3{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}});
}

HomPoint ProjMap::operator()(const HomPoint& p) const {
  Triple r;
  for (int i = 0; i < 3; ++i) r[i] = m_[i][0] * p[0] + m_[i][1] * p[1] + m_[i][2] * p[2];
  return HomPoint(r);
}

HomLine ProjMap::operator()(const HomLine& l) const {
  // l' = (M^-1)^T l, realized as cofactor(M) * l to stay division-free.
  const Matrix3 c = cofactor_matrix(m_);
  Triple r;
  for (int i = 0; i < 3; ++i) r[i] = c[i][0] * l[0] + c[i][1] * l[1] + c[i][2] * l[2];
  return HomLine(r);
}

ProjMap ProjMap::inverse() const {
  // adj(M) = cofactor(M)^T; the determinant scale is irrelevant projectively.
  const Matrix3 c = cofactor_matrix(m_);
  Matrix3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) adj[i][j] = c[j][i];
  return ProjMap(adj);
}

ProjMap operator*(const ProjMap& a, const ProjMap& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
  return ProjMap(r);
}

namespace {

/// Matrix taking the projective basis e1, e2, e3, (1:1:1) to the quadruple.
Matrix3 basis_to_quad(const std::array<HomPoint, 4>& q) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(q[i], q[j], q[k])) throw DegenerateQuadruple();
  Mat a(3, Vec(3));
  Vec b(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a[i][j] = q[j][i];
    b[i] = q[3][i];
  }
  const auto lambda = solve_unique(a, b);
  if (!lambda) throw DegenerateQuadruple();
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (*lambda)[j] * q[j][i];
  return m;
}

}  // namespace

ProjMap map_from_correspondence(const std::array<HomPoint, 4>& src,
                                const std::array<HomPoint, 4>& dst) {
  const ProjMap to_src(basis_to_quad(src));
  const ProjMap to_dst(basis_to_quad(dst));
  return to_dst * to_src.inverse();
}

}  // namespace trigroup
