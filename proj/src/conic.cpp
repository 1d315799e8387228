#include "trigroup/conic.hpp"

#include "trigroup/linalg.hpp"

namespace trigroup {

namespace {

Matrix3 normalize_sym(const Matrix3& s) {
  // All nine entries share one scale.
  std::array<Rational, 9> flat;
  int k = 0;
  for (const auto& row : s)
    for (const Rational& r : row) flat[k++] = r;
  scale_normalize(flat);
  Matrix3 out;
  k = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = flat[k++];
  return out;
}

}  // namespace

Conic::Conic(const Matrix3& sym) : m_(normalize_sym(sym)) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (m_[i][j] != m_[j][i]) throw GeometryError("conic matrix must be symmetric");
}

Rational Conic::eval(const HomPoint& p) const { return bilinear(p, p); }

Rational Conic::bilinear(const HomPoint& p, const HomPoint& q) const {
  Rational acc(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += p[i] * m_[i][j] * q[j];
  return acc;
}

bool Conic::is_degenerate() const { return det(m_).is_zero(); }

HomLine Conic::polar(const HomPoint& p) const {
  Triple r;
  for (int i = 0; i < 3; ++i) r[i] = m_[i][0] * p[0] + m_[i][1] * p[1] + m_[i][2] * p[2];
  return HomLine(r);
}

HomPoint Conic::pole(const HomLine& l) const {
  if (is_degenerate()) throw GeometryError("pole of a line needs a nondegenerate conic");
  const Matrix3 c = cofactor_matrix(m_);
  Triple r;
  for (int i = 0; i < 3; ++i) r[i] = c[0][i] * l[0] + c[1][i] * l[1] + c[2][i] * l[2];
  return HomPoint(r);
}

Conic Conic::transformed(const ProjMap& map) const {
  // S' = (M^-1)^T S M^-1, realized with the adjugate to stay exact.
  const Matrix3 c = cofactor_matrix(map.matrix());
  Matrix3 adj;  // adj(M) = cof(M)^T = det(M) * M^-1
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) adj[i][j] = c[j][i];
  Matrix3 sa{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      sa[i][j] = Rational(0);
      for (int k = 0; k < 3; ++k) sa[i][j] += m_[i][k] * adj[k][j];
    }
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j] = Rational(0);
      for (int k = 0; k < 3; ++k) out[i][j] += adj[k][i] * sa[k][j];
    }
  return Conic(out);
}

Conic conic_through_5(const std::array<HomPoint, 5>& pts) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (pts[i] == pts[j]) throw DegeneratePoints();
  // Monomial order: x^2, y^2, z^2, xy, xz, yz.
  Mat m;
  for (const HomPoint& p : pts) {
    m.push_back(Vec{p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2],
                    p[1] * p[2]});
  }
  const auto basis = nullspace(std::move(m), 6);
  if (basis.size() != 1) throw UnderDetermined();
  const Vec& c = basis[0];
  const Rational h(1, 2);
  Matrix3 s{Triple{c[0], c[3] * h, c[4] * h}, Triple{c[3] * h, c[1], c[5] * h},
            Triple{c[4] * h, c[5] * h, c[2]}};
  return Conic(s);
}

HomPoint conic_point(const Conic& c, const HomPoint& base, const Rational& t) {
  if (!c.contains(base)) throw GeometryError("base point must lie on the conic");
  // Fixed reference line not through base; R(t) walks along it rationally,
  // and the chord base-R(t) cuts the conic in exactly one further point.
  HomPoint r = base;
  if (!incident(base, HomLine::at_infinity())) {
    r = HomPoint(Rational(1), t, Rational(0));
  } else if (!incident(base, HomLine(1, 0, 0))) {
    r = HomPoint(Rational(0), Rational(1), t);
  } else {
    r = HomPoint(Rational(1), Rational(0), t);
  }
  const Rational qr = c.eval(r);
  if (qr.is_zero()) return r;  // R itself is the second intersection
  const Rational b = c.bilinear(base, r);
  if (b.is_zero()) throw TangentParameter();
  // q(base + s R) = 2 s B(base,R) + s^2 q(R): second root scaled out.
  Triple p;
  for (int i = 0; i < 3; ++i) p[i] = qr * base[i] - Rational(2) * b * r[i];
  return HomPoint(p);
}

}  // namespace trigroup
