#include "trigroup/projective.hpp"

#include <vector>

namespace trigroup {

void scale_normalize(std::span<Rational> values) {
  mpz_class l = 1;
  for (const Rational& r : values)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.denominator().get_mpz_t());
  std::vector<mpz_class> n;
  n.reserve(values.size());
  bool all_zero = true;
  for (const Rational& r : values) {
    n.push_back(r.numerator() * (l / r.denominator()));
    if (sgn(n.back()) != 0) all_zero = false;
  }
  if (all_zero) throw GeometryError("homogeneous data must be nonzero");
  mpz_class g = 0;
  for (const mpz_class& v : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (const mpz_class& v : n)
    if (sgn(v) != 0) {
      if (sgn(v) < 0) g = -g;
      break;
    }
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = Rational(mpq_class(n[i] / g));
}

Triple canonicalize_triple(const Triple& t) {
  Triple out = t;
  scale_normalize(out);
  return out;
}

std::pair<Rational, Rational> HomPoint::to_affine() const {
  if (is_infinite()) throw GeometryError("point at infinity has no affine coordinates");
  return {c_[0] / c_[2], c_[1] / c_[2]};
}

std::string HomPoint::str() const {
  return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")";
}

std::string HomLine::str() const {
  return "[" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + "]";
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const Triple& a, const Triple& b, const Triple& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

HomLine join(const HomPoint& p, const HomPoint& q) {
  if (p == q) throw CoincidentPoints();
  return HomLine(cross(p.coords(), q.coords()));
}

HomPoint meet(const HomLine& l, const HomLine& m) {
  if (l == m) throw CoincidentLines();
  return HomPoint(cross(l.coeffs(), m.coeffs()));
}

bool incident(const HomPoint& p, const HomLine& l) {
  return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_zero();
}

bool collinear(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
  return det3(p.coords(), q.coords(), r.coords()).is_zero();
}

bool concurrent(const HomLine& l, const HomLine& m, const HomLine& n) {
  return det3(l.coeffs(), m.coeffs(), n.coeffs()).is_zero();
}

namespace {

/// Any projective basis point off the given line.
Triple off_line_point(const HomLine& l) {
  for (int i = 0; i < 3; ++i) {
    Triple e{Rational(0), Rational(0), Rational(0)};
    e[i] = Rational(1);
    if (!incident(HomPoint(e), l)) return e;
  }
  throw GeometryError("unreachable: a line cannot contain the whole basis");
}

}  // namespace

Rational cross_ratio(const HomPoint& a, const HomPoint& b, const HomPoint& c, const HomPoint& d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) throw DegeneratePoints();
  const HomLine l = join(a, b);
  if (!incident(c, l) || !incident(d, l)) throw NotCollinear();
  // (a,b;c,d) = (|a c e| |b d e|) / (|b c e| |a d e|) for any e off the line;
  // this is the chart formula ((c-a)(d-b)) / ((c-b)(d-a)) in disguise.
  const Triple e = off_line_point(l);
  const Rational ace = det3(a.coords(), c.coords(), e);
  const Rational bde = det3(b.coords(), d.coords(), e);
  const Rational bce = det3(b.coords(), c.coords(), e);
  const Rational ade = det3(a.coords(), d.coords(), e);
  return (ace * bde) / (bce * ade);
}

HomPoint harmonic_conjugate(const HomPoint& s, const HomPoint& a, const HomPoint& x) {
  if (s == a || s == x || a == x) throw DegeneratePoints();
  if (!collinear(s, a, x)) throw NotCollinear();
  // Write x = x1*s + x2*a; then (s,y;a,x) = -1 forces y = x1*s + 2*x2*a.
  Rational x1, x2;
  bool solved = false;
  for (int i = 0; i < 3 && !solved; ++i) {
    for (int j = i + 1; j < 3 && !solved; ++j) {
      const Rational det = s[i] * a[j] - s[j] * a[i];
      if (det.is_zero()) continue;
      x1 = (x[i] * a[j] - x[j] * a[i]) / det;
      x2 = (s[i] * x[j] - s[j] * x[i]) / det;
      solved = true;
    }
  }
  if (!solved) throw DegeneratePoints();
  Triple y;
  for (int i = 0; i < 3; ++i) y[i] = x1 * s[i] + Rational(2) * x2 * a[i];
  return HomPoint(y);
}

HomPoint midpoint(const HomPoint& p, const HomPoint& q) {
  const auto [px, py] = p.to_affine();
  const auto [qx, qy] = q.to_affine();
  return HomPoint::affine((px + qx) / 2, (py + qy) / 2);
}

}  // namespace trigroup
