#include "trigroup/quartic.hpp"

#include <map>

#include "trigroup/linalg.hpp"

namespace trigroup {

namespace {

std::array<std::array<int, 3>, QuarticForm::kTerms> build_monomials() {
  std::array<std::array<int, 3>, QuarticForm::kTerms> m{};
  int idx = 0;
  for (int a = 4; a >= 0; --a)
    for (int b = 4 - a; b >= 0; --b) m[idx++] = {a, b, 4 - a - b};
  return m;
}

std::array<Rational, QuarticForm::kTerms> normalize(std::array<Rational, QuarticForm::kTerms> c) {
  scale_normalize(c);
  return c;
}

Rational pow_int(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

const std::array<std::array<int, 3>, QuarticForm::kTerms>& QuarticForm::monomials() {
  static const auto m = build_monomials();
  return m;
}

QuarticForm::QuarticForm(const std::array<Rational, kTerms>& coeffs) : c_(normalize(coeffs)) {}

Rational QuarticForm::eval(const HomPoint& p) const {
  Rational acc(0);
  const auto& mons = monomials();
  for (int i = 0; i < kTerms; ++i)
    acc += c_[i] * pow_int(p[0], mons[i][0]) * pow_int(p[1], mons[i][1]) * pow_int(p[2], mons[i][2]);
  return acc;
}

QuarticForm QuarticForm::product_of_lines(const HomLine& l1, const HomLine& l2, const HomLine& l3,
                                          const HomLine& l4) {
  // Multiply the linear forms as sparse exponent-triple polynomials.
  std::map<std::array<int, 3>, Rational> poly{{{0, 0, 0}, Rational(1)}};
  for (const HomLine* l : {&l1, &l2, &l3, &l4}) {
    std::map<std::array<int, 3>, Rational> next;
    for (const auto& [mon, coeff] : poly) {
      for (int v = 0; v < 3; ++v) {
        if ((*l)[v].is_zero()) continue;
        std::array<int, 3> m = mon;
        m[v] += 1;
        next[m] += coeff * (*l)[v];
      }
    }
    poly = std::move(next);
  }
  std::array<Rational, kTerms> c;
  c.fill(Rational(0));
  const auto& mons = monomials();
  for (int i = 0; i < kTerms; ++i) {
    const auto it = poly.find(mons[i]);
    if (it != poly.end()) c[i] = it->second;
  }
  return QuarticForm(c);
}

std::vector<QuarticForm> fit_quartics(const std::vector<HomPoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw DegeneratePoints();
  Mat m;
  const auto& mons = QuarticForm::monomials();
  for (const HomPoint& p : pts) {
    Vec row(QuarticForm::kTerms);
    for (int i = 0; i < QuarticForm::kTerms; ++i)
      row[i] = pow_int(p[0], mons[i][0]) * pow_int(p[1], mons[i][1]) * pow_int(p[2], mons[i][2]);
    m.push_back(std::move(row));
  }
  std::vector<QuarticForm> out;
  for (Vec& v : nullspace(std::move(m), QuarticForm::kTerms)) {
    std::array<Rational, QuarticForm::kTerms> c;
    for (int i = 0; i < QuarticForm::kTerms; ++i) c[i] = v[i];
    out.emplace_back(c);
  }
  return out;
}

bool in_span(const QuarticForm& f, const std::vector<QuarticForm>& basis) {
  // rank([basis]) == rank([basis; f])
  Mat m;
  for (const QuarticForm& b : basis) m.push_back(Vec(b.coeffs().begin(), b.coeffs().end()));
  const int r0 = rank(m);
  m.push_back(Vec(f.coeffs().begin(), f.coeffs().end()));
  return rank(std::move(m)) == r0;
}

}  // namespace trigroup
