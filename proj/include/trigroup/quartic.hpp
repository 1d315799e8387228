#pragma once

#include <array>
#include <vector>

#include "trigroup/projective.hpp"

namespace trigroup {

/// Homogeneous quartic form in (x, y, z): 15 coefficients over the
/// graded-lex monomial order x^4, x^3y, x^3z, x^2y^2, x^2yz, x^2z^2, xy^3,
/// xy^2z, xyz^2, xz^3, y^4, y^3z, y^2z^2, yz^3, z^4. Scale-normalized like
/// homogeneous triples, so equality is structural.
class QuarticForm {
 public:
  static constexpr int kTerms = 15;

  explicit QuarticForm(const std::array<Rational, kTerms>& coeffs);

  /// Exponent triples in coefficient order.
  static const std::array<std::array<int, 3>, kTerms>& monomials();

  /// Scale-covariant evaluation: f(lambda P) = lambda^4 f(P).
  Rational eval(const HomPoint& p) const;
  bool vanishes_at(const HomPoint& p) const { return eval(p).is_zero(); }

  /// The split quartic l1 * l2 * l3 * l4.
  static QuarticForm product_of_lines(const HomLine& l1, const HomLine& l2, const HomLine& l3,
                                      const HomLine& l4);

  const std::array<Rational, kTerms>& coeffs() const { return c_; }

  friend bool operator==(const QuarticForm& a, const QuarticForm& b) { return a.c_ == b.c_; }

 private:
  std::array<Rational, kTerms> c_;
};

/// Exact nullspace basis of the N x 15 evaluation matrix: all quartics
/// vanishing at every given point. An empty basis is a valid result.
std::vector<QuarticForm> fit_quartics(const std::vector<HomPoint>& pts);

/// Membership of a form in the rational span of a basis.
bool in_span(const QuarticForm& f, const std::vector<QuarticForm>& basis);

}  // namespace trigroup
