#pragma once

#include <map>
#include <string>

#include "trigroup/triangle_group.hpp"

namespace trigroup {

struct EvalOptions {
  /// Route '#' through the geometric construction instead of coordinates.
  bool geometric = false;
  ReferenceFrame frame = ReferenceFrame::standard();
};

/// Triangle arithmetic over named elements: '#' is the pre-sum, '+' the
/// group sum, unary '-' the inverse, and half(...) the halving operator.
/// Operators evaluate left to right; mixing '#' and '+' at one nesting
/// level requires explicit parentheses (the two have no relative
/// precedence). Throws ParseError for malformed input and Unsupported when
/// the geometric route is forced on a pairing without a geometric rule.
TriangleElement eval_expression(const std::string& text,
                                const std::map<std::string, TriangleElement>& inputs,
                                const EvalOptions& opts = {});

}  // namespace trigroup
