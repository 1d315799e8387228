#include <doctest.h>

#include "trigroup/expr.hpp"
#include "trigroup/json_io.hpp"

using namespace trigroup;

TEST_CASE("point json round trip enforces canonical form") {
  const Json j = Json::array({"2/4", "0", "1"});
  const HomPoint p = point_from_json(j);
  CHECK(p == HomPoint(1, 0, 2));
  CHECK(to_json(p) == Json::array({"1", "0", "2"}));
  CHECK_THROWS_AS(point_from_json(Json::array({"0", "0", "0"})), ParseError);
  CHECK_THROWS_AS(point_from_json(Json::array({"1", "2"})), ParseError);
  CHECK_THROWS_AS(point_from_json(Json::array({"x", "0", "1"})), ParseError);
}

TEST_CASE("element json carries a kind tag that must match") {
  const TriangleElement t(1, 0, 0);
  const Json j = to_json(t);
  CHECK(j["kind"] == "geometric");
  CHECK(element_from_json(j) == t);
  Json wrong = j;
  wrong["kind"] = "pseudo";
  CHECK_THROWS_AS(element_from_json(wrong), ParseError);
  // The tag is optional on input.
  CHECK(element_from_json(Json{{"delta", Json::array({"0", "0", "0"})}}) ==
        TriangleElement::zero());
}

TEST_CASE("scene json round trips and validates") {
  const CentralScene scene = random_central_scene(9);
  const Json j = to_json(scene);
  const CentralScene back = central_scene_from_json(j);
  CHECK(to_json(back) == j);
  Json corrupt = j;
  corrupt["A"][0] = corrupt["B"][0];
  CHECK_THROWS_AS(central_scene_from_json(corrupt), ParseError);

  const AxisScene axis = random_axis_scene(9);
  CHECK(to_json(axis_scene_from_json(to_json(axis))) == to_json(axis));

  const ConicHexagon hex = random_conic_hexagon(9);
  CHECK(to_json(hexagon_from_json(to_json(hex))) == to_json(hex));
}

TEST_CASE("frame and triangle json") {
  const ReferenceFrame f = ReferenceFrame::standard();
  const ReferenceFrame back = frame_from_json(to_json(f));
  CHECK(back == f);
  const GeometricTriangle t = triangle_from_bary(TriangleElement(1, 0, 0), f);
  const GeometricTriangle t2 = triangle_from_json(to_json(t));
  CHECK(t2 == t);
  CHECK(to_json(t)["frame"] == "E");
}

TEST_CASE("expression evaluation: spec values") {
  const std::map<std::string, TriangleElement> inputs{
      {"A", TriangleElement(1, 0, 0)}, {"B", TriangleElement(0, 1, 0)}};
  CHECK(eval_expression("A + B", inputs) == TriangleElement(1, 1, 0));
  CHECK(eval_expression("A # B", inputs) == TriangleElement(-1, -1, 0));
  CHECK(eval_expression("A # -A", inputs) == TriangleElement::zero());
  CHECK(eval_expression("half(A)", inputs) == TriangleElement(Rational(-1, 2), 0, 0));
  CHECK(eval_expression("-A", inputs) == TriangleElement(-1, 0, 0));
  CHECK(eval_expression("A + -B", inputs) == TriangleElement(1, -1, 0));
}

TEST_CASE("expression evaluation: shape of the grammar") {
  const std::map<std::string, TriangleElement> inputs{{"A", TriangleElement(1, 0, 0)},
                                                      {"B", TriangleElement(0, 1, 0)},
                                                      {"C", TriangleElement(0, 0, 1)}};
  // Left-to-right chains of one operator.
  CHECK(eval_expression("A # B # C", inputs) ==
        presum_coords(presum_coords(inputs.at("A"), inputs.at("B")), inputs.at("C")));
  CHECK(eval_expression("A + B + C", inputs) == TriangleElement(1, 1, 1));
  // Mixing needs parentheses.
  CHECK_THROWS_AS(eval_expression("A + B # C", inputs), ParseError);
  CHECK(eval_expression("A + (B # C)", inputs) ==
        sum(inputs.at("A"), presum_coords(inputs.at("B"), inputs.at("C"))));
  CHECK(eval_expression("(A + B) # C", inputs) ==
        presum_coords(TriangleElement(1, 1, 0), inputs.at("C")));
  // Errors.
  CHECK_THROWS_AS(eval_expression("A +", inputs), ParseError);
  CHECK_THROWS_AS(eval_expression("A - B", inputs), ParseError);  // only unary minus exists
  CHECK_THROWS_AS(eval_expression("D", inputs), ParseError);
  CHECK_THROWS_AS(eval_expression("A B", inputs), ParseError);
  CHECK_THROWS_AS(eval_expression("(A + B", inputs), ParseError);
  CHECK_THROWS_AS(eval_expression("A @ B", inputs), ParseError);
  CHECK_THROWS_AS(eval_expression("", inputs), ParseError);
}

TEST_CASE("expression evaluation: geometric routing") {
  EvalOptions geo;
  geo.geometric = true;
  const std::map<std::string, TriangleElement> inputs{
      {"A", TriangleElement(1, 0, 0)},
      {"B", TriangleElement(0, 1, 0)},
      {"P", TriangleElement::completely_pseudo(0)},
      {"Q", TriangleElement::completely_pseudo(1)}};
  CHECK(eval_expression("A # B", inputs, geo) == TriangleElement(-1, -1, 0));
  CHECK_THROWS_AS(eval_expression("P # Q", inputs, geo), Unsupported);
}

TEST_CASE("named element inputs") {
  const Json j = Json{{"A", Json{{"delta", Json::array({"1", "0", "0"})}}},
                      {"B", Json{{"kind", "pseudo"}, {"delta", Json::array({"0", "0", "0"})}}}};
  const auto inputs = elements_from_json(j);
  CHECK(inputs.size() == 2);
  CHECK(inputs.at("B") == TriangleElement::zero());
  CHECK_THROWS_AS(elements_from_json(Json::array()), ParseError);
}
