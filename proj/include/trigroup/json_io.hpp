#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "trigroup/conic.hpp"
#include "trigroup/scenes.hpp"
#include "trigroup/triangle_group.hpp"

namespace trigroup {

using Json = nlohmann::json;

// Points and lines travel as arrays of three strings, each "num/den" or a
// plain integer string. Canonical form is enforced on read.

Json to_json(const HomPoint& p);
HomPoint point_from_json(const Json& j);

Json to_json(const HomLine& l);
HomLine line_from_json(const Json& j);

Json to_json(const Conic& c);
Conic conic_from_json(const Json& j);

Json to_json(const TriangleElement& t);
TriangleElement element_from_json(const Json& j);

Json to_json(const GeometricTriangle& t, const std::string& frame_label = "E");
GeometricTriangle triangle_from_json(const Json& j);

Json to_json(const ReferenceFrame& f, const std::string& label = "E");
ReferenceFrame frame_from_json(const Json& j);

Json to_json(const CentralScene& s);
CentralScene central_scene_from_json(const Json& j);

Json to_json(const AxisScene& s);
AxisScene axis_scene_from_json(const Json& j);

Json to_json(const ConicHexagon& h);
ConicHexagon hexagon_from_json(const Json& j);

/// Named elements for the expression evaluator.
std::map<std::string, TriangleElement> elements_from_json(const Json& j);

}  // namespace trigroup
