#include "trigroup/json_io.hpp"

namespace trigroup {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected a rational as string or integer, got " + j.dump());
}

Triple triple_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(std::string(what) + " must be an array of three rationals");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

Json triple_to_json(const Triple& t) {
  return Json::array({t[0].str(), t[1].str(), t[2].str()});
}

template <typename T>
std::array<T, 3> three(const Json& j, const char* what, T (*parse)(const Json&)) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(std::string(what) + " must be an array of three entries");
  return {parse(j[0]), parse(j[1]), parse(j[2])};
}

}  // namespace

Json to_json(const HomPoint& p) { return triple_to_json(p.coords()); }

HomPoint point_from_json(const Json& j) {
  try {
    return HomPoint(triple_from_json(j, "point"));
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid point: ") + e.what());
  }
}

Json to_json(const HomLine& l) { return triple_to_json(l.coeffs()); }

HomLine line_from_json(const Json& j) {
  try {
    return HomLine(triple_from_json(j, "line"));
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid line: ") + e.what());
  }
}

Json to_json(const Conic& c) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(triple_to_json(c.matrix()[i]));
  return rows;
}

Conic conic_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("conic must be a 3x3 matrix");
  Matrix3 m;
  for (int i = 0; i < 3; ++i) m[i] = triple_from_json(j[i], "conic row");
  try {
    return Conic(m);
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid conic: ") + e.what());
  }
}

Json to_json(const TriangleElement& t) {
  return Json{{"kind", kind_name(t.kind())}, {"delta", triple_to_json(t.delta())}};
}

TriangleElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("delta"))
    throw ParseError("element must be an object with a 'delta' array");
  const TriangleElement t(triple_from_json(j["delta"], "delta"));
  if (j.contains("kind")) {
    const std::string want = j["kind"].get<std::string>();
    if (want != kind_name(t.kind()))
      throw ParseError("element kind '" + want + "' does not match its coordinates (" +
                       kind_name(t.kind()) + ")");
  }
  return t;
}

Json to_json(const GeometricTriangle& t, const std::string& frame_label) {
  Json v = Json::array();
  for (const HomPoint& p : t.v) v.push_back(to_json(p));
  return Json{{"vertices", v}, {"frame", frame_label}};
}

GeometricTriangle triangle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw ParseError("triangle must be an object with a 'vertices' array");
  const auto v = three<HomPoint>(j["vertices"], "vertices", point_from_json);
  return GeometricTriangle{v};
}

Json to_json(const ReferenceFrame& f, const std::string& label) {
  Json v = Json::array();
  for (int i = 0; i < 3; ++i) v.push_back(to_json(f.vertex(i)));
  return Json{{"label", label}, {"vertices", v}};
}

ReferenceFrame frame_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw ParseError("frame must be an object with a 'vertices' array");
  const auto v = three<HomPoint>(j["vertices"], "vertices", point_from_json);
  try {
    return ReferenceFrame(v[0], v[1], v[2]);
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid frame: ") + e.what());
  }
}

Json to_json(const CentralScene& s) {
  Json l = Json::array(), a = Json::array(), b = Json::array();
  for (int i = 0; i < 3; ++i) {
    l.push_back(to_json(s.l[i]));
    a.push_back(to_json(s.A[i]));
    b.push_back(to_json(s.B[i]));
  }
  return Json{{"model", "central"}, {"S", to_json(s.S)}, {"l", l}, {"A", a}, {"B", b}};
}

CentralScene central_scene_from_json(const Json& j) {
  if (!j.is_object() || j.value("model", "") != "central")
    throw ParseError("expected a scene with model 'central'");
  CentralScene s{point_from_json(j.at("S")),
                 three<HomLine>(j.at("l"), "l", line_from_json),
                 three<HomPoint>(j.at("A"), "A", point_from_json),
                 three<HomPoint>(j.at("B"), "B", point_from_json)};
  try {
    s.validate();
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid central scene: ") + e.what());
  }
  return s;
}

Json to_json(const AxisScene& s) {
  Json l = Json::array(), a = Json::array(), b = Json::array();
  for (int i = 0; i < 3; ++i) {
    l.push_back(to_json(s.L[i]));
    a.push_back(to_json(s.A[i]));
    b.push_back(to_json(s.B[i]));
  }
  return Json{{"model", "axis"}, {"s", to_json(s.s)}, {"L", l}, {"A", a}, {"B", b}};
}

AxisScene axis_scene_from_json(const Json& j) {
  if (!j.is_object() || j.value("model", "") != "axis")
    throw ParseError("expected a scene with model 'axis'");
  AxisScene s{line_from_json(j.at("s")),
              three<HomPoint>(j.at("L"), "L", point_from_json),
              three<HomPoint>(j.at("A"), "A", point_from_json),
              three<HomPoint>(j.at("B"), "B", point_from_json)};
  try {
    s.validate();
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid axis scene: ") + e.what());
  }
  return s;
}

Json to_json(const ConicHexagon& h) {
  Json a = Json::array(), b = Json::array();
  for (int i = 0; i < 3; ++i) {
    a.push_back(to_json(h.A[i]));
    b.push_back(to_json(h.B[i]));
  }
  return Json{{"model", "conic_hexagon"}, {"conic", to_json(h.conic)}, {"A", a}, {"B", b}};
}

ConicHexagon hexagon_from_json(const Json& j) {
  if (!j.is_object() || j.value("model", "") != "conic_hexagon")
    throw ParseError("expected a scene with model 'conic_hexagon'");
  ConicHexagon h{conic_from_json(j.at("conic")),
                 three<HomPoint>(j.at("A"), "A", point_from_json),
                 three<HomPoint>(j.at("B"), "B", point_from_json)};
  try {
    h.validate();
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid hexagon: ") + e.what());
  }
  return h;
}

std::map<std::string, TriangleElement> elements_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("inputs must be an object of named elements");
  std::map<std::string, TriangleElement> out;
  for (const auto& [name, value] : j.items()) out.emplace(name, element_from_json(value));
  return out;
}

}  // namespace trigroup
