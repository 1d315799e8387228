#pragma once

#include <stdexcept>
#include <string>

namespace trigroup {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoincidentPoints : GeometryError {
  CoincidentPoints() : GeometryError("join of coincident points") {}
};

struct CoincidentLines : GeometryError {
  CoincidentLines() : GeometryError("meet of coincident lines") {}
};

struct NotCollinear : GeometryError {
  NotCollinear() : GeometryError("points are not collinear") {}
};

struct DegeneratePoints : GeometryError {
  DegeneratePoints() : GeometryError("repeated points") {}
};

struct DegenerateQuadruple : GeometryError {
  DegenerateQuadruple() : GeometryError("three of the four points are collinear") {}
};

struct UnderDetermined : GeometryError {
  UnderDetermined() : GeometryError("conic is not unique for these points") {}
};

struct TangentParameter : GeometryError {
  TangentParameter() : GeometryError("parameter line is tangent at the base point") {}
};

struct SideMismatch : GeometryError {
  SideMismatch() : GeometryError("triangle sides are not parallel to the reference triangle") {}
};

struct ZeroSum : GeometryError {
  ZeroSum() : GeometryError("element has zero coordinate sum (not geometric)") {}
};

struct NonZeroSum : GeometryError {
  NonZeroSum() : GeometryError("element has nonzero coordinate sum (not a pseudo element)") {}
};

struct CompletelyPseudoInput : GeometryError {
  CompletelyPseudoInput() : GeometryError("vertex directions degenerate for a completely-pseudo element") {}
};

struct Unsupported : GeometryError {
  using GeometryError::GeometryError;
};

struct GeneralPositionExhausted : GeometryError {
  GeneralPositionExhausted()
      : GeometryError("could not reach general position within the rejection budget") {}
};

struct GeneratorHealth : GeometryError {
  using GeometryError::GeometryError;
};

/// Names the first element of a construction that is undefined for the input.
struct DegenerateConstruction : GeometryError {
  std::string label;
  explicit DegenerateConstruction(std::string element)
      : GeometryError("degenerate construction: " + element), label(std::move(element)) {}
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace trigroup
