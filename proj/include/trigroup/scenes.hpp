#pragma once

#include <array>
#include <cstdint>

#include "trigroup/conic.hpp"
#include "trigroup/projective.hpp"
#include "trigroup/rng.hpp"

namespace trigroup {

/// Two triangles perspective from the point S, with A[i], B[i] on the
/// concurrent lines l[i].
struct CentralScene {
  HomPoint S;
  std::array<HomLine, 3> l;
  std::array<HomPoint, 3> A;
  std::array<HomPoint, 3> B;

  /// Throws GeometryError when a structural invariant fails.
  void validate() const;

  CentralScene transformed(const ProjMap& map) const;
};

/// Two triangles perspective from the line s: side A_iA_j and side B_iB_j
/// both pass through L_k on s.
struct AxisScene {
  HomLine s;
  std::array<HomPoint, 3> L;
  std::array<HomPoint, 3> A;
  std::array<HomPoint, 3> B;

  void validate() const;

  AxisScene transformed(const ProjMap& map) const;
};

/// Hexagon inscribed in a conic, labeled in the traversal order
/// A1 B3 A2 B1 A3 B2.
struct ConicHexagon {
  Conic conic;
  std::array<HomPoint, 3> A;
  std::array<HomPoint, 3> B;

  void validate() const;
};

/// Two collinear triples for the Pappus configuration.
struct PappusInstance {
  HomLine la, lb;
  std::array<HomPoint, 3> A;
  std::array<HomPoint, 3> B;

  void validate() const;
};

/// Deterministic general-position generators. Rejection-resample with an
/// explicit predicate list; after `kRejectionBudget` failed attempts they
/// throw GeneralPositionExhausted (that signals a broken generator, not bad
/// luck).
inline constexpr int kRejectionBudget = 1000;

CentralScene random_central_scene(std::uint64_t seed);
AxisScene random_axis_scene(std::uint64_t seed);
ConicHexagon random_conic_hexagon(std::uint64_t seed);
PappusInstance random_pappus_instance(std::uint64_t seed);

/// The polar image of a central scene under the polarity of the given
/// conic: an axis scene whose triangles have as vertices the poles of the
/// central triangles' sides.
AxisScene polarize(const CentralScene& scene, const Conic& polarity);

}  // namespace trigroup
