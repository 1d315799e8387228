#include <doctest.h>

#include "trigroup/constructions.hpp"
#include "trigroup/json_io.hpp"
#include "trigroup/projmap.hpp"
#include "trigroup/rng.hpp"
#include "trigroup/triangle_group.hpp"

using namespace trigroup;

namespace {

HomPoint rnd_point(SplitMix64& rng) {
  return HomPoint::affine(rng.coordinate(), rng.coordinate());
}

ProjMap random_map(SplitMix64& rng) {
  const std::array<HomPoint, 4> basis{HomPoint(1, 0, 0), HomPoint(0, 1, 0), HomPoint(0, 0, 1),
                                      HomPoint(1, 1, 1)};
  for (;;) {
    try {
      return map_from_correspondence(
          basis, {rnd_point(rng), rnd_point(rng), rnd_point(rng), rnd_point(rng)});
    } catch (const GeometryError&) {
    }
  }
}

}  // namespace

TEST_CASE("scene generation is deterministic and valid") {
  const CentralScene a = random_central_scene(1);
  const CentralScene b = random_central_scene(1);
  CHECK(to_json(a) == to_json(b));
  a.validate();
  for (std::uint64_t seed = 0; seed < 100; ++seed) random_central_scene(seed).validate();
}

TEST_CASE("generalized Desargues on random scenes") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CentralScene scene = random_central_scene(seed);
    const CentralConstruction c = main_construction_central(scene);
    for (int i = 0; i < 3; ++i) CHECK(incident(c.C[i], scene.l[i]));
    CHECK(collinear(c.S[0], c.S[1], c.S[2]));
  }
}

TEST_CASE("central construction commutes with projective maps") {
  SplitMix64 rng(55);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CentralScene scene = random_central_scene(seed);
    const ProjMap m = random_map(rng);
    CentralScene mapped = scene.transformed(m);
    try {
      mapped.validate();
    } catch (const GeometryError&) {
      continue;  // image touched a guarded special position
    }
    const CentralConstruction direct = main_construction_central(mapped);
    const CentralConstruction original = main_construction_central(scene);
    for (int k = 0; k < 3; ++k) {
      CHECK(direct.C[k] == m(original.C[k]));
      CHECK(direct.S[k] == m(original.S[k]));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(direct.P(i, j) == m(original.P(i, j)));
  }
}

TEST_CASE("proof path one verifies step by step") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CentralScene scene = random_central_scene(seed);
    const auto failed = proof1_failed_predicate(scene);
    if (failed) FAIL("proof1 predicate failed: ", *failed, " at seed ", seed);
    CHECK(verify_proof1_path(scene));
  }
}

TEST_CASE("proof path two verifies the grid and the curve argument") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CentralScene scene = random_central_scene(seed);
    const auto failed = proof2_failed_predicate(scene);
    if (failed) FAIL("proof2 predicate failed: ", *failed, " at seed ", seed);
  }
}

TEST_CASE("proof paths agree with the direct construction") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const CentralScene scene = random_central_scene(seed);
    const CentralConstruction c = main_construction_central(scene);
    const Proof2Grid g = build_proof2_grid(scene);
    for (int k = 0; k < 3; ++k) CHECK(g.c_prime[k] == c.C[k]);
  }
}

TEST_CASE("axis construction: sides of C pass through the L points") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AxisScene scene = random_axis_scene(seed);
    const auto C = main_construction_axis(scene);
    for (int k = 0; k < 3; ++k) {
      const int i = (k + 1) % 3, j = (k + 2) % 3;
      CHECK(incident(scene.L[k], join(C[i], C[j])));
      CHECK(incident(scene.L[k], join(scene.A[i], scene.A[j])));
    }
  }
}

TEST_CASE("axis construction commutes with projective maps") {
  SplitMix64 rng(56);
  int done = 0;
  for (std::uint64_t seed = 0; seed < 60 && done < 40; ++seed) {
    const AxisScene scene = random_axis_scene(seed);
    const ProjMap m = random_map(rng);
    AxisScene mapped = scene.transformed(m);
    try {
      mapped.validate();
    } catch (const GeometryError&) {
      continue;
    }
    const auto direct = main_construction_axis(mapped);
    const auto original = main_construction_axis(scene);
    for (int k = 0; k < 3; ++k) CHECK(direct[k] == m(original[k]));
    ++done;
  }
  CHECK(done >= 30);
}

TEST_CASE("polarity carries the central construction to the axis construction") {
  const Conic polarity(Matrix3{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}});
  int done = 0;
  for (std::uint64_t seed = 0; seed < 60 && done < 40; ++seed) {
    const CentralScene scene = random_central_scene(seed);
    const AxisScene dual = polarize(scene, polarity);
    try {
      dual.validate();
    } catch (const GeometryError&) {
      continue;
    }
    const CentralConstruction c = main_construction_central(scene);
    const auto cdual = main_construction_axis(dual);
    for (int k = 0; k < 3; ++k) {
      const int i = (k + 1) % 3, j = (k + 2) % 3;
      CHECK(cdual[k] == polarity.pole(join(c.C[i], c.C[j])));
    }
    ++done;
  }
  CHECK(done >= 30);
}

TEST_CASE("axis model with the axis at infinity gives parallel sides") {
  const ReferenceFrame frame = ReferenceFrame::standard();
  const TriangleElement x(1, Rational(1, 2), Rational(1, 3));
  const TriangleElement y(Rational(1, 4), 2, Rational(-1, 2));
  const GeometricTriangle A = triangle_from_bary(x, frame);
  const GeometricTriangle B = triangle_from_bary(y, frame);
  const AxisScene scene{HomLine::at_infinity(),
                        {frame.side_direction_point(0), frame.side_direction_point(1),
                         frame.side_direction_point(2)},
                        A.v,
                        B.v};
  scene.validate();
  const auto C = main_construction_axis(scene);
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    const HomPoint common = meet(join(C[i], C[j]), join(A.v[i], A.v[j]));
    CHECK(common.is_infinite());
    CHECK(incident(common, join(B.v[i], B.v[j])));
  }
}

TEST_CASE("pappus line on random instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PappusInstance inst = random_pappus_instance(seed);
    const HomLine l = pappus_line(inst.A, inst.B);
    const HomPoint m1 = meet(join(inst.A[0], inst.B[1]), join(inst.A[1], inst.B[0]));
    CHECK(incident(m1, l));
  }
}

TEST_CASE("pappus line equivariance and degeneracies") {
  SplitMix64 rng(77);
  const PappusInstance inst = random_pappus_instance(3);
  const ProjMap m = random_map(rng);
  const std::array<HomPoint, 3> ma{m(inst.A[0]), m(inst.A[1]), m(inst.A[2])};
  const std::array<HomPoint, 3> mb{m(inst.B[0]), m(inst.B[1]), m(inst.B[2])};
  CHECK(pappus_line(ma, mb) == m(pappus_line(inst.A, inst.B)));

  // Both triples on one line is rejected.
  const std::array<HomPoint, 3> on_x{HomPoint(0, 0, 1), HomPoint(1, 0, 1), HomPoint(2, 0, 1)};
  const std::array<HomPoint, 3> on_x2{HomPoint(3, 0, 1), HomPoint(4, 0, 1), HomPoint(5, 0, 1)};
  CHECK_THROWS_AS(pappus_line(on_x, on_x2), DegenerateConstruction);
}

TEST_CASE("generalized pappus center exists and the reduction holds") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PappusInstance inst = random_pappus_instance(seed);
    const HomPoint center = generalized_pappus_center(inst.A, inst.B);
    const auto Q = cross_meets(inst.A, inst.B);
    CHECK(incident(center, join(*Q[0][1], *Q[1][0])));
    CHECK(incident(center, join(*Q[0][2], *Q[2][0])));
    CHECK(incident(center, join(*Q[1][2], *Q[2][1])));
  }
}

TEST_CASE("hexagon generation is deterministic and on the conic") {
  const ConicHexagon a = random_conic_hexagon(5);
  const ConicHexagon b = random_conic_hexagon(5);
  CHECK(to_json(a) == to_json(b));
  a.validate();
}

TEST_CASE("generalized pascal and the classic pascal line") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ConicHexagon hex = random_conic_hexagon(seed);
    (void)generalized_pascal_center(hex);
    (void)pascal_line(hex);
  }
}

TEST_CASE("generalized pascal is equivariant") {
  SplitMix64 rng(78);
  int done = 0;
  for (std::uint64_t seed = 0; seed < 30 && done < 10; ++seed) {
    const ConicHexagon hex = random_conic_hexagon(seed);
    const ProjMap m = random_map(rng);
    ConicHexagon mapped{hex.conic.transformed(m),
                        {m(hex.A[0]), m(hex.A[1]), m(hex.A[2])},
                        {m(hex.B[0]), m(hex.B[1]), m(hex.B[2])}};
    try {
      mapped.validate();
      CHECK(generalized_pascal_center(mapped) == m(generalized_pascal_center(hex)));
      ++done;
    } catch (const GeometryError&) {
    }
  }
  CHECK(done >= 10);
}

TEST_CASE("another pascal generalization with its intermediate claim") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ConicHexagon hex = random_conic_hexagon(seed);
    (void)another_pascal_center(hex);
    const auto& A = hex.A;
    const auto& B = hex.B;
    const HomPoint S = meet(join(A[2], B[2]), join(A[1], B[1]));
    const HomPoint s32 = meet(join(A[2], A[0]), join(B[0], B[1]));
    const HomPoint s23 = meet(join(A[1], A[0]), join(B[0], B[2]));
    CHECK(collinear(S, s32, s23));
  }
}

TEST_CASE("reye dual counts") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CentralScene scene = random_central_scene(seed);
    CHECK(reye_dual_counts(scene) == ReyeCounts{16, 3, 12, 4});
  }
}

TEST_CASE("reye configuration bookkeeping") {
  const CentralScene scene = random_central_scene(17);
  Configuration conf = reye_configuration(scene);
  CHECK(conf.points().size() == 16);
  CHECK(conf.lines().size() == 12);
  CHECK(conf.incidences().size() == 48);
  for (const auto& [label, p] : conf.points()) CHECK(conf.point_degree(label) == 3);
  for (const auto& [label, l] : conf.lines()) CHECK(conf.line_degree(label) == 4);
  // Deleting one line drops exactly its four incidences.
  CHECK(conf.remove_line("l1"));
  CHECK(conf.incidences().size() == 44);
  CHECK_FALSE(conf.remove_line("l1"));
}
