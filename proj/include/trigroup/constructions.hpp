#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trigroup/configuration.hpp"
#include "trigroup/scenes.hpp"

namespace trigroup {

/// Derived points of the central construction. Index convention: (i,j,k)
/// ranges over permutations of {0,1,2}; P(i,j) is the intersection of
/// A_iA_k and B_jB_k, S[k] = A_iA_j ∩ B_iB_j, and
/// C[k] = P(i,k)P(k,i) ∩ P(j,k)P(k,j).
struct CentralConstruction {
  std::array<std::array<std::optional<HomPoint>, 3>, 3> P_;  // P_[i][j], i != j
  std::array<HomPoint, 3> S;
  std::array<HomPoint, 3> C;

  const HomPoint& P(int i, int j) const { return *P_[i][j]; }
};

/// Throws DegenerateConstruction naming the first undefined element.
CentralConstruction main_construction_central(const CentralScene& scene);

/// The axis-model construction C_k = A_iB_j ∩ A_jB_i.
std::array<HomPoint, 3> main_construction_axis(const AxisScene& scene);

/// Step-by-step checks of the perspectivity proof of the generalized
/// Desargues theorem. Returns the first failed predicate, or nullopt when
/// every claim holds.
std::optional<std::string> proof1_failed_predicate(const CentralScene& scene);
bool verify_proof1_path(const CentralScene& scene);

/// The 4x4 line grid of the quartic-curve proof.
struct Proof2Grid {
  std::array<HomLine, 4> p, q, r;
  std::array<std::array<HomPoint, 4>, 4> grid;  // grid[i][j] = p_i ∩ q_j
  std::array<HomPoint, 3> c_prime;              // C'_1, C'_2, C'_3
};

Proof2Grid build_proof2_grid(const CentralScene& scene);
std::optional<std::string> proof2_failed_predicate(const CentralScene& scene);
bool verify_proof2_path(const CentralScene& scene);

/// Classic Pappus: the line carrying the three cross-joint intersections.
HomLine pappus_line(const std::array<HomPoint, 3>& A, const std::array<HomPoint, 3>& B);

/// Q_ij = A_iB_k ∩ B_jA_k for each permutation (i,j,k).
std::array<std::array<std::optional<HomPoint>, 3>, 3> cross_meets(
    const std::array<HomPoint, 3>& A, const std::array<HomPoint, 3>& B);

/// Common point of Q_12Q_21, Q_13Q_31, Q_23Q_32 for collinear triples.
HomPoint generalized_pappus_center(const std::array<HomPoint, 3>& A,
                                   const std::array<HomPoint, 3>& B);

/// Same concurrency for a hexagon inscribed in a conic.
HomPoint generalized_pascal_center(const ConicHexagon& hex);

/// Classic Pascal line of the hexagon A1 B3 A2 B1 A3 B2.
HomLine pascal_line(const ConicHexagon& hex);

/// S_ik = A_iA_j ∩ B_jB_k; the three lines S_jkS_kj meet in the returned
/// point.
HomPoint another_pascal_center(const ConicHexagon& hex);

struct ReyeCounts {
  int point_count = 0;
  int lines_per_point = 0;
  int line_count = 0;
  int points_per_line = 0;
  friend bool operator==(const ReyeCounts&, const ReyeCounts&) = default;
};

/// The incidence structure on {S, A_i, B_i, C_i, P_ij} and
/// {l_i, sides of A, sides of B, P_ijP_ji}: 16 points of degree 3 and 12
/// lines of degree 4 (the dual Reye parameters).
Configuration reye_configuration(const CentralScene& scene);
ReyeCounts reye_dual_counts(const CentralScene& scene);

}  // namespace trigroup
