#include "trigroup/constructions.hpp"

#include <map>

namespace trigroup {

namespace {

int third(int i, int j) { return 3 - i - j; }

std::string n1(int i) { return std::to_string(i + 1); }

/// join that rebrands a coincidence as the named degenerate element.
HomLine join_or_degenerate(const HomPoint& p, const HomPoint& q, const std::string& label) {
  if (p == q) throw DegenerateConstruction(label);
  return join(p, q);
}

HomPoint meet_or_degenerate(const HomLine& l, const HomLine& m, const std::string& label) {
  if (l == m) throw DegenerateConstruction(label);
  return meet(l, m);
}

}  // namespace

CentralConstruction main_construction_central(const CentralScene& scene) {
  const auto& A = scene.A;
  const auto& B = scene.B;
  std::array<std::array<std::optional<HomPoint>, 3>, 3> P;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = third(i, j);
      const std::string label = "P" + n1(i) + n1(j);
      const HomLine la = join_or_degenerate(A[i], A[k], label);
      const HomLine lb = join_or_degenerate(B[j], B[k], label);
      P[i][j] = meet_or_degenerate(la, lb, label);
    }
  }
  const auto sk = [&](int k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    const std::string label = "S" + n1(k);
    return meet_or_degenerate(join_or_degenerate(A[i], A[j], label),
                              join_or_degenerate(B[i], B[j], label), label);
  };
  const auto ck = [&](int k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    const std::string label = "C" + n1(k);
    const HomLine l1 = join_or_degenerate(*P[i][k], *P[k][i], label);
    const HomLine l2 = join_or_degenerate(*P[j][k], *P[k][j], label);
    return meet_or_degenerate(l1, l2, label);
  };
  return CentralConstruction{P, {sk(0), sk(1), sk(2)}, {ck(0), ck(1), ck(2)}};
}

std::array<HomPoint, 3> main_construction_axis(const AxisScene& scene) {
  const auto ck = [&](int k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    const std::string label = "C" + n1(k);
    const HomLine l1 = join_or_degenerate(scene.A[i], scene.B[j], label);
    const HomLine l2 = join_or_degenerate(scene.A[j], scene.B[i], label);
    return meet_or_degenerate(l1, l2, label);
  };
  return {ck(0), ck(1), ck(2)};
}

std::optional<std::string> proof1_failed_predicate(const CentralScene& scene) {
  const CentralConstruction c = main_construction_central(scene);
  const auto& A = scene.A;
  const auto& B = scene.B;
  try {
    // The two auxiliary lines collapse onto triangle sides.
    const HomLine p21_p23 = join(c.P(1, 0), c.P(1, 2));
    if (p21_p23 != join(B[2], B[0])) return "line P21P23 equals line B3B1";
    const HomLine p12_p32 = join(c.P(0, 1), c.P(2, 1));
    if (p12_p32 != join(A[0], A[2])) return "line P12P32 equals line A1A3";
    if (meet(p21_p23, p12_p32) != c.S[1]) return "lines P21P23 and P12P32 meet at S2";
    if (!collinear(c.S[0], c.S[1], c.S[2])) return "S1, S2, S3 collinear (Desargues)";
    if (!incident(c.S[1], join(c.S[0], c.S[2]))) return "S2 on line S1S3";
    // S1P21P12 and S3P23P32 are perspective from S2; by Desargues the meets
    // of corresponding sides are A2, B2, C2 and they are collinear.
    const HomPoint a2 = meet(join(c.S[0], c.P(1, 0)), join(c.S[2], c.P(1, 2)));
    if (a2 != A[1]) return "side meet S1P21 ^ S3P23 is A2";
    const HomPoint b2 = meet(join(c.S[0], c.P(0, 1)), join(c.S[2], c.P(2, 1)));
    if (b2 != B[1]) return "side meet S1P12 ^ S3P32 is B2";
    const HomPoint c2 = meet(join(c.P(1, 0), c.P(0, 1)), join(c.P(1, 2), c.P(2, 1)));
    if (c2 != c.C[1]) return "side meet P21P12 ^ P23P32 is C2";
    if (!collinear(a2, b2, c2)) return "A2, B2, C2 collinear";
    for (int i = 0; i < 3; ++i)
      if (!collinear(A[i], B[i], c.C[i])) return "C" + n1(i) + " on line A" + n1(i) + "B" + n1(i);
  } catch (const CoincidentPoints&) {
    throw DegenerateConstruction("proof-path auxiliary join");
  } catch (const CoincidentLines&) {
    throw DegenerateConstruction("proof-path auxiliary meet");
  }
  return std::nullopt;
}

bool verify_proof1_path(const CentralScene& scene) {
  return !proof1_failed_predicate(scene).has_value();
}

Proof2Grid build_proof2_grid(const CentralScene& scene) {
  const CentralConstruction c = main_construction_central(scene);
  const auto& A = scene.A;
  const auto& B = scene.B;
  const HomLine p12_p21 = join_or_degenerate(c.P(0, 1), c.P(1, 0), "line P12P21");
  const HomLine p23_p32 = join_or_degenerate(c.P(1, 2), c.P(2, 1), "line P23P32");
  const HomPoint c1 = meet_or_degenerate(p12_p21, scene.l[0], "C'1");
  const HomPoint c2 = meet_or_degenerate(p12_p21, p23_p32, "C'2");
  const HomPoint c3 = meet_or_degenerate(p23_p32, scene.l[2], "C'3");
  const std::array<HomLine, 4> p{join(A[0], A[1]), join(B[0], B[1]), scene.l[2], p12_p21};
  const std::array<HomLine, 4> q{join(A[1], A[2]), join(B[2], B[1]), scene.l[0], p23_p32};
  const std::array<HomLine, 4> r{join_or_degenerate(c.P(2, 0), c.P(0, 2), "line P31P13"),
                                 join(A[0], A[2]), join(B[0], B[2]), scene.l[1]};
  const auto cell = [&](int i, int j) {
    return meet_or_degenerate(p[i], q[j], "grid A" + n1(i) + n1(j));
  };
  const auto row = [&](int i) {
    return std::array<HomPoint, 4>{cell(i, 0), cell(i, 1), cell(i, 2), cell(i, 3)};
  };
  return Proof2Grid{p, q, r, {row(0), row(1), row(2), row(3)}, {c1, c2, c3}};
}

std::optional<std::string> proof2_failed_predicate(const CentralScene& scene) {
  const CentralConstruction c = main_construction_central(scene);
  const Proof2Grid g = build_proof2_grid(scene);
  const auto& A = scene.A;
  const auto& B = scene.B;

  // The sixteen p_i ^ q_j meets are exactly the configuration points.
  const std::array<std::array<HomPoint, 4>, 4> expected{
      std::array<HomPoint, 4>{A[1], c.P(0, 2), A[0], c.P(1, 2)},
      std::array<HomPoint, 4>{c.P(2, 0), B[1], B[0], c.P(2, 1)},
      std::array<HomPoint, 4>{A[2], B[2], scene.S, g.c_prime[2]},
      std::array<HomPoint, 4>{c.P(1, 0), c.P(0, 1), g.c_prime[0], g.c_prime[1]}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (g.grid[i][j] != expected[i][j]) return "grid point A" + n1(i) + n1(j) + " identification";

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          if ((i != m || j != n) && g.grid[i][j] == g.grid[m][n])
            throw DegenerateConstruction("grid points coincide");

  // The thirteen unconditioned points lie on the union r1 u r2 u r3 u r4.
  const auto on_some_r = [&](const HomPoint& pt) {
    for (int i = 0; i < 4; ++i)
      if (incident(pt, g.r[i])) return true;
    return false;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool conditioned = (i == 2 && j == 3) || (i == 3 && j == 2) || (i == 3 && j == 3);
      if (!conditioned && !on_some_r(g.grid[i][j]))
        return "grid point A" + n1(i) + n1(j) + " on the union of the r lines";
    }

  // No r line may carry five of the sixteen points.
  for (int i = 0; i < 4; ++i) {
    int count = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (incident(g.grid[a][b], g.r[i])) ++count;
    if (count > 4) throw DegenerateConstruction("five grid points on r" + n1(i));
    if (count != 4) return "r" + n1(i) + " carries four configuration points";
  }

  if (!incident(g.c_prime[2], g.r[0])) return "C'3 lies on r1";
  if (!incident(g.c_prime[0], g.r[0])) return "C'1 lies on r1";
  if (!incident(g.c_prime[1], g.r[3])) return "C'2 lies on r4";

  for (int k = 0; k < 3; ++k)
    if (g.c_prime[k] != c.C[k]) return "C'" + n1(k) + " equals C" + n1(k);
  return std::nullopt;
}

bool verify_proof2_path(const CentralScene& scene) {
  return !proof2_failed_predicate(scene).has_value();
}

HomLine pappus_line(const std::array<HomPoint, 3>& A, const std::array<HomPoint, 3>& B) {
  if (!collinear(A[0], A[1], A[2]) || !collinear(B[0], B[1], B[2]))
    throw DegenerateConstruction("pappus input triples must be collinear");
  if (join(A[0], A[1]) == join(B[0], B[1]))
    throw DegenerateConstruction("pappus triples on a common line");
  std::array<HomPoint, 3> m{A[0], A[0], A[0]};
  int idx = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const std::string label = "pappus meet " + n1(i) + n1(j);
      m[idx++] = meet_or_degenerate(join_or_degenerate(A[i], B[j], label),
                                    join_or_degenerate(A[j], B[i], label), label);
    }
  if (m[0] == m[1] && m[1] == m[2]) throw DegenerateConstruction("pappus meets coincide");
  const int a = 0;
  const int b = (m[1] != m[0]) ? 1 : 2;
  const HomLine line = join(m[a], m[b]);
  for (const HomPoint& pt : m)
    if (!incident(pt, line)) throw GeometryError("pappus meets are not collinear");
  return line;
}

std::array<std::array<std::optional<HomPoint>, 3>, 3> cross_meets(
    const std::array<HomPoint, 3>& A, const std::array<HomPoint, 3>& B) {
  std::array<std::array<std::optional<HomPoint>, 3>, 3> Q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = third(i, j);
      const std::string label = "Q" + n1(i) + n1(j);
      Q[i][j] = meet_or_degenerate(join_or_degenerate(A[i], B[k], label),
                                   join_or_degenerate(B[j], A[k], label), label);
    }
  return Q;
}

namespace {

HomPoint concurrency_point(const std::array<std::array<std::optional<HomPoint>, 3>, 3>& Q,
                           const char* what) {
  std::array<HomLine, 3> g{HomLine::at_infinity(), HomLine::at_infinity(),
                           HomLine::at_infinity()};
  int idx = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      g[idx++] = join_or_degenerate(*Q[i][j], *Q[j][i],
                                    "line Q" + n1(i) + n1(j) + "Q" + n1(j) + n1(i));
  const HomPoint center = meet_or_degenerate(g[0], g[1], "center");
  if (!incident(center, g[2])) throw GeometryError(std::string(what) + ": lines not concurrent");
  return center;
}

}  // namespace

HomPoint generalized_pappus_center(const std::array<HomPoint, 3>& A,
                                   const std::array<HomPoint, 3>& B) {
  if (!collinear(A[0], A[1], A[2]) || !collinear(B[0], B[1], B[2]))
    throw DegenerateConstruction("pappus input triples must be collinear");
  return concurrency_point(cross_meets(A, B), "generalized pappus");
}

HomPoint generalized_pascal_center(const ConicHexagon& hex) {
  return concurrency_point(cross_meets(hex.A, hex.B), "generalized pascal");
}

HomLine pascal_line(const ConicHexagon& hex) {
  // Hexagon traversal A1 B3 A2 B1 A3 B2; opposite sides meet on one line.
  const std::array<HomPoint, 6> h{hex.A[0], hex.B[2], hex.A[1], hex.B[0], hex.A[2], hex.B[1]};
  std::array<HomPoint, 3> m{h[0], h[0], h[0]};
  for (int k = 0; k < 3; ++k) {
    const std::string label = "pascal meet " + n1(k);
    const HomLine s1 = join_or_degenerate(h[k], h[(k + 1) % 6], label);
    const HomLine s2 = join_or_degenerate(h[k + 3], h[(k + 4) % 6], label);
    m[k] = meet_or_degenerate(s1, s2, label);
  }
  if (m[0] == m[1] && m[1] == m[2]) throw DegenerateConstruction("pascal meets coincide");
  const int b = (m[1] != m[0]) ? 1 : 2;
  const HomLine line = join(m[0], m[b]);
  for (const HomPoint& pt : m)
    if (!incident(pt, line)) throw GeometryError("pascal meets are not collinear");
  return line;
}

HomPoint another_pascal_center(const ConicHexagon& hex) {
  const auto& A = hex.A;
  const auto& B = hex.B;
  // S_ik = A_iA_j ^ B_jB_k with j the remaining index.
  std::array<std::array<std::optional<HomPoint>, 3>, 3> S;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (i == k) continue;
      const int j = third(i, k);
      const std::string label = "S" + n1(i) + n1(k);
      S[i][k] = meet_or_degenerate(join_or_degenerate(A[i], A[j], label),
                                   join_or_degenerate(B[j], B[k], label), label);
    }
  std::array<HomLine, 3> l{HomLine::at_infinity(), HomLine::at_infinity(),
                           HomLine::at_infinity()};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    l[i] = join_or_degenerate(*S[j][k], *S[k][j], "l" + n1(i));
  }
  const HomPoint center = meet_or_degenerate(l[0], l[1], "another-pascal center");
  if (!incident(center, l[2])) throw GeometryError("another pascal: lines not concurrent");
  return center;
}

Configuration reye_configuration(const CentralScene& scene) {
  const CentralConstruction c = main_construction_central(scene);
  Configuration conf;
  conf.add_point("S", scene.S);
  for (int i = 0; i < 3; ++i) {
    conf.add_point("A" + n1(i), scene.A[i]);
    conf.add_point("B" + n1(i), scene.B[i]);
    conf.add_point("C" + n1(i), c.C[i]);
    conf.add_line("l" + n1(i), scene.l[i]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) conf.add_point("P" + n1(i) + n1(j), c.P(i, j));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      conf.add_line("a" + n1(i) + n1(j), join(scene.A[i], scene.A[j]));
      conf.add_line("b" + n1(i) + n1(j), join(scene.B[i], scene.B[j]));
      conf.add_line("p" + n1(i) + n1(j), join_or_degenerate(c.P(i, j), c.P(j, i),
                                                            "line P" + n1(i) + n1(j)));
    }
  const auto& pts = conf.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].second == pts[j].second)
        throw DegenerateConstruction("configuration points " + pts[i].first + " and " +
                                     pts[j].first + " coincide");
  const auto& lns = conf.lines();
  for (std::size_t i = 0; i < lns.size(); ++i)
    for (std::size_t j = i + 1; j < lns.size(); ++j)
      if (lns[i].second == lns[j].second)
        throw DegenerateConstruction("configuration lines " + lns[i].first + " and " +
                                     lns[j].first + " coincide");
  return conf;
}

ReyeCounts reye_dual_counts(const CentralScene& scene) {
  const Configuration conf = reye_configuration(scene);
  // Structural incidences first: any of these missing is a theorem failure,
  // not an unlucky instance.
  std::map<std::string, std::vector<std::string>> expected;  // line -> points
  for (int i = 0; i < 3; ++i) {
    expected["l" + n1(i)] = {"S", "A" + n1(i), "B" + n1(i), "C" + n1(i)};
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const int t = third(i, j);
      expected["a" + n1(i) + n1(j)] = {"A" + n1(i), "A" + n1(j), "P" + n1(i) + n1(t),
                                       "P" + n1(j) + n1(t)};
      expected["b" + n1(i) + n1(j)] = {"B" + n1(i), "B" + n1(j), "P" + n1(t) + n1(i),
                                       "P" + n1(t) + n1(j)};
      expected["p" + n1(i) + n1(j)] = {"P" + n1(i) + n1(j), "P" + n1(j) + n1(i), "C" + n1(i),
                                       "C" + n1(j)};
    }
  const auto inc = conf.incidences();
  for (const auto& [line, pts] : expected)
    for (const std::string& pt : pts)
      if (!inc.count({pt, line}))
        throw GeometryError("reye configuration: missing incidence " + pt + " on " + line);
  if (inc.size() != 48) throw DegenerateConstruction("accidental extra incidence");
  return ReyeCounts{16, 3, 12, 4};
}

}  // namespace trigroup
