#include "trigroup/campaign.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "trigroup/constructions.hpp"
#include "trigroup/json_io.hpp"
#include "trigroup/rng.hpp"
#include "trigroup/triangle_group.hpp"

namespace trigroup {

namespace {

const std::map<std::string, Theorem> kByName{
    {"desargues", Theorem::Desargues},
    {"gen_desargues", Theorem::GenDesargues},
    {"proof1", Theorem::Proof1},
    {"proof2", Theorem::Proof2},
    {"pappus", Theorem::Pappus},
    {"gen_pappus", Theorem::GenPappus},
    {"pascal", Theorem::Pascal},
    {"gen_pascal", Theorem::GenPascal},
    {"another_pascal", Theorem::AnotherPascal},
    {"reye_counts", Theorem::ReyeCounts},
    {"group_axioms", Theorem::GroupAxioms},
    {"presum_equivalence", Theorem::PresumEquivalence},
    {"lemma_pseudo", Theorem::LemmaPseudo},
};

struct Trial {
  nlohmann::json instance;
  std::optional<std::string> failure;
};

Rational rand_delta(SplitMix64& rng) { return Rational(rng.uniform(-12, 12), rng.uniform(1, 4)); }

TriangleElement random_geometric_element(SplitMix64& rng) {
  for (;;) {
    const TriangleElement t(rand_delta(rng), rand_delta(rng), rand_delta(rng));
    if (t.is_geometric()) return t;
  }
}

TriangleElement random_pseudo_element(SplitMix64& rng) {
  for (;;) {
    const Rational d1 = rand_delta(rng), d2 = rand_delta(rng);
    const TriangleElement t(d1, d2, -(d1 + d2));
    if (t.kind() == TriangleKind::Pseudo) return t;
  }
}

TriangleElement random_element(SplitMix64& rng) {
  const long roll = rng.uniform(0, 9);
  if (roll <= 4) return random_geometric_element(rng);
  if (roll <= 8) return random_pseudo_element(rng);
  return TriangleElement::completely_pseudo(static_cast<int>(rng.uniform(0, 2)));
}

Trial t_desargues(std::uint64_t seed, bool generalized) {
  const CentralScene scene = random_central_scene(seed);
  Trial t{to_json(scene), std::nullopt};
  const CentralConstruction c = main_construction_central(scene);
  if (!collinear(c.S[0], c.S[1], c.S[2])) {
    t.failure = "S1, S2, S3 collinear";
    return t;
  }
  if (generalized) {
    for (int i = 0; i < 3; ++i)
      if (!incident(c.C[i], scene.l[i])) {
        t.failure = "C" + std::to_string(i + 1) + " on l" + std::to_string(i + 1);
        return t;
      }
  }
  return t;
}

Trial t_proof_path(std::uint64_t seed, bool first) {
  const CentralScene scene = random_central_scene(seed);
  Trial t{to_json(scene), std::nullopt};
  t.failure = first ? proof1_failed_predicate(scene) : proof2_failed_predicate(scene);
  return t;
}

Trial t_pappus(std::uint64_t seed) {
  const PappusInstance inst = random_pappus_instance(seed);
  Trial t{Json{{"model", "pappus"},
               {"A", Json::array({to_json(inst.A[0]), to_json(inst.A[1]), to_json(inst.A[2])})},
               {"B", Json::array({to_json(inst.B[0]), to_json(inst.B[1]), to_json(inst.B[2])})}},
          std::nullopt};
  try {
    (void)pappus_line(inst.A, inst.B);
  } catch (const DegenerateConstruction&) {
    throw;
  } catch (const GeometryError& e) {
    t.failure = e.what();
  }
  return t;
}

Trial t_gen_pappus(std::uint64_t seed) {
  const PappusInstance inst = random_pappus_instance(seed);
  Trial t{Json{{"model", "pappus"},
               {"A", Json::array({to_json(inst.A[0]), to_json(inst.A[1]), to_json(inst.A[2])})},
               {"B", Json::array({to_json(inst.B[0]), to_json(inst.B[1]), to_json(inst.B[2])})}},
          std::nullopt};
  try {
    (void)generalized_pappus_center(inst.A, inst.B);
    // Reduction used in the proof: the triangles Q12 Q23 Q31 and
    // Q21 Q32 Q13 are perspective from the classic Pappus line.
    const auto Q = cross_meets(inst.A, inst.B);
    const HomLine axis = pappus_line(inst.A, inst.B);
    const std::array<std::pair<int, int>, 3> verts{{{0, 1}, {1, 2}, {2, 0}}};
    for (int v = 0; v < 3; ++v) {
      const auto [i1, j1] = verts[(v + 1) % 3];
      const auto [i2, j2] = verts[(v + 2) % 3];
      const HomLine s1 = join(*Q[i1][j1], *Q[i2][j2]);
      const HomLine s2 = join(*Q[j1][i1], *Q[j2][i2]);
      if (s1 == s2) throw DegenerateConstruction("reduction side pair");
      if (!incident(meet(s1, s2), axis)) {
        t.failure = "reduction: corresponding side meets lie on the Pappus line";
        return t;
      }
    }
  } catch (const DegenerateConstruction&) {
    throw;
  } catch (const GeometryError& e) {
    t.failure = e.what();
  }
  return t;
}

Trial t_pascal(std::uint64_t seed, bool generalized) {
  const ConicHexagon hex = random_conic_hexagon(seed);
  Trial t{to_json(hex), std::nullopt};
  try {
    if (generalized) (void)generalized_pascal_center(hex);
    (void)pascal_line(hex);
  } catch (const DegenerateConstruction&) {
    throw;
  } catch (const GeometryError& e) {
    t.failure = e.what();
  }
  return t;
}

Trial t_another_pascal(std::uint64_t seed) {
  const ConicHexagon hex = random_conic_hexagon(seed);
  Trial t{to_json(hex), std::nullopt};
  try {
    (void)another_pascal_center(hex);
    // Intermediate claim: S = A3B3 ^ A2B2 is collinear with S32 and S23.
    const auto& A = hex.A;
    const auto& B = hex.B;
    const HomPoint S = meet(join(A[2], B[2]), join(A[1], B[1]));
    const HomPoint s32 = meet(join(A[2], A[0]), join(B[0], B[1]));
    const HomPoint s23 = meet(join(A[1], A[0]), join(B[0], B[2]));
    if (!collinear(S, s32, s23)) t.failure = "S, S32, S23 collinear";
  } catch (const DegenerateConstruction&) {
    throw;
  } catch (const GeometryError& e) {
    t.failure = e.what();
  }
  return t;
}

Trial t_reye(std::uint64_t seed) {
  const CentralScene scene = random_central_scene(seed);
  Trial t{to_json(scene), std::nullopt};
  try {
    const ReyeCounts counts = reye_dual_counts(scene);
    if (!(counts == ReyeCounts{16, 3, 12, 4})) t.failure = "reye dual counts (16, 3, 12, 4)";
  } catch (const DegenerateConstruction&) {
    throw;
  } catch (const GeometryError& e) {
    t.failure = e.what();
  }
  return t;
}

Trial t_group_axioms(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const TriangleElement x = random_element(rng);
  const TriangleElement y = random_element(rng);
  const TriangleElement z = random_element(rng);
  Trial t{Json{{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}}, std::nullopt};
  const TriangleElement zero = TriangleElement::zero();
  const TriangleElement neg_x(-x.delta()[0], -x.delta()[1], -x.delta()[2]);
  const auto check = [&](bool ok, const char* what) {
    if (!ok && !t.failure) t.failure = what;
  };
  check(sum(x, y) == sum(y, x), "sum commutativity");
  check(sum(sum(x, y), z) == sum(x, sum(y, z)), "sum associativity");
  check(sum(x, zero) == x, "zero element is neutral");
  check(sum(x, neg_x) == zero, "inverse element");
  check(presum_coords(x, y) == presum_coords(y, x), "pre-sum commutativity");
  check(presum_coords(x, presum_coords(x, y)) == y, "pre-sum quasigroup identity");
  check(sum_with_fixed(zero, x, y) == sum(x, y), "sum via the zero fixed element");
  return t;
}

/// Forced degenerate-class pairs for the pre-sum equivalence runs. The slot
/// index walks the classes round-robin so each class gets trials/8 of the
/// budget.
std::pair<TriangleElement, TriangleElement> equivalence_pair(SplitMix64& rng, int cls,
                                                             const ReferenceFrame& frame) {
  const Rational third(1, 3);
  const Triple center{third, third, third};
  for (int attempt = 0; attempt < 200; ++attempt) {
    const TriangleElement x = random_geometric_element(rng);
    const Rational a = x.coordinate_sum();
    switch (cls) {
      case 1:  // equal operands
        return {x, x};
      case 2:
      case 3: {  // one shared vertex: B1 == A1 (cls 2) or B1 == A2 (cls 3)
        Rational b = rand_delta(rng);
        if (b.is_zero() || b == a || b == -a) continue;
        const int src = (cls == 2) ? 0 : 1;
        Triple beta;
        for (int i = 0; i < 3; ++i) {
          const Rational e_src = (i == src) ? Rational(1) : Rational(0);
          const Rational e_1 = (i == 0) ? Rational(1) : Rational(0);
          beta[i] = (b / a) * (x.delta()[i] - center[i] + e_src) + center[i] - e_1;
        }
        const TriangleElement y(beta);
        const GeometricTriangle A = triangle_from_bary(x, frame);
        const GeometricTriangle B = triangle_from_bary(y, frame);
        int shared = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            if (A.v[i] == B.v[j]) ++shared;
        if (shared != 1) continue;
        return {x, y};
      }
      case 4: {  // two sides on one line, no shared vertex
        Rational b = rand_delta(rng);
        if (b.is_zero() || b == a || b == -a) continue;
        const GeometricTriangle A = triangle_from_bary(x, frame);
        const Rational tpar = rand_delta(rng);
        if (tpar.is_zero() || tpar == Rational(1)) continue;
        const auto [a1x, a1y] = A.v[0].to_affine();
        const auto [a2x, a2y] = A.v[1].to_affine();
        const HomPoint b1 =
            HomPoint::affine(a1x + tpar * (a2x - a1x), a1y + tpar * (a2y - a1y));
        const auto [e1x, e1y] = frame.vertex(0).to_affine();
        const auto [b1x, b1y] = b1.to_affine();
        std::array<HomPoint, 3> bv{b1, b1, b1};
        for (int k = 1; k < 3; ++k) {
          const auto [ekx, eky] = frame.vertex(k).to_affine();
          bv[k] = HomPoint::affine(b1x + (ekx - e1x) / b, b1y + (eky - e1y) / b);
        }
        bool clash = false;
        for (int i = 0; i < 3 && !clash; ++i)
          for (int j = 0; j < 3 && !clash; ++j)
            if (A.v[i] == bv[j]) clash = true;
        if (clash) continue;
        return {x, bary_from_triangle(GeometricTriangle{bv}, frame)};
      }
      case 5: {  // centrally symmetric about a side midpoint
        const int slot = static_cast<int>(rng.uniform(0, 2));
        const TriangleElement cp = TriangleElement::completely_pseudo(slot);
        return {x, TriangleElement(-x.delta()[0] - cp.delta()[0], -x.delta()[1] - cp.delta()[1],
                                   -x.delta()[2] - cp.delta()[2])};
      }
      case 6: {  // centrally symmetric about a general point
        const HomPoint z = HomPoint::affine(Rational(rng.uniform(-20, 20), rng.uniform(1, 3)),
                                            Rational(rng.uniform(-20, 20), rng.uniform(1, 3)));
        const Triple zeta = frame.coords_of_point(z);
        Triple beta;
        for (int i = 0; i < 3; ++i) beta[i] = x.delta()[i] - Rational(2) * a * zeta[i];
        const TriangleElement y(beta);
        const GeometricTriangle A = triangle_from_bary(x, frame);
        const GeometricTriangle B = triangle_from_bary(y, frame);
        bool clash = false;
        for (int i = 0; i < 3 && !clash; ++i)
          for (int j = 0; j < 3 && !clash; ++j)
            if (A.v[i] == B.v[j]) clash = true;
        for (int k = 0; k < 3 && !clash; ++k) {
          const int i = (k + 1) % 3, j = (k + 2) % 3;
          if (incident(z, join(A.v[i], A.v[j]))) clash = true;
        }
        if (clash) continue;
        return {x, y};
      }
      default: {  // generic pair
        const TriangleElement y = random_geometric_element(rng);
        if (y == x || (a + y.coordinate_sum()).is_zero()) continue;
        return {x, y};
      }
    }
  }
  throw DegenerateConstruction("equivalence pair generation");
}

Trial t_presum_equivalence(std::uint64_t seed, int slot) {
  SplitMix64 rng(seed);
  const ReferenceFrame frame = ReferenceFrame::standard();
  const int cls = slot % 8;
  const auto [x, y] = equivalence_pair(rng, cls, frame);
  Trial t{Json{{"x", to_json(x)}, {"y", to_json(y)}, {"class", cls}}, std::nullopt};
  const TriangleElement expect = presum_coords(x, y);
  const TriangleElement got = presum_geometric(x, y, frame);
  if (got != expect) {
    t.failure = "geometric pre-sum equals the coordinate pre-sum";
    return t;
  }
  if (cls == 5 && got.kind() != TriangleKind::CompletelyPseudo)
    t.failure = "symmetric-side pre-sum is completely pseudo";
  if (cls == 6 && got.kind() != TriangleKind::Pseudo)
    t.failure = "centrally symmetric pre-sum is pseudo";
  return t;
}

Trial t_lemma_pseudo(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const ReferenceFrame frame = ReferenceFrame::standard();
  const TriangleElement x = random_pseudo_element(rng);
  const TriangleElement y = random_pseudo_element(rng);
  Trial t{Json{{"x", to_json(x)}, {"y", to_json(y)}}, std::nullopt};
  if (pseudo_presum_via_lemma(x, y, frame) != presum_coords(x, y))
    t.failure = "midpoint parameterization route equals the coordinate pre-sum";
  return t;
}

Trial run_trial(Theorem th, std::uint64_t seed, int slot) {
  switch (th) {
    case Theorem::Desargues:
      return t_desargues(seed, false);
    case Theorem::GenDesargues:
      return t_desargues(seed, true);
    case Theorem::Proof1:
      return t_proof_path(seed, true);
    case Theorem::Proof2:
      return t_proof_path(seed, false);
    case Theorem::Pappus:
      return t_pappus(seed);
    case Theorem::GenPappus:
      return t_gen_pappus(seed);
    case Theorem::Pascal:
      return t_pascal(seed, false);
    case Theorem::GenPascal:
      return t_pascal(seed, true);
    case Theorem::AnotherPascal:
      return t_another_pascal(seed);
    case Theorem::ReyeCounts:
      return t_reye(seed);
    case Theorem::GroupAxioms:
      return t_group_axioms(seed);
    case Theorem::PresumEquivalence:
      return t_presum_equivalence(seed, slot);
    case Theorem::LemmaPseudo:
      return t_lemma_pseudo(seed);
  }
  throw std::invalid_argument("unknown theorem");
}

struct SlotResult {
  std::uint64_t seed = 0;
  int skips = 0;
  bool budget_blown = false;
  std::optional<std::string> failure;
  nlohmann::json instance;
  std::exception_ptr error;
};

constexpr int kSlotAttemptBudget = 100;

SlotResult run_slot(const CampaignSpec& spec, int slot) {
  SlotResult r;
  try {
    if (spec.fault_inject && slot == 0) {
      r.seed = derive_seed(spec.seed, 0, 0);
      r.failure = "fault injection";
      r.instance = nlohmann::json();
      return r;
    }
    for (int attempt = 0; attempt < kSlotAttemptBudget; ++attempt) {
      const std::uint64_t seed = derive_seed(spec.seed, slot, attempt);
      try {
        Trial t = run_trial(spec.theorem, seed, slot);
        r.seed = seed;
        r.failure = t.failure;
        r.instance = std::move(t.instance);
        return r;
      } catch (const DegenerateConstruction&) {
        ++r.skips;
      } catch (const Unsupported&) {
        ++r.skips;
      }
    }
    r.budget_blown = true;
  } catch (...) {
    r.error = std::current_exception();
  }
  return r;
}

}  // namespace

std::string theorem_name(Theorem t) {
  for (const auto& [name, th] : kByName)
    if (th == t) return name;
  return "unknown";
}

std::optional<Theorem> theorem_from_name(const std::string& name) {
  const auto it = kByName.find(name);
  if (it == kByName.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, th] : kByName) v.push_back(name);
    return v;
  }();
  return names;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j{{"theorem", theorem}, {"trials", trials},  {"seed", base_seed},
                   {"seeds", seeds},     {"passes", passes},  {"skips", skips}};
  if (first_failure) {
    j["first_failure"] = nlohmann::json{{"trial", first_failure->trial},
                                        {"seed", first_failure->seed},
                                        {"predicate", first_failure->predicate},
                                        {"instance", first_failure->instance}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "theorem: " << theorem << "\n"
     << "trials: " << trials << "  passes: " << passes << "  failures: " << (trials - passes)
     << "  skips: " << skips << "\n";
  if (first_failure) {
    os << "first failure: trial " << first_failure->trial << " (seed " << first_failure->seed
       << "): " << first_failure->predicate << "\n";
    os << "instance: " << first_failure->instance.dump() << "\n";
    os << "result: FAIL\n";
  } else {
    os << "result: PASS\n";
  }
  return os.str();
}

VerificationReport run_campaign(const CampaignSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  std::vector<SlotResult> results(spec.trials);
  const int workers = std::min(spec.jobs, spec.trials);
  if (workers <= 1) {
    for (int i = 0; i < spec.trials; ++i) results[i] = run_slot(spec, i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const int i = next.fetch_add(1);
          if (i >= spec.trials) return;
          results[i] = run_slot(spec, i);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  VerificationReport report;
  report.theorem = theorem_name(spec.theorem);
  report.trials = spec.trials;
  report.base_seed = spec.seed;
  int total_skips = 0;
  for (int i = 0; i < spec.trials; ++i) {
    SlotResult& r = results[i];
    if (r.error) std::rethrow_exception(r.error);
    if (r.budget_blown)
      throw GeneratorHealth("trial " + std::to_string(i) + " exhausted its resampling budget");
    total_skips += r.skips;
    report.seeds.push_back(r.seed);
    if (r.failure) {
      if (!report.first_failure)
        report.first_failure = FailureRecord{i, r.seed, *r.failure, r.instance};
    } else {
      ++report.passes;
    }
  }
  report.skips = total_skips;
  if (total_skips > 10 * spec.trials)
    throw GeneratorHealth("campaign resampled more than 10x the trial count");
  return report;
}

}  // namespace trigroup
