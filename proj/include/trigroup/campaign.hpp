#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace trigroup {

enum class Theorem {
  Desargues,
  GenDesargues,
  Proof1,
  Proof2,
  Pappus,
  GenPappus,
  Pascal,
  GenPascal,
  AnotherPascal,
  ReyeCounts,
  GroupAxioms,
  PresumEquivalence,
  LemmaPseudo,
};

std::string theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(const std::string& name);
const std::vector<std::string>& theorem_names();

struct CampaignSpec {
  Theorem theorem = Theorem::GenDesargues;
  int trials = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Test hook: deterministically corrupts the first trial so the exit
  /// status channel can be exercised end to end.
  bool fault_inject = false;
};

struct FailureRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string predicate;
  nlohmann::json instance;
};

struct VerificationReport {
  std::string theorem;
  int trials = 0;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> seeds;  // effective per-trial seeds after resampling
  int passes = 0;
  int skips = 0;
  std::optional<FailureRecord> first_failure;

  bool ok() const { return !first_failure.has_value(); }
  nlohmann::json to_json() const;
  std::string text() const;
};

/// Runs `trials` seeded trials of one theorem. Degenerate instances are
/// resampled deterministically and counted as skips; the run is
/// reproducible byte-for-byte from (theorem, trials, seed) regardless of
/// `jobs`. Throws GeneratorHealth when resampling exceeds 10x the trial
/// count (a broken generator, not a failing theorem).
VerificationReport run_campaign(const CampaignSpec& spec);

}  // namespace trigroup
