#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sgmm/idealization.hpp"
#include "sgmm/predicates.hpp"

namespace sgmm {

using json = nlohmann::json;

/// Deterministic description of an instance family: same spec, same stream.
struct FamilySpec {
  long long genus_max = 8;
  long long gen_window = 2;             // generators drawn from S cap [1, gen_window*c(S)]
  long long max_ideals_per_ring = 200;  // reservoir-sampled cap (seeded) when the count explodes
  unsigned long long seed = 1;
  bool non_symmetric_only = false;
  bool non_regular_only = false;
};

struct Counterexample {
  std::string semigroup;
  std::vector<std::string> ideals;
  std::string note;
};

struct VerificationReport {
  std::string suite_id;
  FamilySpec spec;
  long long rings_visited = 0;
  long long rings_filtered = 0;
  long long ideals_sampled = 0;
  long long instances_checked = 0;
  std::vector<Counterexample> counterexamples;  // sorted; empty on a correct build
  double elapsed_seconds = 0.0;
};

/// Suite ids, in the canonical order used by reports and the CLI.
std::vector<std::string> suite_ids();

/// One-line description of what a suite checks.
std::string suite_description(const std::string& id);

/// Runs one named suite over the family described by `spec`. Suites whose
/// statements carry a non-Gorenstein hypothesis force the non-symmetric
/// filter; filtered rings are counted, not visited. Throws UnknownSuite.
VerificationReport run_suite(const std::string& id, const FamilySpec& spec);

/// The deterministic per-ring ideal sample the suites consume: proper
/// integral ideals whose minimal generators form an antichain inside
/// S cap [1, gen_window*c(S)], reservoir-capped at max_ideals_per_ring with
/// the per-ring seeded generator, sorted by generator list.
std::vector<SemigroupIdeal> ideal_family(const NumericalSemigroup& S, const FamilySpec& spec);

json to_json(const FamilySpec& spec);
json to_json(const VerificationReport& rep);

/// Fixture corpus: {"records": [{"label", "ring", "checks": [...]}]}.
/// Each check is re-computed and compared exactly; see README for the
/// check vocabulary.
struct FixtureMismatch {
  std::string label;
  std::string message;
};

struct FixtureReport {
  long long records_checked = 0;
  long long checks_passed = 0;
  std::vector<FixtureMismatch> mismatches;
  double elapsed_seconds = 0.0;
};

FixtureReport run_fixtures(const json& corpus);
FixtureReport run_fixtures_file(const std::string& path);
json to_json(const FixtureReport& rep);

/// Key-value config file (one `key = value` per line, # comments) mirroring
/// FamilySpec. Unknown keys are an error. Throws ParseError.
FamilySpec family_spec_from_config(const std::string& path);

}  // namespace sgmm
