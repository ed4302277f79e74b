#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sgmm/idealization.hpp"
#include "sgmm/predicates.hpp"

namespace sgmm {

using json = nlohmann::json;

/// Bundled ring invariants with the witnessing ideals.
struct RingReport {
  std::string input;
  std::vector<long long> generators;
  long long frobenius = -1;
  long long conductor = 0;
  long long genus = 0;
  std::vector<long long> gaps;
  long long multiplicity = 0;
  long long embedding_dimension = 0;
  bool gorenstein = false;  // symmetric semigroup
  bool arf = false;
  Verdict min_mult;
  Verdict almost_gorenstein;               // value true with detail "regular" for N
  std::vector<long long> canonical_gens;   // minimal generators of K
  std::vector<long long> rk_gens;          // minimal generators of the semigroup of R[K]
  std::vector<long long> conductor_gens;   // minimal generators of (R : R[K])
  std::vector<long long> normalization_conductor_gens;  // minimal generators of (R : Rbar)
};

RingReport build_ring_report(const NumericalSemigroup& S);

json to_json(const Verdict& v);
json to_json(const RingReport& r);
json to_json(const IdealizationData& d);
json ideal_to_json(const SemigroupIdeal& E);

std::string to_text(const RingReport& r);

}  // namespace sgmm
