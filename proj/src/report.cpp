#include "sgmm/report.hpp"

#include <sstream>

#include "sgmm/errors.hpp"

namespace sgmm {

RingReport build_ring_report(const NumericalSemigroup& S) {
  RingReport r;
  r.input = S.to_text();
  r.generators = S.generators();
  r.frobenius = S.frobenius();
  r.conductor = S.conductor();
  r.genus = S.genus();
  r.gaps = S.gaps();
  r.multiplicity = S.multiplicity();
  r.embedding_dimension = S.embedding_dimension();
  r.gorenstein = S.is_symmetric();
  r.arf = is_arf(S);
  r.min_mult = is_min_mult_ring(S);
  if (S.frobenius() < 0) {
    r.almost_gorenstein.value = true;
    r.almost_gorenstein.detail = "regular";
  } else {
    r.almost_gorenstein = is_almost_gorenstein(S);
  }
  const SemigroupIdeal K = canonical_ideal(S);
  const NumericalSemigroup T = algebra_closure(K);
  r.canonical_gens = minimal_generators(K);
  r.rk_gens = T.generators();
  r.conductor_gens = minimal_generators(conductor_ideal(S, T));
  r.normalization_conductor_gens =
      minimal_generators(conductor_ideal(S, NumericalSemigroup::natural()));
  return r;
}

json to_json(const Verdict& v) {
  json j;
  j["value"] = v.value;
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.witness) j["witness"] = *v.witness;
  json lengths = json::object();
  for (const auto& [name, n] : v.lengths) lengths[name] = n;
  j["lengths"] = lengths;
  return j;
}

json to_json(const RingReport& r) {
  json j;
  j["semigroup"] = r.generators;
  j["input"] = r.input;
  j["frobenius"] = r.frobenius;
  j["conductor"] = r.conductor;
  j["genus"] = r.genus;
  j["gaps"] = r.gaps;
  j["multiplicity"] = r.multiplicity;
  j["embedding_dimension"] = r.embedding_dimension;
  j["gorenstein"] = r.gorenstein;
  j["arf"] = r.arf;
  j["minimal_multiplicity"] = to_json(r.min_mult);
  j["almost_gorenstein"] = to_json(r.almost_gorenstein);
  j["canonical_ideal"] = r.canonical_gens;
  j["algebra_closure"] = r.rk_gens;
  j["conductor_ideal"] = r.conductor_gens;
  j["normalization_conductor"] = r.normalization_conductor_gens;
  return j;
}

json to_json(const IdealizationData& d) {
  json j;
  j["edim"] = d.edim_A;
  j["multiplicity"] = d.e_A;
  j["minimal_multiplicity"] = d.min_mult;
  j["parts"] = {{"edim_R", d.edim_R}, {"mu_M", d.mu_M}, {"e_R", d.e_R}, {"e_M", d.e_M}};
  return j;
}

json ideal_to_json(const SemigroupIdeal& E) {
  json j;
  j["semigroup"] = E.parent().generators();
  j["gens"] = minimal_generators(E);
  if (E.base() < 0) j["base"] = E.base();
  return j;
}

namespace {

std::string list_text(const std::vector<long long>& v, std::size_t limit = 40) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == limit) {
      os << ",... " << v.size() << " total";
      break;
    }
    if (i) os << ',';
    os << v[i];
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string to_text(const RingReport& r) {
  std::ostringstream os;
  os << "ring " << r.input << "\n";
  os << "  frobenius " << r.frobenius << "  conductor " << r.conductor << "  genus " << r.genus
     << "  gaps " << list_text(r.gaps) << "\n";
  os << "  multiplicity " << r.multiplicity << "  embedding dimension " << r.embedding_dimension
     << "\n";
  os << "  gorenstein " << (r.gorenstein ? "true" : "false") << "  arf "
     << (r.arf ? "true" : "false") << "\n";
  os << "  minimal multiplicity " << (r.min_mult.value ? "true" : "false") << "\n";
  os << "  almost gorenstein " << (r.almost_gorenstein.value ? "true" : "false");
  if (!r.almost_gorenstein.detail.empty()) os << " (" << r.almost_gorenstein.detail << ")";
  os << "\n";
  os << "  canonical ideal " << list_text(r.canonical_gens) << "\n";
  os << "  algebra closure " << list_text(r.rk_gens) << "\n";
  os << "  conductor ideal " << list_text(r.conductor_gens) << "\n";
  os << "  normalization conductor " << list_text(r.normalization_conductor_gens) << "\n";
  return os.str();
}

}  // namespace sgmm
