#include "sgmm/idealization.hpp"

#include <stdexcept>

#include "sgmm/errors.hpp"

namespace sgmm {

IdealizationData idealization_data(const NumericalSemigroup& S, const SemigroupIdeal& M) {
  if (S != M.parent()) fail(errc::parent_mismatch, "module lives over a different semigroup");
  IdealizationData d;
  d.edim_R = S.embedding_dimension();
  d.mu_M = mu(M);
  d.e_R = S.multiplicity();
  d.e_M = length_quotient(M, shift(M, S.multiplicity()));
  d.edim_A = d.edim_R + d.mu_M;
  d.e_A = d.e_R + d.e_M;
  d.min_mult = (d.e_A == d.edim_A);
  const bool recomputed =
      is_min_mult_ring(S).value && is_ulrich(M, maximal_ideal(S)).value;
  if (recomputed != d.min_mult)
    throw std::logic_error("idealization minimal-multiplicity cross-check failed");
  return d;
}

Verdict idealization_syzygy_check(const NumericalSemigroup& S, long long i) {
  if (i != 1)
    fail(errc::unsupported_index, "only the first syzygy of the residue field is monomial");
  Verdict v;
  const bool ring = is_min_mult_ring(S).value;
  const bool ideal = idealization_data(S, maximal_ideal(S)).min_mult;
  v.value = (ring == ideal);
  v.lengths.emplace_back("ring_min_mult", ring ? 1 : 0);
  v.lengths.emplace_back("idealization_min_mult", ideal ? 1 : 0);
  return v;
}

}  // namespace sgmm
