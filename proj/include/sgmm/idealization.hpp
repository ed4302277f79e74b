#pragma once

#include "sgmm/predicates.hpp"

namespace sgmm {

/// Numeric invariants of the idealization A = R x M (square-zero extension of
/// R by a rank-one monomial module M). A is never materialized: its
/// embedding dimension is edim(R) + mu(M) and its multiplicity e(R) + e_R(M),
/// and A has minimal multiplicity exactly when both summand pairs match.
struct IdealizationData {
  long long edim_A = 0;
  long long e_A = 0;
  bool min_mult = false;
  long long edim_R = 0;
  long long mu_M = 0;
  long long e_R = 0;
  long long e_M = 0;
};

/// Computes the invariants above. min_mult is derived from e_A = edim_A and
/// cross-checked against (ring has minimal multiplicity) AND (M is Ulrich);
/// a disagreement raises an internal logic error (it cannot happen). A zero
/// module is unrepresentable here (every SemigroupIdeal is nonempty), so the
/// nonzero precondition holds by construction.
IdealizationData idealization_data(const NumericalSemigroup& S, const SemigroupIdeal& M);

/// Checks, for i = 1 (the only monomial syzygy of the residue field, m),
/// that the ring has minimal multiplicity iff R x m does. i >= 2 raises
/// UnsupportedIndex.
Verdict idealization_syzygy_check(const NumericalSemigroup& S, long long i);

}  // namespace sgmm
