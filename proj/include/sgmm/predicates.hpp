#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgmm/ideal.hpp"
#include "sgmm/invariants.hpp"

namespace sgmm {

/// Outcome of a predicate check. `witness` carries the existential data when
/// the verdict rests on one (reducer exponent, Burch pair, certificate index);
/// `detail` is a short machine-readable reason code ("gorenstein",
/// "hypothesis-violated:unit-wrt", "no-monomial-witness", ...); `lengths`
/// carries the computed length data so reports double as Hilbert data.
struct Verdict {
  bool value = false;
  std::string detail;
  std::optional<std::vector<long long>> witness;
  std::vector<std::pair<std::string, long long>> lengths;
};

/// M has minimal multiplicity with respect to I: I^2 M = t^{base(I)} I M.
/// Records e_R(I,M), len(IM/I^2M) and len(M/IM). The unit ideal (the
/// base-0 canonical ideal of a symmetric semigroup degenerates to it) is
/// accepted and tagged "hypothesis-violated:unit-wrt" rather than rejected.
Verdict has_min_mult(const SemigroupIdeal& M, const SemigroupIdeal& I);

/// M is I-Ulrich: I M = t^{base(I)} M. Ulrich implies minimal multiplicity
/// (asserted in debug builds).
Verdict is_ulrich(const SemigroupIdeal& M, const SemigroupIdeal& I);

/// I is a trace ideal: (I :_Q I) = (R :_Q I). Throws NotProper on the unit ideal.
Verdict is_trace(const SemigroupIdeal& I);

/// I is reflexive: (R :_Q (R :_Q I)) = I.
Verdict is_reflexive(const SemigroupIdeal& I);

/// The graded annihilator of E/F: {s in S : s + E <= F} for F <= E.
/// Throws NotASubmodule.
SemigroupIdeal annihilator_quotient(const SemigroupIdeal& E, const SemigroupIdeal& F);

/// The ring has minimal multiplicity: the maximal ideal is stable,
/// equivalently e(S) = edim(S) (both are computed and cross-checked).
Verdict is_min_mult_ring(const NumericalSemigroup& S);

/// R is almost Gorenstein: m K = m for the fractional canonical ideal K.
/// Symmetric semigroups return true with detail "gorenstein"; S = N raises
/// RegularRing.
Verdict is_almost_gorenstein(const NumericalSemigroup& S);

/// Sufficient monomial Burch certificate. Searches for a in S_{>0} and a
/// minimal generator g of M with m + g <= a + M. Such a pair certifies that
/// M is a Burch module:
///   t^a is a non zero-divisor on M (the ring is a domain), and in the graded
///   module N = M/t^aM the class v of t^g satisfies m v = 0 (that is the
///   witness condition) and v lies outside m N (g is a minimal generator, so
///   g is outside mM, and a + M <= mM because a is a positive member of S).
///   A socle element outside m N generates a direct summand isomorphic to k:
///   compose N -> N/mN with a k-linear projection fixing the class of v; both
///   maps are R-linear because m annihilates source and target, and the
///   composite splits the inclusion k v -> N.
/// `false` means "no monomial witness", not "not Burch".
Verdict burch_monomial_witness(const SemigroupIdeal& M);

}  // namespace sgmm
