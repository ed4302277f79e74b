#pragma once

#include <optional>

#include "sgmm/ideal.hpp"

namespace sgmm {

// Over a one-dimensional local domain every nonzero proper ideal is
// m-primary, so the m-primary preconditions below reduce to "not the unit
// ideal". Fractional monomial ideals are shifts of integral ones and the
// notions here are shift-invariant.

/// A certified minimal reduction: the monomial t^reducer together with the
/// first index n at which I^{n+1} = reducer + I^n was verified.
struct ReductionData {
  long long reducer = 0;           // exponent a; (t^a) is the minimal reduction
  long long reduction_number = 0;  // r = min{n >= 0 : I^{n+1} = a + I^n}
  long long certificate = 0;       // the verified index (= reduction_number)
};

/// The reduction of a nonzero monomial ideal is t^{base(I)}: windowed powers
/// are eventually shift-periodic, so some n <= c(S)+1 certifies
/// I^{n+1} = base(I) + I^n. Returns base(I) after verifying a certificate;
/// raises ReductionNotConfirmed past the bound (an internal bug, never a
/// silent false) and NotProper on the unit ideal.
long long minimal_reduction(const SemigroupIdeal& I);

/// r and its certificate; r = 0 iff I is principal. Throws NotProper.
ReductionData reduction_number(const SemigroupIdeal& I);

/// e_R(I, M) = len(M / t^{base(I)} M). Recomputed in debug builds as
/// len(IM / t^{base(I)} IM) and asserted equal. Throws NotProper, ParentMismatch.
long long multiplicity_wrt(const SemigroupIdeal& I, const SemigroupIdeal& M);

/// I^2 = base(I) + I. Shift-invariant. Throws NotProper.
bool is_stable(const SemigroupIdeal& I);

/// Smallest n >= 2 with mu(I^n) <= n, searched up to n <= c(S)+2; nullopt if
/// none within the cut-off. When defined, I^{n-1} is a stable ideal.
std::optional<long long> stable_power_bound(const SemigroupIdeal& I);

}  // namespace sgmm
