#include "sgmm/invariants.hpp"

#include <cassert>

#include "sgmm/errors.hpp"

namespace sgmm {

namespace {

void require_proper(const SemigroupIdeal& I) {
  if (I.is_unit()) fail(errc::not_proper, "the unit ideal is not a proper ideal");
}

}  // namespace

long long minimal_reduction(const SemigroupIdeal& I) {
  require_proper(I);
  return reduction_number(I).reducer;
}

ReductionData reduction_number(const SemigroupIdeal& I) {
  require_proper(I);
  const long long a = I.base();
  const long long cutoff = I.parent().conductor() + 1;
  SemigroupIdeal pw = unit_ideal(I.parent());  // I^n, starting at n = 0
  for (long long n = 0; n <= cutoff; ++n) {
    SemigroupIdeal next = product(pw, I);  // I^{n+1}
    if (next == shift(pw, a)) return ReductionData{a, n, n};
    pw = next;
  }
  fail(errc::reduction_not_confirmed,
       "no n <= c(S)+1 certifies the reduction of " + I.to_text() + " (implementation bug)");
}

long long multiplicity_wrt(const SemigroupIdeal& I, const SemigroupIdeal& M) {
  require_proper(I);
  if (I.parent() != M.parent())
    fail(errc::parent_mismatch, "ideal and module live over different semigroups");
  const long long a = I.base();
  const long long e = length_quotient(M, shift(M, a));
#ifndef NDEBUG
  // e_R(I, M) = e_R(I, IM): both equal the length drop along t^a.
  const SemigroupIdeal IM = product(I, M);
  assert(e == length_quotient(IM, shift(IM, a)));
#endif
  return e;
}

bool is_stable(const SemigroupIdeal& I) {
  require_proper(I);
  return product(I, I) == shift(I, I.base());
}

std::optional<long long> stable_power_bound(const SemigroupIdeal& I) {
  require_proper(I);
  const long long cutoff = I.parent().conductor() + 2;
  SemigroupIdeal pw = product(I, I);  // I^2
  for (long long n = 2; n <= cutoff; ++n) {
    if (mu(pw) <= n) return n;
    pw = product(pw, I);
  }
  return std::nullopt;
}

}  // namespace sgmm
