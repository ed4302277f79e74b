#include "sgmm/invariants.hpp"
#include "sgmm/semigroup.hpp"

namespace sgmm {

bool is_arf(const NumericalSemigroup& S) {
  // The integrally closed proper ideals are exactly {s in S : s >= n} for
  // positive n in S. For n >= c(S) that set is n + N, which is principal and
  // stable, so checking n through c(S)+e(S) covers everything.
  const long long hi = S.conductor() + S.multiplicity();
  for (long long n = 1; n <= hi; ++n) {
    if (!S.contains(n)) continue;
    const SemigroupIdeal closed =
        SemigroupIdeal::from_membership(S, n, [&](long long z) { return S.contains(z); });
    if (!is_stable(closed)) return false;
  }
  return true;
}

}  // namespace sgmm
