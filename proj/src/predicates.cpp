#include "sgmm/predicates.hpp"

#include <cassert>

#include "sgmm/errors.hpp"

namespace sgmm {

namespace {

void require_same_parent(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (a.parent() != b.parent())
    fail(errc::parent_mismatch, "operands live over different semigroups");
}

// Length data is classical only when the submodule inclusion holds (it can
// reverse for fractional wrt-ideals such as the base-0 canonical ideal);
// record what is well-defined and skip the rest.
void record_length(Verdict& v, const char* name, const SemigroupIdeal& big,
                   const SemigroupIdeal& small) {
  if (is_subset(small, big)) v.lengths.emplace_back(name, length_quotient(big, small));
}

}  // namespace

Verdict has_min_mult(const SemigroupIdeal& M, const SemigroupIdeal& I) {
  require_same_parent(M, I);
  Verdict v;
  if (I.is_unit()) v.detail = "hypothesis-violated:unit-wrt";
  const long long a = I.base();
  const SemigroupIdeal IM = product(I, M);
  const SemigroupIdeal IIM = product(I, IM);
  v.value = (IIM == shift(IM, a));
  record_length(v, "e", M, shift(M, a));
  record_length(v, "len_IM_I2M", IM, IIM);
  record_length(v, "len_M_IM", M, IM);
  return v;
}

Verdict is_ulrich(const SemigroupIdeal& M, const SemigroupIdeal& I) {
  require_same_parent(M, I);
  Verdict v;
  if (I.is_unit()) v.detail = "hypothesis-violated:unit-wrt";
  const long long a = I.base();
  const SemigroupIdeal IM = product(I, M);
  v.value = (IM == shift(M, a));
  record_length(v, "e", M, shift(M, a));
  record_length(v, "len_M_IM", M, IM);
#ifndef NDEBUG
  if (v.value) assert(has_min_mult(M, I).value);
#endif
  return v;
}

Verdict is_trace(const SemigroupIdeal& I) {
  if (I.is_unit()) fail(errc::not_proper, "the unit ideal is not a proper ideal");
  Verdict v;
  v.value = (colon(I, I) == dual(I));
  v.lengths.emplace_back("mu", mu(I));
  return v;
}

Verdict is_reflexive(const SemigroupIdeal& I) {
  Verdict v;
  v.value = (dual(dual(I)) == I);
  v.lengths.emplace_back("mu", mu(I));
  return v;
}

SemigroupIdeal annihilator_quotient(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  require_same_parent(E, F);
  if (!is_subset(F, E))
    fail(errc::not_a_submodule, F.to_text() + " is not contained in " + E.to_text());
  const NumericalSemigroup& S = E.parent();
  const SemigroupIdeal q = colon(F, E);
  // Intersect with S. The intersection is closed under adding S, its base is
  // at least max(base(q), 0), and its tail starts no later than base + c.
  const long long lo = std::max(q.base(), 0LL);
  return SemigroupIdeal::from_membership(
      S, lo, [&](long long z) { return q.contains(z) && S.contains(z); });
}

Verdict is_min_mult_ring(const NumericalSemigroup& S) {
  Verdict v;
  v.value = is_stable(maximal_ideal(S));
  v.lengths.emplace_back("e", S.multiplicity());
  v.lengths.emplace_back("edim", S.embedding_dimension());
  assert(v.value == (S.multiplicity() == S.embedding_dimension()));
  return v;
}

Verdict is_almost_gorenstein(const NumericalSemigroup& S) {
  if (S.frobenius() < 0)
    fail(errc::regular_ring, "almost Gorenstein is defined for non-regular rings");
  if (S.is_symmetric()) {
    Verdict v;
    v.value = true;
    v.detail = "gorenstein";
    return v;
  }
  return is_ulrich(maximal_ideal(S), canonical_ideal(S));
}

Verdict burch_monomial_witness(const SemigroupIdeal& M) {
  const NumericalSemigroup& S = M.parent();
  const SemigroupIdeal m = maximal_ideal(S);
  const long long e = S.multiplicity();
  for (long long g : minimal_generators(M)) {
    // m + g <= a + M forces e + g >= a + base(M), bounding the search.
    const SemigroupIdeal mg = shift(m, g);
    for (long long a = 1; a <= e + g - M.base(); ++a) {
      if (!S.contains(a)) continue;
      if (is_subset(mg, shift(M, a))) {
        Verdict v;
        v.value = true;
        v.detail = "witness";
        v.witness = std::vector<long long>{a, g};
        return v;
      }
    }
  }
  Verdict v;
  v.value = false;
  v.detail = "no-monomial-witness";
  return v;
}

}  // namespace sgmm
