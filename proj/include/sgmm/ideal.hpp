#pragma once

#include <string>
#include <vector>

#include "sgmm/semigroup.hpp"

namespace sgmm {

/// A monomial fractional ideal of the semigroup ring of S, stored as an
/// integer set E with E + S <= E, bounded below. The representation is a base
/// b = min E plus a bit window over [b, b+c) with c = c(S); every z >= b+c is
/// a member. The window is sound for every ideal: E contains b + S, hence all
/// of b + c + N.
///
/// The representation is canonical: two ideals are equal iff their parent,
/// base and window coincide. All operations are pure; values are immutable.
///
/// Monomial colon quotients computed here agree with the colon in the total
/// quotient ring: a quotient (E :_Q F) is graded for monomial E, F, because a
/// power series q with qF <= E has each graded component q_z of q satisfying
/// z + F <= E separately (compare supports degree by degree), so (E :_Q F) is
/// spanned by the monomials {t^z : z + F <= E}. The set computed below is
/// exactly that exponent set, so trace/reflexive/dual checks on monomial
/// ideals implement the quotient-ring definitions faithfully.
class SemigroupIdeal {
 public:
  /// The union of g + S over the given generators, canonicalized.
  static SemigroupIdeal from_generators(const NumericalSemigroup& S,
                                        const std::vector<long long>& gens);

  /// Internal-style constructor from a membership predicate. `pred(z)` must
  /// be meaningful for z in [lo, lo + c); every z >= lo + c must be a member;
  /// the member set must be closed under addition by S and bounded below
  /// by lo. The true base is located by scanning upward from lo.
  template <typename Pred>
  static SemigroupIdeal from_membership(const NumericalSemigroup& S, long long lo, Pred pred) {
    const long long c = S.conductor();
    long long b = lo;
    while (b < lo + c && !pred(b)) ++b;
    std::vector<bool> window(static_cast<std::size_t>(c));
    for (long long i = 0; i < c; ++i) {
      const long long z = b + i;
      window[static_cast<std::size_t>(i)] = (z >= lo + c) ? true : pred(z);
    }
    return SemigroupIdeal(S, b, std::move(window));
  }

  const NumericalSemigroup& parent() const { return parent_; }
  long long base() const { return base_; }

  bool contains(long long z) const {
    if (z < base_) return false;
    if (z >= base_ + static_cast<long long>(window_.size())) return true;
    return window_[static_cast<std::size_t>(z - base_)];
  }

  /// Members in [base, hi), ascending.
  std::vector<long long> members_below(long long hi) const;

  bool is_unit() const;
  bool is_principal() const;

  /// "(g1,...,gk) over <a,b,c>" with the minimal generators.
  std::string to_text() const;

  bool operator==(const SemigroupIdeal& o) const {
    return parent_ == o.parent_ && base_ == o.base_ && window_ == o.window_;
  }
  bool operator!=(const SemigroupIdeal& o) const { return !(*this == o); }

 private:
  SemigroupIdeal(NumericalSemigroup S, long long base, std::vector<bool> window)
      : parent_(std::move(S)), base_(base), window_(std::move(window)) {}

  NumericalSemigroup parent_;
  long long base_;
  std::vector<bool> window_;  // membership of [base, base + c(S)); bit 0 set
};

SemigroupIdeal unit_ideal(const NumericalSemigroup& S);
SemigroupIdeal maximal_ideal(const NumericalSemigroup& S);
SemigroupIdeal principal_ideal(const NumericalSemigroup& S, long long g);
SemigroupIdeal ideal_from_generators(const NumericalSemigroup& S,
                                     const std::vector<long long>& gens);

/// Minkowski sum E + F; base(EF) = base(E) + base(F). Throws ParentMismatch.
SemigroupIdeal product(const SemigroupIdeal& E, const SemigroupIdeal& F);

/// E^n with E^0 the unit ideal. Throws on n < 0.
SemigroupIdeal power(const SemigroupIdeal& E, long long n);

/// z + E (multiplication by the monomial t^z).
SemigroupIdeal shift(const SemigroupIdeal& E, long long z);

/// E union F as sets (the module sum E + F). Throws ParentMismatch.
SemigroupIdeal module_sum(const SemigroupIdeal& E, const SemigroupIdeal& F);

/// (E :_Q F) = {z : z + F <= E}. No member lies below base(E) - base(F),
/// because base(F) in F forces z + base(F) >= base(E); every z >=
/// base(E) - base(F) + c is a member since z + F then lands in E's tail.
SemigroupIdeal colon(const SemigroupIdeal& E, const SemigroupIdeal& F);

/// E* = (R :_Q E).
SemigroupIdeal dual(const SemigroupIdeal& E);

/// True iff E <= F as sets.
bool is_subset(const SemigroupIdeal& E, const SemigroupIdeal& F);

/// Members of E outside maximal_ideal(S) + E, ascending. This is the unique
/// minimal monomial generating set; its size is mu(E).
std::vector<long long> minimal_generators(const SemigroupIdeal& E);
long long mu(const SemigroupIdeal& E);

/// len_R(E/F) = |E \ F| for F <= E (finite: F contains E's tail).
/// Throws NotASubmodule.
long long length_quotient(const SemigroupIdeal& E, const SemigroupIdeal& F);

/// Integral closure of an integral ideal E <= S: the set {s in S : s >= base(E)}.
/// Rejects fractional input (NotIntegral).
SemigroupIdeal integral_closure(const SemigroupIdeal& E);

/// The fractional canonical ideal K = {z : F(S) - z not in S}; base 0,
/// K = unit ideal iff S is symmetric.
SemigroupIdeal canonical_ideal(const NumericalSemigroup& S);

/// The semigroup generated by the members of E (requires base(E) = 0, so
/// 0 in E); realizes the ring R[E] for E normalized to contain 1.
NumericalSemigroup algebra_closure(const SemigroupIdeal& E);

/// T viewed as an ideal over S, for an extension semigroup T >= S.
SemigroupIdeal extension_ideal(const NumericalSemigroup& S, const NumericalSemigroup& T);

/// (R :_Q T) = {z : z + T <= S} for T >= S. Throws NotAnExtension.
SemigroupIdeal conductor_ideal(const NumericalSemigroup& S, const NumericalSemigroup& T);

}  // namespace sgmm
