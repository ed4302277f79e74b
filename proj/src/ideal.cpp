#include "sgmm/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "sgmm/errors.hpp"

namespace sgmm {

namespace {

void require_same_parent(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (a.parent() != b.parent())
    fail(errc::parent_mismatch, a.to_text() + " and " + b.to_text() + " live over different semigroups");
}

}  // namespace

SemigroupIdeal SemigroupIdeal::from_generators(const NumericalSemigroup& S,
                                               const std::vector<long long>& gens) {
  if (gens.empty()) fail(errc::empty_generators, "an ideal needs at least one generator");
  const long long b = *std::min_element(gens.begin(), gens.end());
  // z is a member iff z - g in S for some generator g. Sound: the set is the
  // union of g + S, contains b, and contains b + c + N through b + S.
  return from_membership(S, b, [&](long long z) {
    for (long long g : gens) {
      if (S.contains(z - g)) return true;
    }
    return false;
  });
}

std::vector<long long> SemigroupIdeal::members_below(long long hi) const {
  std::vector<long long> out;
  for (long long z = base_; z < hi; ++z) {
    if (contains(z)) out.push_back(z);
  }
  return out;
}

bool SemigroupIdeal::is_unit() const {
  return base_ == 0 && *this == unit_ideal(parent_);
}

bool SemigroupIdeal::is_principal() const {
  return *this == principal_ideal(parent_, base_);
}

std::string SemigroupIdeal::to_text() const {
  const std::vector<long long> gens = minimal_generators(*this);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ',';
    os << gens[i];
  }
  os << ") over " << parent_.to_text();
  return os.str();
}

SemigroupIdeal unit_ideal(const NumericalSemigroup& S) {
  return SemigroupIdeal::from_membership(S, 0, [&](long long z) { return S.contains(z); });
}

SemigroupIdeal maximal_ideal(const NumericalSemigroup& S) {
  // S_{>0}; for S = N this is 1 + N.
  return SemigroupIdeal::from_membership(S, S.multiplicity(),
                                         [&](long long z) { return S.contains(z); });
}

SemigroupIdeal principal_ideal(const NumericalSemigroup& S, long long g) {
  return SemigroupIdeal::from_membership(S, g, [&](long long z) { return S.contains(z - g); });
}

SemigroupIdeal ideal_from_generators(const NumericalSemigroup& S,
                                     const std::vector<long long>& gens) {
  return SemigroupIdeal::from_generators(S, gens);
}

SemigroupIdeal product(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  require_same_parent(E, F);
  const NumericalSemigroup& S = E.parent();
  const long long c = S.conductor();
  const long long b = E.base() + F.base();
  // z = e + f with both factors below their windows' ends; pairs where either
  // factor sits in a tail land at or beyond b + c and are covered by the tail.
  return SemigroupIdeal::from_membership(S, b, [&](long long z) {
    for (long long i = 0; i < c; ++i) {
      const long long e = E.base() + i;
      if (e > z - F.base()) break;
      if (E.contains(e) && F.contains(z - e)) return true;
    }
    return false;
  });
}

SemigroupIdeal power(const SemigroupIdeal& E, long long n) {
  if (n < 0) fail(errc::invalid_argument, "negative power of an ideal");
  SemigroupIdeal acc = unit_ideal(E.parent());
  for (long long i = 0; i < n; ++i) acc = product(acc, E);
  return acc;
}

SemigroupIdeal shift(const SemigroupIdeal& E, long long z) {
  return SemigroupIdeal::from_membership(E.parent(), E.base() + z,
                                         [&](long long w) { return E.contains(w - z); });
}

SemigroupIdeal module_sum(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  require_same_parent(E, F);
  const long long b = std::min(E.base(), F.base());
  // The union contains the tail of whichever summand realizes the minimum.
  return SemigroupIdeal::from_membership(E.parent(), b,
                                         [&](long long z) { return E.contains(z) || F.contains(z); });
}

SemigroupIdeal colon(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  require_same_parent(E, F);
  const NumericalSemigroup& S = E.parent();
  const long long c = S.conductor();
  const long long lo = E.base() - F.base();
  // For z >= lo, members f of F's tail give z + f >= base(E) + c, inside E;
  // only the window of F needs checking. Everything from lo + c on qualifies.
  return SemigroupIdeal::from_membership(S, lo, [&](long long z) {
    if (z < lo) return false;
    for (long long i = 0; i < c; ++i) {
      const long long f = F.base() + i;
      if (F.contains(f) && !E.contains(z + f)) return false;
    }
    return true;
  });
}

SemigroupIdeal dual(const SemigroupIdeal& E) { return colon(unit_ideal(E.parent()), E); }

bool is_subset(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  require_same_parent(E, F);
  // Window check is exhaustive: E's tail starts at base(E) + c, and when
  // base(E) >= base(F) it is contained in F's tail; when base(E) < base(F)
  // the first window bit already fails.
  const long long c = E.parent().conductor();
  for (long long z = E.base(); z <= E.base() + c; ++z) {
    if (E.contains(z) && !F.contains(z)) return false;
  }
  return true;
}

std::vector<long long> minimal_generators(const SemigroupIdeal& E) {
  const NumericalSemigroup& S = E.parent();
  const SemigroupIdeal mE = product(maximal_ideal(S), E);
  // Every member from base + c + e(S) on lies in m + E (subtract e(S) and
  // land in E's tail), so the scan below is exhaustive.
  std::vector<long long> gens;
  const long long hi = E.base() + S.conductor() + S.multiplicity();
  for (long long z = E.base(); z < hi; ++z) {
    if (E.contains(z) && !mE.contains(z)) gens.push_back(z);
  }
  return gens;
}

long long mu(const SemigroupIdeal& E) {
  return static_cast<long long>(minimal_generators(E).size());
}

long long length_quotient(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  require_same_parent(E, F);
  if (!is_subset(F, E))
    fail(errc::not_a_submodule, F.to_text() + " is not contained in " + E.to_text());
  const long long c = E.parent().conductor();
  long long len = 0;
  for (long long z = E.base(); z < F.base() + c; ++z) {
    if (E.contains(z) && !F.contains(z)) ++len;
  }
  return len;
}

SemigroupIdeal integral_closure(const SemigroupIdeal& E) {
  const NumericalSemigroup& S = E.parent();
  if (E.base() < 0)
    fail(errc::not_integral, "integral closure is defined for integral ideals; base is negative");
  if (!is_subset(E, unit_ideal(S)))
    fail(errc::not_integral, E.to_text() + " is not contained in the ring");
  // The closure of a monomial ideal with least exponent b is everything of
  // value at least b: {s in S : s >= b}.
  return SemigroupIdeal::from_membership(S, E.base(), [&](long long z) { return S.contains(z); });
}

SemigroupIdeal canonical_ideal(const NumericalSemigroup& S) {
  const long long f = S.frobenius();
  // Gap duality. Base is 0 (f itself is a gap), the tail is sound (f - z < 0
  // for z > f), and the set is closed under adding members of S.
  return SemigroupIdeal::from_membership(S, 0, [&](long long z) { return !S.contains(f - z); });
}

NumericalSemigroup algebra_closure(const SemigroupIdeal& E) {
  if (E.base() != 0)
    fail(errc::no_unit, "algebra closure needs an ideal containing 0 with base 0");
  const NumericalSemigroup& S = E.parent();
  const long long c = S.conductor();
  // Iterate T <- T + T within the window; sums landing at or beyond c are
  // already members (T contains S, so its tail covers [c, inf)).
  std::vector<bool> in(static_cast<std::size_t>(c), false);
  for (long long z = 0; z < c; ++z) in[static_cast<std::size_t>(z)] = E.contains(z);
  bool changed = true;
  while (changed) {
    changed = false;
    for (long long x = 0; x < c; ++x) {
      if (!in[static_cast<std::size_t>(x)]) continue;
      for (long long y = x; x + y < c; ++y) {
        if (in[static_cast<std::size_t>(y)] && !in[static_cast<std::size_t>(x + y)]) {
          in[static_cast<std::size_t>(x + y)] = true;
          changed = true;
        }
      }
    }
  }
  long long frobenius = -1;
  for (long long z = c - 1; z >= 0; --z) {
    if (!in[static_cast<std::size_t>(z)]) {
      frobenius = z;
      break;
    }
  }
  std::vector<bool> window(static_cast<std::size_t>(frobenius + 1));
  for (long long z = 0; z <= frobenius; ++z) window[static_cast<std::size_t>(z)] = in[static_cast<std::size_t>(z)];
  return NumericalSemigroup::from_window(std::move(window), frobenius);
}

SemigroupIdeal extension_ideal(const NumericalSemigroup& S, const NumericalSemigroup& T) {
  // T as a set is an S-module: S <= T and T is closed under addition. The
  // tail is sound because c(T) <= c(S) once containment holds.
  for (long long z = 0; z < std::max(S.conductor(), T.conductor()); ++z) {
    if (S.contains(z) && !T.contains(z))
      fail(errc::not_an_extension, T.to_text() + " does not contain " + S.to_text());
  }
  return SemigroupIdeal::from_membership(S, 0, [&](long long z) { return T.contains(z); });
}

SemigroupIdeal conductor_ideal(const NumericalSemigroup& S, const NumericalSemigroup& T) {
  return colon(unit_ideal(S), extension_ideal(S, T));
}

}  // namespace sgmm
