#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace sgmm {

/// A numerical semigroup S: a cofinite submonoid of the non-negative integers,
/// stored as its minimal generating set, Frobenius number F(S) and a bit
/// membership window over [0, c(S)) with c(S) = F(S)+1. Every z >= c(S) is a
/// member, so all queries past the window are O(1).
///
/// Values are immutable after construction and cheap to copy (shared rep);
/// safe to share across threads.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `gens`. The input may be redundant;
  /// the stored generator list is re-derived as the unique minimal generating
  /// set (elements of S_{>0} that are not a sum of two elements of S_{>0}).
  /// Throws EmptyGenerators / NonCoprime / InvalidArgument.
  static NumericalSemigroup from_generators(const std::vector<long long>& gens);

  /// S = N (the full semigroup), F = -1, c = 0.
  static NumericalSemigroup natural();

  /// Builds a semigroup from a membership window. `window[z]` must hold the
  /// membership of z for z in [0, frobenius+1), window[0] = true, the set must
  /// be closed under addition, and `frobenius` must really be the largest gap.
  static NumericalSemigroup from_window(std::vector<bool> window, long long frobenius);

  const std::vector<long long>& generators() const { return rep_->gens; }
  long long frobenius() const { return rep_->frobenius; }
  long long conductor() const { return rep_->frobenius + 1; }

  /// e(S): smallest positive member (= min generator).
  long long multiplicity() const { return rep_->gens.front(); }
  /// Number of minimal generators.
  long long embedding_dimension() const { return static_cast<long long>(rep_->gens.size()); }

  bool contains(long long z) const {
    if (z < 0) return false;
    if (z >= conductor()) return true;
    return rep_->window[static_cast<std::size_t>(z)];
  }

  /// Sorted list of gaps (N \ S); its size is the genus g(S).
  std::vector<long long> gaps() const;
  long long genus() const;

  /// True iff z in S <=> F(S)-z not in S for all z (equivalently the
  /// canonical ideal is the unit ideal).
  bool is_symmetric() const;

  /// Canonical text form "<a,b,c>" (sorted minimal generators).
  std::string to_text() const;

  bool operator==(const NumericalSemigroup& o) const {
    return rep_ == o.rep_ || rep_->gens == o.rep_->gens;
  }
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

  /// Stable hash of the generator list (used for deterministic per-ring seeding).
  unsigned long long hash() const;

 private:
  struct Rep {
    std::vector<long long> gens;
    long long frobenius = -1;
    std::vector<bool> window;  // membership of [0, frobenius+1)
  };
  explicit NumericalSemigroup(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

/// Walks the semigroup tree rooted at N: the children of S are the semigroups
/// S \ {g} for each minimal generator g > F(S). Every numerical semigroup of
/// genus <= genus_max is visited exactly once, in depth-first preorder with
/// generators taken in increasing order (a fixed, documented order).
void visit_by_genus(long long genus_max, const std::function<void(const NumericalSemigroup&)>& fn);

/// Convenience wrapper collecting the stream of visit_by_genus.
std::vector<NumericalSemigroup> enumerate_by_genus(long long genus_max);

/// True iff every integrally closed proper ideal {s in S : s >= n}, n in S,
/// is stable. Checked for n <= c(S)+e(S); past c(S) the ideal is n + N, which
/// is principal and therefore stable, so the cut-off is exhaustive.
bool is_arf(const NumericalSemigroup& S);

}  // namespace sgmm
