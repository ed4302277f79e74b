#include "sgmm/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgmm/errors.hpp"

namespace sgmm {

namespace {

// Sieve the additive closure of `gens` over [0, width).
std::vector<bool> closure_sieve(const std::vector<long long>& gens, long long width) {
  std::vector<bool> in(static_cast<std::size_t>(width), false);
  in[0] = true;
  for (long long z = 1; z < width; ++z) {
    for (long long g : gens) {
      if (z >= g && in[static_cast<std::size_t>(z - g)]) {
        in[static_cast<std::size_t>(z)] = true;
        break;
      }
    }
  }
  return in;
}

// Minimal generators of the semigroup with the given membership window:
// the positive members that are not a sum of two positive members. Any
// member above frobenius + (least positive member) splits, so the scan
// range is exhaustive.
std::vector<long long> minimal_generators_of(const std::vector<bool>& window, long long frobenius) {
  auto member = [&](long long z) {
    if (z < 0) return false;
    if (z > frobenius) return true;
    return static_cast<bool>(window[static_cast<std::size_t>(z)]);
  };
  long long least = 1;
  while (!member(least)) ++least;
  std::vector<long long> gens;
  // A member s with s - least > frobenius and s - least > 0 is a sum of two
  // positive members, so the scan below catches every minimal generator.
  for (long long s = least; s <= std::max(frobenius + least, least); ++s) {
    if (!member(s)) continue;
    bool sum = false;
    for (long long x = least; x + least <= s && !sum; ++x) {
      if (member(x) && member(s - x)) sum = true;
    }
    if (!sum) gens.push_back(s);
  }
  return gens;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<long long>& gens) {
  if (gens.empty()) fail(errc::empty_generators, "a numerical semigroup needs at least one generator");
  for (long long g : gens) {
    if (g <= 0) fail(errc::invalid_argument, "generators must be positive integers");
  }
  long long g = 0;
  for (long long x : gens) g = std::gcd(g, x);
  if (g != 1) fail(errc::non_coprime, "gcd of generators is " + std::to_string(g) + ", not 1");

  const long long least = *std::min_element(gens.begin(), gens.end());
  const long long largest = *std::max_element(gens.begin(), gens.end());

  // Grow the sieve until a run of `least` consecutive members appears; from
  // the start of such a run everything upward is a member.
  long long width = least * largest + largest + 2;
  for (;;) {
    std::vector<bool> in = closure_sieve(gens, width);
    long long run = 0, run_start = -1;
    for (long long z = 0; z < width; ++z) {
      if (in[static_cast<std::size_t>(z)]) {
        if (++run == least) {
          run_start = z - least + 1;
          break;
        }
      } else {
        run = 0;
      }
    }
    if (run_start < 0) {
      width *= 2;
      continue;
    }
    long long frobenius = -1;
    for (long long z = run_start - 1; z >= 0; --z) {
      if (!in[static_cast<std::size_t>(z)]) {
        frobenius = z;
        break;
      }
    }
    std::vector<bool> window(static_cast<std::size_t>(frobenius + 1));
    for (long long z = 0; z <= frobenius; ++z) window[static_cast<std::size_t>(z)] = in[static_cast<std::size_t>(z)];
    return from_window(std::move(window), frobenius);
  }
}

NumericalSemigroup NumericalSemigroup::natural() { return from_generators({1}); }

NumericalSemigroup NumericalSemigroup::from_window(std::vector<bool> window, long long frobenius) {
  if (frobenius < -1 || static_cast<long long>(window.size()) != frobenius + 1)
    fail(errc::invalid_argument, "window length must equal frobenius+1");
  auto rep = std::make_shared<Rep>();
  rep->frobenius = frobenius;
  rep->window = std::move(window);
  rep->gens = minimal_generators_of(rep->window, frobenius);
  return NumericalSemigroup(std::move(rep));
}

std::vector<long long> NumericalSemigroup::gaps() const {
  std::vector<long long> out;
  for (long long z = 1; z <= frobenius(); ++z) {
    if (!contains(z)) out.push_back(z);
  }
  return out;
}

long long NumericalSemigroup::genus() const {
  long long n = 0;
  for (long long z = 1; z <= frobenius(); ++z) {
    if (!contains(z)) ++n;
  }
  return n;
}

bool NumericalSemigroup::is_symmetric() const {
  const long long f = frobenius();
  for (long long z = 0; z <= f; ++z) {
    if (contains(z) == contains(f - z)) return false;
  }
  return true;
}

std::string NumericalSemigroup::to_text() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < rep_->gens.size(); ++i) {
    if (i) os << ',';
    os << rep_->gens[i];
  }
  os << '>';
  return os.str();
}

unsigned long long NumericalSemigroup::hash() const {
  // FNV-1a over the generator list.
  unsigned long long h = 1469598103934665603ULL;
  for (long long g : rep_->gens) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<unsigned long long>((g >> (8 * b)) & 0xff);
      h *= 1099511628211ULL;
    }
  }
  return h;
}

namespace {

void visit_rec(const NumericalSemigroup& S, long long genus_max,
               const std::function<void(const NumericalSemigroup&)>& fn) {
  fn(S);
  if (S.genus() >= genus_max) return;
  for (long long g : S.generators()) {
    if (g <= S.frobenius()) continue;
    // Remove g: the result is again a numerical semigroup, with Frobenius
    // number g and one more gap.
    std::vector<bool> window(static_cast<std::size_t>(g + 1));
    for (long long z = 0; z < g; ++z) window[static_cast<std::size_t>(z)] = S.contains(z);
    window[static_cast<std::size_t>(g)] = false;
    visit_rec(NumericalSemigroup::from_window(std::move(window), g), genus_max, fn);
  }
}

}  // namespace

void visit_by_genus(long long genus_max, const std::function<void(const NumericalSemigroup&)>& fn) {
  if (genus_max < 0) fail(errc::invalid_argument, "genus_max must be >= 0");
  visit_rec(NumericalSemigroup::natural(), genus_max, fn);
}

std::vector<NumericalSemigroup> enumerate_by_genus(long long genus_max) {
  std::vector<NumericalSemigroup> all;
  visit_by_genus(genus_max, [&](const NumericalSemigroup& S) { all.push_back(S); });
  return all;
}

}  // namespace sgmm
