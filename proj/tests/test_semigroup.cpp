#include <algorithm>
#include <set>
#include <string>

#include <doctest.h>

#include "expect.hpp"
#include "oracles.hpp"
#include "sgmm/errors.hpp"
#include "sgmm/semigroup.hpp"

using namespace sgmm;

namespace {

NumericalSemigroup sg(const std::vector<long long>& gens) {
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace

TEST_CASE("construction matches the sieve oracle") {
  SUBCASE("<5,6,7>") {
    const auto S = sg({5, 6, 7});
    CHECK(S.generators() == std::vector<long long>{5, 6, 7});
    CHECK(S.frobenius() == 9);
    CHECK(S.conductor() == 10);
    const auto in = oracle::closure_sieve({5, 6, 7}, 21);
    for (long long z = 0; z < 21; ++z) CHECK(S.contains(z) == in[static_cast<std::size_t>(z)]);
  }
  SUBCASE("<1> is all of N") {
    const auto S = sg({1});
    CHECK(S.frobenius() == -1);
    CHECK(S.conductor() == 0);
    CHECK(S.generators() == std::vector<long long>{1});
    CHECK(S.genus() == 0);
  }
  SUBCASE("<4,5,7>") {
    const auto S = sg({4, 5, 7});
    CHECK(S.gaps() == std::vector<long long>{1, 2, 3, 6});
    CHECK(S.frobenius() == 6);
  }
  SUBCASE("redundant generators are minimalized") {
    const auto S = sg({4, 5, 7, 9, 8, 12});
    CHECK(S.generators() == std::vector<long long>{4, 5, 7});
  }
  SUBCASE("pairwise non-coprime generators with overall gcd 1") {
    const auto S = sg({6, 10, 15});
    const auto in = oracle::closure_sieve({6, 10, 15}, 80);
    for (long long z = 0; z < 80; ++z) CHECK(S.contains(z) == in[static_cast<std::size_t>(z)]);
    CHECK(S.frobenius() == 29);
  }
}

TEST_CASE("construction errors") {
  expect_error(errc::empty_generators, [] { sg({}); });
  expect_error(errc::non_coprime, [] { sg({4, 6}); });
  expect_error(errc::invalid_argument, [] { sg({0, 3}); });
  expect_error(errc::invalid_argument, [] { sg({-2, 3}); });
}

TEST_CASE("membership") {
  const auto S = sg({3, 7, 11});
  CHECK_FALSE(S.contains(8));
  CHECK(S.contains(0));
  CHECK(S.contains(100));
  CHECK_FALSE(S.contains(-1));
  CHECK(S.frobenius() == 8);
}

TEST_CASE("gaps") {
  CHECK(sg({3, 4}).gaps() == std::vector<long long>{1, 2, 5});
  CHECK(sg({1}).gaps().empty());
  CHECK(sg({4, 5, 11}).gaps() == std::vector<long long>{1, 2, 3, 6, 7});
}

TEST_CASE("symmetry") {
  CHECK(sg({3, 4}).is_symmetric());
  CHECK_FALSE(sg({3, 4, 5}).is_symmetric());
  CHECK(sg({1}).is_symmetric());
  CHECK_FALSE(sg({4, 5, 7}).is_symmetric());
}

TEST_CASE("arf") {
  CHECK_FALSE(is_arf(sg({3, 7, 11})));
  CHECK(is_arf(sg({1})));
  CHECK(is_arf(sg({2, 3})));
  CHECK(is_arf(sg({2, 11})));  // multiplicity two is always Arf
}

TEST_CASE("arf agrees with the independent triple criterion") {
  visit_by_genus(8, [](const NumericalSemigroup& S) {
    CHECK(is_arf(S) == oracle::arf_triples(S));
  });
}

TEST_CASE("enumeration agrees with the bitmask oracle") {
  const long long G = 7;
  const auto counts = oracle::genus_counts(G);
  std::map<long long, long long> walked;
  long long visited = 0;
  visit_by_genus(G, [&](const NumericalSemigroup& S) {
    ++visited;
    if (S.genus() > 0) ++walked[S.genus()];
    // every emitted semigroup knows its genus consistently
    CHECK(static_cast<long long>(S.gaps().size()) == S.genus());
  });
  CHECK(walked == counts);
  CHECK(visited == 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39);

  const std::vector<long long> expected{1, 2, 4, 7, 12, 23, 39};
  for (long long g = 1; g <= G; ++g) CHECK(counts.at(g) == expected[static_cast<std::size_t>(g - 1)]);
}

TEST_CASE("genus three semigroups") {
  std::set<std::string> found;
  visit_by_genus(3, [&](const NumericalSemigroup& S) {
    if (S.genus() == 3) found.insert(S.to_text());
  });
  CHECK(found == std::set<std::string>{"<2,7>", "<3,4>", "<3,5,7>", "<4,5,6,7>"});
}

TEST_CASE("genus zero enumerates exactly N") {
  const auto all = enumerate_by_genus(0);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == NumericalSemigroup::natural());
}

TEST_CASE("emitted semigroups are exactly reproducible") {
  visit_by_genus(6, [&](const NumericalSemigroup& S) {
    const auto rebuilt = NumericalSemigroup::from_generators(S.generators());
    CHECK(rebuilt == S);
    for (long long z = -2; z <= S.conductor() + 3; ++z) CHECK(rebuilt.contains(z) == S.contains(z));
    // membership closed under addition on the window
    for (long long x = 0; x <= S.conductor(); ++x) {
      if (!S.contains(x)) continue;
      for (long long y = x; y <= S.conductor(); ++y) {
        if (S.contains(y)) CHECK(S.contains(x + y));
      }
    }
    CHECK(S.embedding_dimension() <= S.multiplicity());
  });
}
