#include <cstdio>
#include <fstream>

#include <doctest.h>

#include "expect.hpp"
#include "sgmm/errors.hpp"
#include "sgmm/verify.hpp"

using namespace sgmm;

TEST_CASE("suite registry") {
  const auto ids = suite_ids();
  CHECK(ids.size() == 18);
  CHECK(ids.front() == "CORCHAR");
  CHECK(ids.back() == "APPENDIX_A");
  for (const auto& id : ids) CHECK_FALSE(suite_description(id).empty());
  expect_error(errc::unknown_suite, [] { run_suite("NOPE", FamilySpec{}); });
}

TEST_CASE("CORCHAR over genus zero checks only N") {
  FamilySpec spec;
  spec.genus_max = 0;
  const auto rep = run_suite("CORCHAR", spec);
  CHECK(rep.rings_visited == 1);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.instances_checked > 0);
}

TEST_CASE("all suites are clean at small genus") {
  FamilySpec spec;
  spec.genus_max = 4;
  spec.max_ideals_per_ring = 40;
  for (const auto& id : suite_ids()) {
    const auto rep = run_suite(id, spec);
    INFO(id);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.instances_checked > 0);
    CHECK(rep.rings_visited + rep.rings_filtered == 1 + 1 + 2 + 4 + 7);
  }
}

TEST_CASE("non-symmetric filter is forced by hypothesis-carrying suites") {
  FamilySpec spec;
  spec.genus_max = 3;
  const auto rep = run_suite("THM41", spec);
  long long non_symmetric = 0;
  visit_by_genus(3, [&](const NumericalSemigroup& S) {
    if (!S.is_symmetric()) ++non_symmetric;
  });
  CHECK(rep.rings_visited == non_symmetric);
  CHECK(rep.rings_filtered == (1 + 1 + 2 + 4) - non_symmetric);
}

TEST_CASE("verification report JSON matches the shipped schema") {
  std::ifstream in(std::string(SGMM_SOURCE_DIR) + "/data/schema/verification_report.schema.json");
  REQUIRE(in);
  const json schema = json::parse(in);
  FamilySpec spec;
  spec.genus_max = 2;
  const json rep = to_json(run_suite("MDUAL", spec));
  for (const auto& key : schema.at("required")) {
    CHECK(rep.contains(key.get<std::string>()));
  }
  CHECK(rep.at("counterexamples").is_array());
  CHECK(rep.at("spec").at("genus_max") == 2);
}

TEST_CASE("reports are deterministic") {
  FamilySpec spec;
  spec.genus_max = 3;
  spec.max_ideals_per_ring = 25;
  spec.seed = 99;
  auto a = to_json(run_suite("ARF_ULRICH", spec));
  auto b = to_json(run_suite("ARF_ULRICH", spec));
  a.erase("elapsed_seconds");
  b.erase("elapsed_seconds");
  CHECK(a == b);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("sampling respects the cap") {
  FamilySpec spec;
  spec.genus_max = 5;
  spec.max_ideals_per_ring = 10;
  const auto rep = run_suite("PRESTABLE", spec);
  CHECK(rep.ideals_sampled <= rep.rings_visited * 10);
  CHECK(rep.counterexamples.empty());
}

TEST_CASE("fixture corpus is clean") {
  const auto rep = run_fixtures_file(std::string(SGMM_SOURCE_DIR) + "/data/fixtures.json");
  INFO("mismatches: ", to_json(rep).dump(2));
  CHECK(rep.mismatches.empty());
  CHECK(rep.records_checked >= 20);
  CHECK(rep.checks_passed >= 60);
}

TEST_CASE("fixture mismatches are reported, not thrown") {
  const json corpus = {
      {"records",
       {{{"label", "deliberately-wrong"},
         {"ring", "3,4"},
         {"checks", {{{"op", "ring"}, {"field", "e"}, {"expect", 99}}}}}}}};
  const auto rep = run_fixtures(corpus);
  CHECK(rep.records_checked == 1);
  REQUIRE(rep.mismatches.size() == 1);
  CHECK(rep.mismatches[0].label == "deliberately-wrong");
  expect_error(errc::parse_error, [] { run_fixtures_file("/nonexistent/corpus.json"); });
}

TEST_CASE("config files mirror FamilySpec") {
  const std::string path = "sgmm_test_config.tmp";
  {
    std::ofstream out(path);
    out << "# comment\n";
    out << "genus_max = 5\n";
    out << "gen_window = 3\n";
    out << "max_ideals_per_ring = 17\n";
    out << "seed = 42\n";
    out << "non_symmetric_only = true\n";
    out << "non_regular_only = false\n";
  }
  const FamilySpec spec = family_spec_from_config(path);
  CHECK(spec.genus_max == 5);
  CHECK(spec.gen_window == 3);
  CHECK(spec.max_ideals_per_ring == 17);
  CHECK(spec.seed == 42);
  CHECK(spec.non_symmetric_only);
  CHECK_FALSE(spec.non_regular_only);

  {
    std::ofstream out(path);
    out << "mystery = 1\n";
  }
  expect_error(errc::parse_error, [&] { family_spec_from_config(path); });
  std::remove(path.c_str());
}
