#include <fstream>

#include <doctest.h>

#include "expect.hpp"
#include "sgmm/errors.hpp"
#include "sgmm/parse.hpp"
#include "sgmm/report.hpp"

using namespace sgmm;

namespace {

NumericalSemigroup sg(const std::vector<long long>& gens) {
  return NumericalSemigroup::from_generators(gens);
}

// Minimal structural validator for the shipped schemas: type, required,
// properties, items.
bool validates(const json& schema, const json& value) {
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    if (t == "object" && !value.is_object()) return false;
    if (t == "array" && !value.is_array()) return false;
    if (t == "string" && !value.is_string()) return false;
    if (t == "integer" && !value.is_number_integer()) return false;
    if (t == "number" && !value.is_number()) return false;
    if (t == "boolean" && !value.is_boolean()) return false;
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!value.contains(key.get<std::string>())) return false;
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (value.contains(key) && !validates(sub, value[key])) return false;
    }
  }
  if (schema.contains("items") && value.is_array()) {
    for (const auto& item : value) {
      if (!validates(schema["items"], item)) return false;
    }
  }
  return true;
}

json load(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return json::parse(in);
}

}  // namespace

TEST_CASE("semigroup text forms") {
  const auto S = sg({3, 7, 8});
  CHECK(parse_semigroup("3,7,8") == S);
  CHECK(parse_semigroup("<3,7,8>") == S);
  CHECK(parse_semigroup("\xE2\x9F\xA8"
                        "3,7,8"
                        "\xE2\x9F\xA9") == S);
  CHECK(parse_semigroup(" 3, 7, 8 ") == S);
  CHECK(parse_semigroup("8,3,7,10") == S);  // redundant generator dropped
  CHECK(parse_semigroup(S.to_text()) == S);

  expect_error(errc::parse_error, [] { parse_semigroup(""); });
  expect_error(errc::parse_error, [] { parse_semigroup("3,x"); });
  expect_error(errc::non_coprime, [] { parse_semigroup("4,6"); });
}

TEST_CASE("ideal spec grammar") {
  const auto S = sg({4, 5, 6});
  CHECK(parse_ideal_spec(S, "unit") == unit_ideal(S));
  CHECK(parse_ideal_spec(S, "maximal") == maximal_ideal(S));
  CHECK(parse_ideal_spec(S, "canonical") == canonical_ideal(S));
  CHECK(parse_ideal_spec(S, "gens:10,11") == ideal_from_generators(S, {10, 11}));
  CHECK(parse_ideal_spec(S, "10,11") == ideal_from_generators(S, {10, 11}));
  CHECK(parse_ideal_spec(S, "-2,5") == ideal_from_generators(S, {-2, 5}));
  CHECK(parse_ideal_spec(S, "closure:8") == integral_closure(principal_ideal(S, 8)));
  CHECK(parse_ideal_spec(S, "dual:maximal") == dual(maximal_ideal(S)));
  CHECK(parse_ideal_spec(S, "power:maximal^3") == power(maximal_ideal(S), 3));
  CHECK(parse_ideal_spec(S, "shift:unit@7") == shift(unit_ideal(S), 7));
  CHECK(parse_ideal_spec(S, "sum:unit+shift:unit@7") ==
        module_sum(unit_ideal(S), shift(unit_ideal(S), 7)));
  CHECK(parse_ideal_spec(S, "product:maximal*sum:unit+shift:unit@7") ==
        product(maximal_ideal(S), module_sum(unit_ideal(S), shift(unit_ideal(S), 7))));
  CHECK(parse_ideal_spec(S, "gens:-1,3") == ideal_from_generators(S, {-1, 3}));

  const auto T = sg({3, 7, 8});
  CHECK(parse_ideal_spec(T, "conductor") ==
        conductor_ideal(T, algebra_closure(canonical_ideal(T))));
  CHECK(parse_ideal_spec(T, "rbar") == extension_ideal(T, NumericalSemigroup::natural()));
  CHECK(parse_ideal_spec(T, "rk") ==
        extension_ideal(T, algebra_closure(canonical_ideal(T))));

  expect_error(errc::parse_error, [&] { parse_ideal_spec(S, "nonsense"); });
  expect_error(errc::parse_error, [&] { parse_ideal_spec(S, "power:maximal"); });
  expect_error(errc::parse_error, [&] { parse_ideal_spec(S, "gens:"); });
  expect_error(errc::parse_error, [&] { parse_ideal_spec(S, "unit junk"); });
}

TEST_CASE("reports echo re-parseable canonical forms") {
  const auto S = sg({4, 9, 11, 14});
  CHECK(parse_semigroup(S.to_text()) == S);
  const auto E = ideal_from_generators(S, {8, 9, 11, 14});
  CHECK(ideal_from_generators(S, minimal_generators(E)) == E);
  const json j = ideal_to_json(E);
  CHECK(ideal_from_generators(S, j["gens"].get<std::vector<long long>>()) == E);
}

TEST_CASE("ring report values") {
  SUBCASE("<3,7,8>") {
    const RingReport r = build_ring_report(sg({3, 7, 8}));
    CHECK_FALSE(r.gorenstein);
    CHECK(r.canonical_gens == std::vector<long long>{0, 1});
    CHECK(r.conductor_gens == std::vector<long long>{6, 7, 8});
    CHECK(r.rk_gens == std::vector<long long>{1});
    CHECK(r.normalization_conductor_gens == std::vector<long long>{6, 7, 8});
  }
  SUBCASE("<1> is regular") {
    const RingReport r = build_ring_report(NumericalSemigroup::natural());
    CHECK(r.gorenstein);
    CHECK(r.arf);
    CHECK(r.min_mult.value);
    CHECK(r.almost_gorenstein.value);
    CHECK(r.almost_gorenstein.detail == "regular");
    CHECK(r.canonical_gens == std::vector<long long>{0});
  }
  SUBCASE("<4,5,7>") {
    const RingReport r = build_ring_report(sg({4, 5, 7}));
    CHECK_FALSE(r.min_mult.value);
    CHECK(r.almost_gorenstein.value);
  }
}

TEST_CASE("ring report text and JSON carry the same data") {
  const RingReport r = build_ring_report(sg({4, 5, 7}));
  const json j = to_json(r);
  const std::string text = to_text(r);
  CHECK(text.find("<4,5,7>") != std::string::npos);
  CHECK(text.find("almost gorenstein true") != std::string::npos);
  CHECK(text.find("minimal multiplicity false") != std::string::npos);
  CHECK(j["multiplicity"] == 4);
  CHECK(j["embedding_dimension"] == 3);
  CHECK(text.find("multiplicity 4") != std::string::npos);
  CHECK(text.find("embedding dimension 3") != std::string::npos);
}

TEST_CASE("JSON output validates against the shipped schemas") {
  const std::string dir = std::string(SGMM_SOURCE_DIR) + "/data/schema/";
  const json ring_schema = load(dir + "ring_report.schema.json");
  const json verdict_schema = load(dir + "verdict.schema.json");

  CHECK(validates(ring_schema, to_json(build_ring_report(sg({3, 7, 8})))));
  CHECK(validates(ring_schema, to_json(build_ring_report(NumericalSemigroup::natural()))));

  const auto S = sg({4, 5});
  CHECK(validates(verdict_schema, to_json(burch_monomial_witness(maximal_ideal(S)))));
  CHECK(validates(verdict_schema, to_json(has_min_mult(maximal_ideal(S), maximal_ideal(S)))));

  // sanity of the validator itself
  CHECK_FALSE(validates(ring_schema, json{{"semigroup", "nope"}}));
}
