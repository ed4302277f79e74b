// sgmm: numerical semigroup rings, monomial fractional ideals, and the
// minimal-multiplicity / Ulrich predicate zoo, with a verification harness.
//
// Exit codes: 0 clean, 2 usage or hypothesis error, 3 counterexample found,
// 4 fixture mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sgmm/errors.hpp"
#include "sgmm/parse.hpp"
#include "sgmm/report.hpp"
#include "sgmm/verify.hpp"

namespace {

using sgmm::json;

void emit(const json& j, const std::string& format, const std::string& text_form,
          const std::string& out_path) {
  std::string body = (format == "json") ? j.dump(2) + "\n" : text_form;
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) sgmm::fail(sgmm::errc::parse_error, "cannot write '" + out_path + "'");
    out << body;
  }
}

std::string verdict_text(const sgmm::Verdict& v) {
  std::string s = v.value ? "true" : "false";
  if (!v.detail.empty()) s += " (" + v.detail + ")";
  if (v.witness) {
    s += "  witness";
    for (long long w : *v.witness) s += " " + std::to_string(w);
  }
  for (const auto& [name, n] : v.lengths) s += "  " + name + "=" + std::to_string(n);
  return s + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup rings and modules of minimal multiplicity"};
  app.require_subcommand(1);
  app.fallthrough();  // app-level flags may follow the subcommand
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  std::string out_path;
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  // ring <spec>
  auto* ring_cmd = app.add_subcommand("ring", "full invariant report for a semigroup ring");
  std::string ring_text;
  ring_cmd->add_option("spec", ring_text, "semigroup, e.g. 3,7,8 or <3,7,8>")->required();

  // ideal <spec> --ring
  auto* ideal_cmd = app.add_subcommand("ideal", "normal form of an ideal spec");
  std::string ideal_ring, ideal_text;
  ideal_cmd->add_option("spec", ideal_text, "ideal spec, e.g. gens:10,11,12,13")->required();
  ideal_cmd->add_option("--ring", ideal_ring, "semigroup")->required();

  // check <predicate> --ring ... [--ideal|--module|--wrt]
  auto* check_cmd = app.add_subcommand("check", "run one predicate");
  std::string predicate, check_ring, arg_ideal, arg_module, arg_wrt = "maximal";
  long long arg_index = 1;
  check_cmd->add_option("predicate", predicate,
                        "one of: min-mult ulrich stable trace reflexive burch min-mult-ring "
                        "almost-gorenstein arf symmetric reduction multiplicity stable-bound "
                        "idealization")
      ->required();
  check_cmd->add_option("--ring", check_ring, "semigroup")->required();
  check_cmd->add_option("--ideal", arg_ideal, "ideal spec");
  check_cmd->add_option("--module", arg_module, "module spec");
  check_cmd->add_option("--wrt", arg_wrt, "ideal the predicate is taken with respect to");
  check_cmd->add_option("--index", arg_index, "syzygy index for idealization-syzygy");

  // verify --suite ...
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  sgmm::FamilySpec spec;
  std::string suite;
  bool list_suites = false;
  verify_cmd->add_option("--suite", suite, "suite id, or ALL");
  verify_cmd->add_flag("--list", list_suites, "list suite ids and exit");
  verify_cmd->add_option("--genus-max", spec.genus_max, "largest genus enumerated");
  verify_cmd->add_option("--gen-window", spec.gen_window, "generator window multiplier of c(S)");
  verify_cmd->add_option("--max-ideals", spec.max_ideals_per_ring, "ideal sample cap per ring");
  verify_cmd->add_option("--seed", spec.seed, "sampling seed");
  verify_cmd->add_flag("--non-symmetric-only", spec.non_symmetric_only,
                       "restrict to non-symmetric semigroups");
  verify_cmd->add_flag("--non-regular-only", spec.non_regular_only, "exclude S = N");
  std::string verify_json_path;
  verify_cmd->add_option("--json", verify_json_path, "also write the JSON report here");

  // fixtures [--corpus ...]
  auto* fixtures_cmd = app.add_subcommand("fixtures", "re-compute the worked-example corpus");
  std::string corpus_path = "data/fixtures.json";
  fixtures_cmd->add_option("--corpus", corpus_path, "fixture corpus file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError&) {
    std::cerr << app.help() << std::endl;
    return 2;
  } catch (const sgmm::Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }

  try {
    if (*ring_cmd) {
      const sgmm::NumericalSemigroup S = sgmm::parse_semigroup(ring_text);
      const sgmm::RingReport report = sgmm::build_ring_report(S);
      emit(sgmm::to_json(report), format, sgmm::to_text(report), out_path);
      return 0;
    }

    if (*ideal_cmd) {
      const sgmm::NumericalSemigroup S = sgmm::parse_semigroup(ideal_ring);
      const sgmm::SemigroupIdeal E = sgmm::parse_ideal_spec(S, ideal_text);
      json j = sgmm::ideal_to_json(E);
      j["mu"] = sgmm::mu(E);
      j["base"] = E.base();
      emit(j, format, E.to_text() + "\n", out_path);
      return 0;
    }

    if (*check_cmd) {
      const sgmm::NumericalSemigroup S = sgmm::parse_semigroup(check_ring);
      auto need = [&](const std::string& value, const std::string& flag) -> const std::string& {
        if (value.empty())
          sgmm::fail(sgmm::errc::parse_error, "predicate '" + predicate + "' needs " + flag);
        return value;
      };
      json j;
      std::string text;
      if (predicate == "min-mult" || predicate == "ulrich") {
        const auto M = sgmm::parse_ideal_spec(S, need(arg_module, "--module"));
        const auto I = sgmm::parse_ideal_spec(S, arg_wrt);
        const sgmm::Verdict v =
            predicate == "min-mult" ? sgmm::has_min_mult(M, I) : sgmm::is_ulrich(M, I);
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else if (predicate == "stable") {
        sgmm::Verdict v;
        v.value = sgmm::is_stable(sgmm::parse_ideal_spec(S, need(arg_ideal, "--ideal")));
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else if (predicate == "trace" || predicate == "reflexive") {
        const auto I = sgmm::parse_ideal_spec(S, need(arg_ideal, "--ideal"));
        const sgmm::Verdict v = predicate == "trace" ? sgmm::is_trace(I) : sgmm::is_reflexive(I);
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else if (predicate == "burch") {
        const sgmm::Verdict v =
            sgmm::burch_monomial_witness(sgmm::parse_ideal_spec(S, need(arg_module, "--module")));
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else if (predicate == "min-mult-ring") {
        const sgmm::Verdict v = sgmm::is_min_mult_ring(S);
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else if (predicate == "almost-gorenstein") {
        const sgmm::Verdict v = sgmm::is_almost_gorenstein(S);
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else if (predicate == "arf") {
        sgmm::Verdict v;
        v.value = sgmm::is_arf(S);
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else if (predicate == "symmetric") {
        sgmm::Verdict v;
        v.value = S.is_symmetric();
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else if (predicate == "reduction") {
        const sgmm::ReductionData rd =
            sgmm::reduction_number(sgmm::parse_ideal_spec(S, need(arg_ideal, "--ideal")));
        j = json{{"reducer", rd.reducer},
                 {"reduction_number", rd.reduction_number},
                 {"certificate", rd.certificate}};
        text = "reducer " + std::to_string(rd.reducer) + "  reduction number " +
               std::to_string(rd.reduction_number) + "\n";
      } else if (predicate == "multiplicity") {
        const long long e =
            sgmm::multiplicity_wrt(sgmm::parse_ideal_spec(S, arg_wrt),
                                   sgmm::parse_ideal_spec(S, need(arg_module, "--module")));
        j = json{{"multiplicity", e}};
        text = std::to_string(e) + "\n";
      } else if (predicate == "stable-bound") {
        const auto n =
            sgmm::stable_power_bound(sgmm::parse_ideal_spec(S, need(arg_ideal, "--ideal")));
        j = json{{"bound", n ? json(*n) : json(nullptr)}};
        text = n ? std::to_string(*n) + "\n" : "none\n";
      } else if (predicate == "idealization") {
        const sgmm::IdealizationData d =
            sgmm::idealization_data(S, sgmm::parse_ideal_spec(S, need(arg_module, "--module")));
        j = sgmm::to_json(d);
        text = "edim " + std::to_string(d.edim_A) + "  e " + std::to_string(d.e_A) +
               "  minimal multiplicity " + (d.min_mult ? "true" : "false") + "\n";
      } else if (predicate == "idealization-syzygy") {
        const sgmm::Verdict v = sgmm::idealization_syzygy_check(S, arg_index);
        j = sgmm::to_json(v);
        text = verdict_text(v);
      } else {
        sgmm::fail(sgmm::errc::unknown_predicate, "no predicate named '" + predicate + "'");
      }
      emit(j, format, text, out_path);
      return 0;
    }

    if (*verify_cmd) {
      if (list_suites) {
        for (const std::string& id : sgmm::suite_ids()) {
          std::cout << id << "  " << sgmm::suite_description(id) << "\n";
        }
        return 0;
      }
      // Config file provides FamilySpec defaults; explicit flags win.
      if (const char* path = std::getenv("SGMM_CONFIG")) {
        const sgmm::FamilySpec base = sgmm::family_spec_from_config(path);
        if (!verify_cmd->count("--genus-max")) spec.genus_max = base.genus_max;
        if (!verify_cmd->count("--gen-window")) spec.gen_window = base.gen_window;
        if (!verify_cmd->count("--max-ideals"))
          spec.max_ideals_per_ring = base.max_ideals_per_ring;
        if (!verify_cmd->count("--seed")) spec.seed = base.seed;
        if (!verify_cmd->count("--non-symmetric-only"))
          spec.non_symmetric_only = base.non_symmetric_only;
        if (!verify_cmd->count("--non-regular-only"))
          spec.non_regular_only = base.non_regular_only;
      }
      if (suite.empty()) sgmm::fail(sgmm::errc::parse_error, "verify needs --suite (or --list)");
      std::vector<std::string> ids;
      if (suite == "ALL") {
        ids = sgmm::suite_ids();
      } else {
        sgmm::suite_description(suite);  // validates the id
        ids.push_back(suite);
      }
      json reports = json::array();
      long long bad = 0;
      std::string text;
      for (const std::string& id : ids) {
        const sgmm::VerificationReport rep = sgmm::run_suite(id, spec);
        bad += static_cast<long long>(rep.counterexamples.size());
        reports.push_back(sgmm::to_json(rep));
        text += id + ": " + std::to_string(rep.instances_checked) + " instances over " +
                std::to_string(rep.rings_visited) + " rings, " +
                std::to_string(rep.counterexamples.size()) + " counterexamples\n";
      }
      const json j = (reports.size() == 1) ? reports[0] : json{{"suites", reports}};
      emit(j, format, text, out_path);
      if (!verify_json_path.empty()) {
        std::ofstream out(verify_json_path);
        out << j.dump(2) << "\n";
      }
      return bad == 0 ? 0 : 3;
    }

    if (*fixtures_cmd) {
      const sgmm::FixtureReport rep = sgmm::run_fixtures_file(corpus_path);
      std::string text = std::to_string(rep.records_checked) + " records, " +
                         std::to_string(rep.checks_passed) + " checks passed, " +
                         std::to_string(rep.mismatches.size()) + " mismatches\n";
      for (const sgmm::FixtureMismatch& m : rep.mismatches) {
        text += "  " + m.label + ": " + m.message + "\n";
      }
      emit(sgmm::to_json(rep), format, text, out_path);
      return rep.mismatches.empty() ? 0 : 4;
    }
  } catch (const sgmm::Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
