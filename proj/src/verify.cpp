#include "sgmm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "sgmm/errors.hpp"
#include "sgmm/parse.hpp"

namespace sgmm {

namespace {

// ---------------------------------------------------------------------------
// Instance family
// ---------------------------------------------------------------------------

// Enumerates the generating antichains: subsets {g1 < ... < gk} of
// S cap [1, W] with gj - gi outside S for i < j, i.e. exactly the minimal
// monomial generating sets of the proper ideals of the ring with generators
// below W. Emits them in lexicographic order.
void antichains(const NumericalSemigroup& S, long long W,
                const std::function<void(const std::vector<long long>&)>& emit) {
  std::vector<long long> candidates;
  for (long long z = 1; z <= W; ++z) {
    if (S.contains(z)) candidates.push_back(z);
  }
  std::vector<long long> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const long long z = candidates[i];
      bool dominated = false;
      for (long long g : chosen) {
        if (S.contains(z - g)) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      chosen.push_back(z);
      emit(chosen);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

// Everything a suite needs for one ring. Modules are sampled from the ideal
// family (rank-one torsion-free modules are shifts of these, and the checked
// predicates are shift-invariant) plus the named modules of interest.
struct RingFamily {
  NumericalSemigroup S;
  SemigroupIdeal unit;
  SemigroupIdeal m;
  SemigroupIdeal K;        // fractional canonical ideal, base 0
  NumericalSemigroup T;    // semigroup of R[K]
  SemigroupIdeal T_ideal;  // R[K] as an R-module
  std::vector<SemigroupIdeal> ideals;       // proper integral ideals, seeded sample
  std::vector<SemigroupIdeal> modules;      // module sample (includes unit, m, K, m*, R[K])
  std::vector<SemigroupIdeal> hom_targets;  // small N sample for Hom checks

  explicit RingFamily(const NumericalSemigroup& ring, const FamilySpec& spec)
      : S(ring),
        unit(unit_ideal(ring)),
        m(maximal_ideal(ring)),
        K(canonical_ideal(ring)),
        T(algebra_closure(canonical_ideal(ring))),
        T_ideal(extension_ideal(ring, algebra_closure(canonical_ideal(ring)))) {
    ideals = ideal_family(S, spec);

    auto add_module = [&](const SemigroupIdeal& M) {
      for (const auto& old : modules) {
        if (old == M) return;
      }
      modules.push_back(M);
    };
    add_module(unit);
    add_module(m);
    add_module(K);
    add_module(dual(m));
    add_module(T_ideal);
    const std::size_t kModuleCap = 12;
    for (std::size_t j = 0; j < kModuleCap && j < ideals.size(); ++j) {
      add_module(ideals[j * ideals.size() / std::min(kModuleCap, ideals.size())]);
    }

    auto add_target = [&](const SemigroupIdeal& N) {
      for (const auto& old : hom_targets) {
        if (old == N) return;
      }
      hom_targets.push_back(N);
    };
    add_target(unit);
    add_target(m);
    add_target(K);
    if (!ideals.empty()) {
      add_target(ideals.front());
      add_target(ideals[ideals.size() / 2]);
      add_target(ideals.back());
    }
  }
};

struct SuiteCtx {
  const RingFamily& fam;
  VerificationReport& rep;

  void check(bool ok, const std::vector<const SemigroupIdeal*>& involved, const std::string& note) {
    ++rep.instances_checked;
    if (ok) return;
    Counterexample ce;
    ce.semigroup = fam.S.to_text();
    for (const SemigroupIdeal* E : involved) ce.ideals.push_back(E->to_text());
    ce.note = note;
    rep.counterexamples.push_back(std::move(ce));
  }
};

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

void suite_corchar(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& M : f.modules) {
    const bool direct = has_min_mult(M, f.m).value;
    bool all_powers = true;
    SemigroupIdeal iter = M;
    for (int i = 0; i <= 3; ++i) {
      if (!has_min_mult(iter, f.m).value) all_powers = false;
      iter = product(f.m, iter);
    }
    const SemigroupIdeal mM = product(f.m, M);
    const bool mu_match = (mu(mM) == multiplicity_wrt(f.m, M));
    const bool shift_iso = (product(f.m, mM) == shift(mM, f.m.base()));
    ctx.check(direct == all_powers && direct == mu_match && direct == shift_iso, {&M},
              "four-way minimal-multiplicity characterization disagrees");
  }
}

void suite_ma_chain(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& M : f.modules) {
    const bool mm = has_min_mult(M, f.m).value;
    SemigroupIdeal mM = product(f.m, M);
    ctx.check(mm == is_ulrich(mM, f.m).value, {&M}, "min mult of M must match mM Ulrich");
    if (!mm) continue;
    SemigroupIdeal iter = mM;
    for (int i = 1; i <= 3; ++i) {
      ctx.check(is_ulrich(iter, f.m).value && has_min_mult(iter, f.m).value, {&M, &iter},
                "m^i M must stay Ulrich and of minimal multiplicity");
      iter = product(f.m, iter);
    }
  }
}

void suite_red_power(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    if (I.is_principal()) continue;  // hypothesis: non-principal
    const ReductionData rd = reduction_number(I);
    ctx.check(rd.reduction_number >= 1, {&I}, "non-principal ideal with reduction number 0");
    const SemigroupIdeal P = power(I, rd.reduction_number - 1);
    ctx.check(!is_ulrich(P, I).value, {&I, &P}, "I^{r-1} must not be I-Ulrich");
    for (const SemigroupIdeal& M : f.modules) {
      const SemigroupIdeal PM = product(P, M);
      ctx.check(has_min_mult(PM, I).value, {&I, &M},
                "I^{r-1} M must have minimal multiplicity wrt I");
    }
  }
}

void suite_conductor(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    const SemigroupIdeal KI = shift(I, -I.base());
    const SemigroupIdeal c = conductor_ideal(f.S, algebra_closure(KI));
    ctx.check(is_ulrich(c, I).value && has_min_mult(c, I).value, {&I, &c},
              "the conductor of R in R[x^{-1}I] must be I-Ulrich");
  }
}

void suite_prestable(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    const auto n = stable_power_bound(I);
    if (!n) continue;
    ctx.check(is_stable(power(I, *n - 1)), {&I},
              "mu(I^n) <= n must make I^{n-1} stable (n = " + std::to_string(*n) + ")");
  }
}

void suite_laga(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    for (const SemigroupIdeal& M : f.modules) {
      if (!has_min_mult(M, I).value) continue;
      const SemigroupIdeal IM = product(I, M);
      for (const SemigroupIdeal& N : f.hom_targets) {
        ctx.check(is_ulrich(colon(N, IM), I).value, {&I, &M, &N},
                  "Hom(IM, N) must be I-Ulrich when M has min mult wrt I");
      }
    }
  }
}

void suite_arf_ulrich(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    for (const SemigroupIdeal& M : f.modules) {
      const bool a = has_min_mult(M, I).value;
      const SemigroupIdeal IM = product(I, M);
      const bool b = is_ulrich(IM, I).value;
      const SemigroupIdeal ann = annihilator_quotient(IM, shift(IM, I.base()));
      const bool c = is_subset(I, ann);
      ctx.check(a == b && b == c, {&I, &M},
                "min mult / IM Ulrich / annihilator equivalence disagrees");
    }
  }
}

void suite_agchar(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    const SemigroupIdeal Id = dual(I);
    const bool dual_ulrich = is_ulrich(Id, f.K).value;
    if (has_min_mult(I, f.K).value)
      ctx.check(dual_ulrich, {&I}, "I min mult wrt K must make I* K-Ulrich");
    if (dual_ulrich && is_trace(I).value)
      ctx.check(is_ulrich(I, f.K).value, {&I}, "trace I with K-Ulrich dual must be K-Ulrich");
  }
}

void suite_agchar_cor(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    if (!is_trace(I).value) continue;
    ctx.check(has_min_mult(I, f.K).value == is_ulrich(I, f.K).value, {&I},
              "for trace ideals, min mult wrt K must equal K-Ulrich");
  }
}

void suite_rk_minmult(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  ctx.check(has_min_mult(f.T_ideal, f.K).value, {&f.T_ideal},
            "R[K] must have minimal multiplicity wrt K");
}

void suite_aga_chain(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    const SemigroupIdeal Id = dual(I);
    const bool c1 = is_ulrich(I, f.K).value;
    const bool c2 = has_min_mult(I, f.K).value;
    const bool c3 = is_ulrich(Id, f.K).value;
    const bool c4 = has_min_mult(Id, f.K).value;
    ctx.check((!c1 || c2) && (!c2 || c3) && (!c3 || c4), {&I},
              "Ulrich/min-mult chain through the dual broke");
    if (is_reflexive(I).value)
      ctx.check(c1 == c2 && c2 == c3 && c3 == c4, {&I},
                "chain must collapse to an equivalence for reflexive I");
  }
}

void suite_aga2(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  ctx.check(is_reflexive(f.m).value, {&f.m}, "the maximal ideal must be reflexive");
  const SemigroupIdeal md = dual(f.m);
  const bool c1 = is_ulrich(f.m, f.K).value;
  const bool c2 = has_min_mult(f.m, f.K).value;
  const bool c3 = is_ulrich(md, f.K).value;
  const bool c4 = has_min_mult(md, f.K).value;
  ctx.check(c1 == c2 && c2 == c3 && c3 == c4, {&f.m},
            "the four conditions must be equivalent for I = m");
}

void suite_thm41(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    if (!is_trace(I).value && !is_reflexive(I).value) continue;
    if (!has_min_mult(f.K, I).value) continue;
    ctx.check(is_stable(I), {&I}, "K min mult wrt trace/reflexive I must force I stable");
  }
}

void suite_cor42(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  for (const SemigroupIdeal& I : f.ideals) {
    if (!is_trace(I).value && !is_reflexive(I).value) continue;
    const bool stable = is_stable(I);
    bool all_modules = true;
    for (const SemigroupIdeal& M : f.modules) {
      if (!has_min_mult(M, I).value) {
        all_modules = false;
        break;
      }
    }
    const bool canonical_mm = has_min_mult(f.K, I).value;
    ctx.check(stable == all_modules && stable == canonical_mm, {&I},
              "stable / all modules min mult / K min mult equivalence disagrees");
  }
}

void suite_cor43(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  const bool ring_mm = is_min_mult_ring(f.S).value;
  const bool canonical_mm = has_min_mult(f.K, f.m).value;
  bool all_modules = true;
  for (const SemigroupIdeal& M : f.modules) {
    if (!has_min_mult(M, f.m).value) {
      all_modules = false;
      break;
    }
  }
  ctx.check(ring_mm == canonical_mm && ring_mm == all_modules, {&f.K},
            "ring min mult must match canonical-module min mult");
}

void suite_mdual(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  const SemigroupIdeal md = dual(f.m);
  ctx.check(has_min_mult(md, f.m).value == is_min_mult_ring(f.S).value, {&md},
            "m* min mult must be equivalent to ring min mult");
}

void suite_idealization(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  ctx.check(idealization_data(f.S, f.m).min_mult == is_min_mult_ring(f.S).value, {&f.m},
            "R x m min mult must match ring min mult");
  ctx.check(idealization_syzygy_check(f.S, 1).value, {&f.m}, "syzygy idealization check failed");
  for (const SemigroupIdeal& M : f.modules) {
    const IdealizationData d = idealization_data(f.S, M);
    const bool expected = is_min_mult_ring(f.S).value && is_ulrich(M, f.m).value;
    ctx.check(d.min_mult == expected, {&M},
              "idealization min mult must match (ring min mult and M Ulrich)");
  }
}

void suite_appendix_a(SuiteCtx& ctx) {
  const RingFamily& f = ctx.fam;
  const long long e = f.S.multiplicity();
  for (const SemigroupIdeal& M : f.modules) {
    if (!has_min_mult(M, f.m).value) continue;
    const long long len_drop = length_quotient(M, shift(M, e));
    const long long mu_mM = mu(product(f.m, M));
    ctx.check(len_drop == mu_mM && mu_mM >= mu(M), {&M},
              "length bookkeeping of min-mult modules broke");
  }
}

struct SuiteDef {
  std::string description;
  bool non_symmetric = false;  // statement carries a non-Gorenstein hypothesis
  void (*fn)(SuiteCtx&) = nullptr;
};

const std::vector<std::pair<std::string, SuiteDef>>& registry() {
  static const std::vector<std::pair<std::string, SuiteDef>> table = {
      {"CORCHAR",
       {"four-way characterization of minimal multiplicity (powers, mu(mM) = e, shift isomorphism)",
        false, suite_corchar}},
      {"MA_CHAIN",
       {"M has min mult iff mM is Ulrich; the property persists down the m-adic chain", false,
        suite_ma_chain}},
      {"RED_POWER",
       {"I^{r-1} has min mult wrt I but is not I-Ulrich (r = reduction number)", false,
        suite_red_power}},
      {"CONDUCTOR",
       {"the conductor of R in R[x^{-1}I] is I-Ulrich for every proper ideal I", false,
        suite_conductor}},
      {"PRESTABLE",
       {"if I^n is generated by n elements then I^{n-1} is stable", false, suite_prestable}},
      {"LAGA",
       {"Hom(IM, N) is I-Ulrich whenever M has min mult wrt I", false, suite_laga}},
      {"ARF_ULRICH",
       {"min mult wrt I, IM I-Ulrich, and I annihilating IM/xIM are equivalent", false,
        suite_arf_ulrich}},
      {"AGCHAR",
       {"min mult wrt K pushes to the dual; trace ideals pull K-Ulrich back", true, suite_agchar}},
      {"AGCHAR_COR",
       {"for trace ideals: min mult wrt K iff K-Ulrich", true, suite_agchar_cor}},
      {"RK_MINMULT", {"R[K] has minimal multiplicity wrt K", true, suite_rk_minmult}},
      {"AGA_CHAIN",
       {"Ulrich/min-mult chain for I and I* wrt K; equivalence when I is reflexive", true,
        suite_aga_chain}},
      {"AGA2", {"the I = m case of the dual chain (m is reflexive)", true, suite_aga2}},
      {"THM41",
       {"K min mult wrt a trace or reflexive ideal forces the ideal stable", true, suite_thm41}},
      {"COR42",
       {"stability, min mult of every sampled module, and min mult of K coincide for "
        "trace/reflexive I",
        true, suite_cor42}},
      {"COR43",
       {"ring min mult iff the canonical module has min mult (non-Gorenstein)", true,
        suite_cor43}},
      {"MDUAL", {"m* has min mult iff the ring does", false, suite_mdual}},
      {"IDEALIZATION",
       {"R x M has min mult iff the ring does and M is Ulrich; the R x m criterion", false,
        suite_idealization}},
      {"APPENDIX_A",
       {"for min-mult M: len(M/xM) = mu(mM) and mu(mM) >= mu(M)", false, suite_appendix_a}},
  };
  return table;
}

const SuiteDef& find_suite(const std::string& id) {
  for (const auto& [name, def] : registry()) {
    if (name == id) return def;
  }
  fail(errc::unknown_suite, "no suite named '" + id + "'");
}

}  // namespace

std::vector<SemigroupIdeal> ideal_family(const NumericalSemigroup& S, const FamilySpec& spec) {
  const long long W = std::max(spec.gen_window * S.conductor(), 2LL);
  const std::size_t cap = static_cast<std::size_t>(spec.max_ideals_per_ring);
  std::mt19937_64 rng(spec.seed ^ S.hash());
  // Reservoir sampling keeps the family uniform and deterministic when the
  // antichain count exceeds the cap.
  std::vector<std::vector<long long>> sample;
  unsigned long long seen = 0;
  antichains(S, W, [&](const std::vector<long long>& gens) {
    ++seen;
    if (sample.size() < cap) {
      sample.push_back(gens);
    } else {
      const unsigned long long j = rng() % seen;
      if (j < cap) sample[static_cast<std::size_t>(j)] = gens;
    }
  });
  std::sort(sample.begin(), sample.end());
  std::vector<SemigroupIdeal> out;
  out.reserve(sample.size());
  for (const auto& gens : sample) out.push_back(ideal_from_generators(S, gens));
  return out;
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& [name, def] : registry()) ids.push_back(name);
  return ids;
}

std::string suite_description(const std::string& id) { return find_suite(id).description; }

VerificationReport run_suite(const std::string& id, const FamilySpec& spec) {
  const SuiteDef& def = find_suite(id);
  const auto start = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.suite_id = id;
  rep.spec = spec;
  const bool need_non_symmetric = spec.non_symmetric_only || def.non_symmetric;
  const bool need_non_regular = spec.non_regular_only || need_non_symmetric;

  visit_by_genus(spec.genus_max, [&](const NumericalSemigroup& S) {
    if ((need_non_regular && S.frobenius() < 0) || (need_non_symmetric && S.is_symmetric())) {
      ++rep.rings_filtered;
      return;
    }
    ++rep.rings_visited;
    RingFamily fam(S, spec);
    rep.ideals_sampled += static_cast<long long>(fam.ideals.size());
    SuiteCtx ctx{fam, rep};
    def.fn(ctx);
  });

  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.semigroup, a.ideals, a.note) < std::tie(b.semigroup, b.ideals, b.note);
            });
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

json to_json(const FamilySpec& spec) {
  return json{{"genus_max", spec.genus_max},
              {"gen_window", spec.gen_window},
              {"max_ideals_per_ring", spec.max_ideals_per_ring},
              {"seed", spec.seed},
              {"non_symmetric_only", spec.non_symmetric_only},
              {"non_regular_only", spec.non_regular_only}};
}

json to_json(const VerificationReport& rep) {
  json ces = json::array();
  for (const Counterexample& ce : rep.counterexamples) {
    ces.push_back(json{{"semigroup", ce.semigroup}, {"ideals", ce.ideals}, {"note", ce.note}});
  }
  return json{{"suite", rep.suite_id},
              {"spec", to_json(rep.spec)},
              {"rings_visited", rep.rings_visited},
              {"rings_filtered", rep.rings_filtered},
              {"ideals_sampled", rep.ideals_sampled},
              {"instances_checked", rep.instances_checked},
              {"counterexamples", ces},
              {"elapsed_seconds", rep.elapsed_seconds}};
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

namespace {

std::string json_text(const json& j) { return j.dump(); }

// Runs one fixture check against its ring; returns an error message or "".
std::string run_check(const NumericalSemigroup& S, const json& chk) {
  const std::string op = chk.at("op").get<std::string>();
  auto expect = [&](const json& got) -> std::string {
    if (chk.at("expect") == got) return "";
    return op + ": expected " + json_text(chk.at("expect")) + ", got " + json_text(got);
  };

  if (op == "mingens") return expect(minimal_generators(parse_ideal_spec(S, chk.at("ideal"))));
  if (op == "mu") return expect(mu(parse_ideal_spec(S, chk.at("ideal"))));
  if (op == "eq") {
    const bool got = parse_ideal_spec(S, chk.at("lhs")) == parse_ideal_spec(S, chk.at("rhs"));
    return expect(got);
  }
  if (op == "length") {
    const long long got =
        length_quotient(parse_ideal_spec(S, chk.at("of")), parse_ideal_spec(S, chk.at("mod")));
    return expect(got);
  }
  if (op == "mult") {
    const long long got =
        multiplicity_wrt(parse_ideal_spec(S, chk.at("wrt")), parse_ideal_spec(S, chk.at("module")));
    return expect(got);
  }
  if (op == "reduction") {
    return expect(reduction_number(parse_ideal_spec(S, chk.at("ideal"))).reduction_number);
  }
  if (op == "sgclosure") {
    return expect(algebra_closure(parse_ideal_spec(S, chk.at("ideal"))).generators());
  }
  if (op == "idealization") {
    const IdealizationData d = idealization_data(S, parse_ideal_spec(S, chk.at("module")));
    const json got = {
        {"edim", d.edim_A}, {"e", d.e_A}, {"min_mult", d.min_mult}};
    for (const std::string key : {"edim", "e", "min_mult"}) {
      if (chk.contains("expect_" + key) && chk.at("expect_" + key) != got.at(key))
        return op + "." + key + ": expected " + json_text(chk.at("expect_" + key)) + ", got " +
               json_text(got.at(key));
    }
    return "";
  }
  if (op == "ring") {
    const std::string field = chk.at("field").get<std::string>();
    if (field == "e") return expect(S.multiplicity());
    if (field == "edim") return expect(S.embedding_dimension());
    if (field == "frobenius") return expect(S.frobenius());
    if (field == "conductor") return expect(S.conductor());
    if (field == "genus") return expect(S.genus());
    if (field == "gaps") return expect(S.gaps());
    fail(errc::parse_error, "unknown ring field '" + field + "'");
  }
  if (op == "pred") {
    const std::string name = chk.at("name").get<std::string>();
    Verdict v;
    if (name == "min-mult")
      v = has_min_mult(parse_ideal_spec(S, chk.at("module")), parse_ideal_spec(S, chk.at("wrt")));
    else if (name == "ulrich")
      v = is_ulrich(parse_ideal_spec(S, chk.at("module")), parse_ideal_spec(S, chk.at("wrt")));
    else if (name == "stable")
      v.value = is_stable(parse_ideal_spec(S, chk.at("ideal")));
    else if (name == "trace")
      v = is_trace(parse_ideal_spec(S, chk.at("ideal")));
    else if (name == "reflexive")
      v = is_reflexive(parse_ideal_spec(S, chk.at("ideal")));
    else if (name == "burch")
      v = burch_monomial_witness(parse_ideal_spec(S, chk.at("module")));
    else if (name == "min-mult-ring")
      v = is_min_mult_ring(S);
    else if (name == "almost-gorenstein")
      v = is_almost_gorenstein(S);
    else if (name == "arf")
      v.value = is_arf(S);
    else if (name == "symmetric")
      v.value = S.is_symmetric();
    else
      fail(errc::unknown_predicate, "no fixture predicate named '" + name + "'");
    std::string err = expect(v.value);
    if (!err.empty()) return err;
    if (chk.contains("expect_witness")) {
      if (!v.witness || json(*v.witness) != chk.at("expect_witness"))
        return op + ": witness mismatch, expected " + json_text(chk.at("expect_witness")) +
               ", got " + (v.witness ? json_text(json(*v.witness)) : "none");
    }
    return "";
  }
  fail(errc::parse_error, "unknown fixture op '" + op + "'");
}

}  // namespace

FixtureReport run_fixtures(const json& corpus) {
  const auto start = std::chrono::steady_clock::now();
  FixtureReport rep;
  for (const json& record : corpus.at("records")) {
    ++rep.records_checked;
    const std::string label = record.at("label").get<std::string>();
    NumericalSemigroup S = NumericalSemigroup::natural();
    try {
      S = parse_semigroup(record.at("ring").get<std::string>());
    } catch (const std::exception& ex) {
      rep.mismatches.push_back({label, std::string("bad ring: ") + ex.what()});
      continue;
    }
    for (const json& chk : record.at("checks")) {
      std::string err;
      try {
        err = run_check(S, chk);
      } catch (const std::exception& ex) {
        err = std::string("raised ") + ex.what();
      }
      if (err.empty()) {
        ++rep.checks_passed;
      } else {
        rep.mismatches.push_back({label, err});
      }
    }
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

FixtureReport run_fixtures_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open fixture corpus '" + path + "'");
  json corpus;
  try {
    corpus = json::parse(in);
  } catch (const std::exception& ex) {
    fail(errc::parse_error, std::string("bad fixture corpus: ") + ex.what());
  }
  return run_fixtures(corpus);
}

json to_json(const FixtureReport& rep) {
  json mism = json::array();
  for (const FixtureMismatch& m : rep.mismatches) {
    mism.push_back(json{{"label", m.label}, {"message", m.message}});
  }
  return json{{"records_checked", rep.records_checked},
              {"checks_passed", rep.checks_passed},
              {"mismatches", mism},
              {"elapsed_seconds", rep.elapsed_seconds}};
}

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

FamilySpec family_spec_from_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open config file '" + path + "'");
  FamilySpec spec;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string key, eq, value;
    std::istringstream ls(line);
    if (!(ls >> key)) continue;  // blank
    if (!(ls >> eq >> value) || eq != "=")
      fail(errc::parse_error, "config line " + std::to_string(lineno) + ": expected 'key = value'");
    auto as_bool = [&](const std::string& v) {
      if (v == "true" || v == "1") return true;
      if (v == "false" || v == "0") return false;
      fail(errc::parse_error, "config line " + std::to_string(lineno) + ": bad boolean '" + v + "'");
    };
    try {
      if (key == "genus_max")
        spec.genus_max = std::stoll(value);
      else if (key == "gen_window")
        spec.gen_window = std::stoll(value);
      else if (key == "max_ideals_per_ring")
        spec.max_ideals_per_ring = std::stoll(value);
      else if (key == "seed")
        spec.seed = std::stoull(value);
      else if (key == "non_symmetric_only")
        spec.non_symmetric_only = as_bool(value);
      else if (key == "non_regular_only")
        spec.non_regular_only = as_bool(value);
      else
        fail(errc::parse_error, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      fail(errc::parse_error, "config line " + std::to_string(lineno) + ": bad number '" + value + "'");
    }
  }
  return spec;
}

}  // namespace sgmm
