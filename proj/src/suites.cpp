#include "lrc/suites.hpp"

#include <algorithm>
#include <chrono>

#include "lrc/alt_constructions.hpp"
#include "lrc/presymplectic.hpp"
#include "lrc/sampling.hpp"
#include "lrc/splitting_change.hpp"

namespace lrc {

bool SuiteReport::all_passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"fn",      "foliation", "jacobiator", "morphism", "presymplectic",
                                                 "splitting", "derived", "transfer",   "all"};
  return names;
}

std::size_t term_count(const std::string& residual) {
  if (residual.empty()) return 0;
  std::size_t count = 1;
  int depth = 0;
  for (std::size_t i = 0; i + 2 < residual.size(); ++i) {
    const char c = residual[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == ' ' && (residual[i + 1] == '+' || residual[i + 1] == '-') && residual[i + 2] == ' ') ++count;
  }
  return count;
}

BracketMutation parse_mutation(const std::string& name) {
  if (name == "none") return BracketMutation::None;
  if (name == "drop-parity") return BracketMutation::DropParity;
  if (name == "flip-fn-term") return BracketMutation::FlipFnTerm;
  if (name == "flip-curvature-term") return BracketMutation::FlipCurvatureTerm;
  if (name == "second-parity") return BracketMutation::SecondParity;
  if (name == "form-degree-parity") return BracketMutation::FormDegreeParity;
  throw ConfigError("unknown mutation '" + name + "'");
}

namespace {

struct Context {
  const Scenario& sc;
  std::uint64_t seed;
  std::size_t cases;
  int max_arity;
  BracketMutation mutation;
};

void add_cases(SuiteReport& out, const std::string& prefix, const CheckReport& rep) {
  for (const auto& e : rep.entries) {
    CaseRecord c{prefix + "/" + e.id, e.passed(), ""};
    if (!c.passed) c.witness = std::to_string(term_count(e.residual)) + " term(s): " + e.residual;
    out.cases.push_back(std::move(c));
  }
}

FoliationStructure structure(const Context& cx) { return FoliationStructure::build(cx.sc.splitting); }

void run_fn(const Context& cx, SuiteReport& out) {
  Rng rng(cx.seed);
  const auto rep = fn_identity_suite(cx.sc.splitting, rng, cx.cases);
  CheckReport conv;
  for (const auto& e : rep.entries) conv.add(e.identity + "#" + std::to_string(e.sample), e.residual);
  add_cases(out, "fn", conv);
}

void run_foliation(const Context& cx, SuiteReport& out) {
  const auto F = structure(cx);
  const FoliationAlgebra alg(F, cx.mutation);
  auto fresh = [&] { return Rng(cx.seed); };
  Rng r1 = fresh(), r2 = fresh(), r3 = fresh(), r4 = fresh(), r5 = fresh(), r6 = fresh(), r7 = fresh();
  add_cases(out, "foliation/tables", bracket_table_check(F, r1, cx.cases));
  add_cases(out, "foliation/components", differential_components_check(F, r2, cx.cases));
  add_cases(out, "foliation/dbar", dbar_check(F, r3, cx.cases));
  add_cases(out, "foliation/pairing", pairing_check(F, r4, cx.cases));
  add_cases(out, "foliation/alt-binary", alt_binary_check(F, r5, cx.cases));
  add_cases(out, "foliation/ce", ce_component_check(F, r6, cx.cases));
  add_cases(out, "foliation/structure", structure_check(alg, r7, cx.cases));
}

void run_jacobiator(const Context& cx, SuiteReport& out) {
  const FoliationAlgebra alg(structure(cx), cx.mutation);
  Rng r1(cx.seed), r2(cx.seed);
  add_cases(out, "jacobiator", jacobiator_check(alg, r1, cx.cases, cx.max_arity));
  add_cases(out, "jacobiator/lrp", lrp_check(alg, r2, cx.cases, std::min(3, cx.max_arity)));
}

void run_morphism(const Context& cx, SuiteReport& out) {
  const FoliationAlgebra alg(structure(cx), cx.mutation);
  const auto bo = alg.bracket_oracle();
  const auto& sp = alg.splitting();
  const auto id = identity_morphism<FormVector>(bo.zero);
  const auto twice = compose_morphisms(id, id);
  Rng rng(cx.seed);
  CheckReport rep;
  for (int k = 1; k <= std::min(4, cx.max_arity); ++k)
    for (std::size_t s = 0; s < cx.cases; ++s) {
      std::vector<FormVector> v;
      std::vector<int> deg;
      for (int i = 0; i < k; ++i) {
        v.push_back(random_q(rng, sp, 1));
        deg.push_back(shifted_degree(v.back()));
      }
      const std::string tag = "#" + std::to_string(s);
      rep.add("identity/K" + std::to_string(k) + tag, residual_of(morphism_defect(id, bo, bo, v, deg)));
      const FormVector expect = k == 1 ? v.front() : FormVector(sp);
      rep.add("id-o-id/" + std::to_string(k) + tag, residual_of(twice.map(v, deg) - expect));
    }
  add_cases(out, "morphism", rep);
}

void run_presymplectic(const Context& cx, SuiteReport& out) {
  if (!cx.sc.omega) throw ConfigError("suite 'presymplectic' needs an [omega] section");
  PresymplecticData D = [&] {
    try {
      const auto& src = *cx.sc.omega;
      return PresymplecticData::validate(structure(cx), parse_form(src.text, cx.sc.splitting, src.line, src.column));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("omega.form: ") + e.what());
    }
  }();
  Rng r1(cx.seed), r2(cx.seed), r3(cx.seed), r4(cx.seed);
  add_cases(out, "presymplectic/data", presymplectic_data_check(D, r1, cx.cases));
  add_cases(out, "presymplectic/hamiltonian", anchor_recursion_check(D, r2, cx.cases, 3));
  add_cases(out, "presymplectic/morphism", kx_defect_check(D, r3, cx.cases, std::min(3, cx.max_arity)));
  add_cases(out, "presymplectic/jacobiator", op_jacobiator_check(D, r4, cx.cases, cx.max_arity));
}

void run_splitting(const Context& cx, SuiteReport& out) {
  if (!cx.sc.alt_splitting) throw ConfigError("suite 'splitting' needs an [alt_splitting] section");
  const auto pr = SplittingPair::build(cx.sc.splitting, cx.sc.alt_splitting);
  Rng rng(cx.seed);
  add_cases(out, "splitting", splitting_change_check(pr, rng, cx.cases, std::min(3, cx.max_arity)));
}

void run_derived(const Context& cx, SuiteReport& out) {
  const auto F = structure(cx);
  Rng r1(cx.seed), r2(cx.seed);
  add_cases(out, "derived/vdata", vdata_check(F, r1, cx.cases));
  add_cases(out, "derived/equivalence", derived_equivalence_check(F, r2, cx.cases, std::min(4, cx.max_arity)));
}

void run_transfer(const Context& cx, SuiteReport& out) {
  const auto F = structure(cx);
  Rng r1(cx.seed), r2(cx.seed);
  add_cases(out, "transfer/contraction", contraction_identity_check(F, r1, cx.cases));
  add_cases(out, "transfer/binary", transferred_binary_check(F, r2, cx.cases));
}

}  // namespace

SuiteReport run_suite(const Scenario& sc, const std::string& suite, const RunOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const Context cx{sc, opt.seed.value_or(sc.seed), opt.cases.value_or(sc.cases), opt.max_arity.value_or(sc.max_arity),
                   opt.mutation};
  if (cx.cases == 0) throw ConfigError("cases must be positive");
  if (cx.max_arity < 1) throw ConfigError("max arity must be positive");
  SuiteReport out;
  out.suite = suite;
  out.seed = cx.seed;
  if (suite == "fn") run_fn(cx, out);
  else if (suite == "foliation") run_foliation(cx, out);
  else if (suite == "jacobiator") run_jacobiator(cx, out);
  else if (suite == "morphism") run_morphism(cx, out);
  else if (suite == "presymplectic") run_presymplectic(cx, out);
  else if (suite == "splitting") run_splitting(cx, out);
  else if (suite == "derived") run_derived(cx, out);
  else if (suite == "transfer") run_transfer(cx, out);
  else if (suite == "all") {
    run_fn(cx, out);
    run_foliation(cx, out);
    run_jacobiator(cx, out);
    run_morphism(cx, out);
    if (sc.omega) run_presymplectic(cx, out);
    if (sc.alt_splitting) run_splitting(cx, out);
    run_derived(cx, out);
    run_transfer(cx, out);
  } else {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  out.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace lrc
