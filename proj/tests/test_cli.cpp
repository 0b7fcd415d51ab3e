#include <gtest/gtest.h>

#include "lrc/report.hpp"
#include "lrc/scenario.hpp"
#include "lrc/suites.hpp"
#include "run_process.hpp"

using namespace lrc;
using namespace lrc::testing;

namespace {

const char* kS1 = R"(# comment line
[scenario]
name = s1
seed = 5
cases = 3
max_arity = 3

[chart]
leaf = x
transverse = u1, u2

[splitting]
u2.x = u1   # V_u2 = d/du2 + u1 d/dx

[omega]
form = du1 ^ du2
)";

std::string verify(const std::string& args) { return lrcheck_bin() + " verify " + args; }

SuiteReport strip_elapsed(SuiteReport r) {
  r.elapsed_ms = 0;
  return r;
}

}  // namespace

TEST(Scenario, Parse) {
  const Scenario sc = parse_scenario(kS1);
  EXPECT_EQ(sc.name, "s1");
  EXPECT_EQ(sc.seed, 5u);
  EXPECT_EQ(sc.cases, 3u);
  EXPECT_EQ(sc.max_arity, 3);
  EXPECT_EQ(sc.chart.leaf, std::vector<std::string>{"x"});
  EXPECT_EQ(sc.chart.transverse, (std::vector<std::string>{"u1", "u2"}));
  EXPECT_EQ(sc.splitting->v(1, 0), Polynomial::variable(3, 1));
  EXPECT_TRUE(sc.splitting->v(0, 0).is_zero());
  EXPECT_EQ(sc.alt_splitting, nullptr);
  ASSERT_TRUE(sc.omega.has_value());
  EXPECT_EQ(sc.omega->text, "du1 ^ du2");
}

TEST(Scenario, Defaults) {
  const Scenario sc = parse_scenario("[chart]\nleaf = x\ntransverse = u\n", "fallback");
  EXPECT_EQ(sc.name, "fallback");
  EXPECT_EQ(sc.seed, 1u);
  EXPECT_EQ(sc.cases, 25u);
  EXPECT_EQ(sc.max_arity, 5);
  EXPECT_FALSE(sc.omega.has_value());
}

TEST(Scenario, UnknownCoordinateNamesTheField) {
  const std::string text = "[chart]\nleaf = x\ntransverse = u1, u2\n[splitting]\nu2.x = u3 + 1\n";
  try {
    parse_scenario(text);
    FAIL() << "no error";
  } catch (const ScenarioError& e) {
    EXPECT_EQ(e.field(), "splitting.u2.x");
    EXPECT_NE(std::string(e.what()).find("u3"), std::string::npos) << e.what();
  }
}

TEST(Scenario, SyntaxErrorHasLineAndColumn) {
  const std::string text = "[chart]\nleaf = x\ntransverse = u1, u2\n[splitting]\nu2.x = u1 * * x\n";
  try {
    parse_scenario(text);
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
    EXPECT_EQ(e.column(), 13);
  }
}

TEST(Scenario, BadFieldsThrow) {
  EXPECT_THROW(parse_scenario("[chart]\n"), ScenarioError);
  EXPECT_THROW(parse_scenario("[chart]\nleaf = x\ntransverse = x\n"), ScenarioError);
  EXPECT_THROW(parse_scenario("[chart]\nleaf = x\ntransverse = u\n[scenario]\nmax_arity = 9\n"), ScenarioError);
  EXPECT_THROW(parse_scenario("[chart]\nleaf = x\ntransverse = u\n[bogus]\n"), ParseError);
  EXPECT_THROW(parse_scenario("[chart]\nleaf = x\ntransverse = u\n[splitting]\nx.u = 1\n"), ScenarioError);
  EXPECT_THROW(load_scenario("/nonexistent/file.ini"), ScenarioError);
}

TEST(Suites, TermCountAndMutationNames) {
  EXPECT_EQ(term_count(""), 0u);
  EXPECT_EQ(term_count("x"), 1u);
  EXPECT_EQ(parse_mutation("none"), BracketMutation::None);
  EXPECT_EQ(parse_mutation("drop-parity"), BracketMutation::DropParity);
  EXPECT_THROW(parse_mutation("nope"), ConfigError);
  EXPECT_THROW(run_suite(parse_scenario(kS1), "nope"), ConfigError);
  EXPECT_THROW(run_suite(parse_scenario(kS1), "splitting"), ConfigError);
}

TEST(Suites, MutationProducesWitness) {
  RunOptions opt;
  opt.mutation = BracketMutation::FlipCurvatureTerm;
  const SuiteReport r = run_suite(parse_scenario(kS1), "jacobiator", opt);
  EXPECT_FALSE(r.all_passed());
  for (const auto& c : r.cases)
    if (!c.passed) {
      EXPECT_FALSE(c.witness.empty()) << c.id;
      EXPECT_NE(c.witness.find("term"), std::string::npos) << c.witness;
    }
}

TEST(Report, JsonRoundTrip) {
  const SuiteReport r = run_suite(parse_scenario(kS1), "fn");
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.seed, 5u);
  const SuiteReport back = parse_report_json(report_json(r));
  EXPECT_EQ(back.suite, r.suite);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(back.elapsed_ms, r.elapsed_ms);
  ASSERT_EQ(back.cases.size(), r.cases.size());
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    EXPECT_EQ(back.cases[i].id, r.cases[i].id);
    EXPECT_EQ(back.cases[i].passed, r.cases[i].passed);
  }
}

TEST(Report, EmptyAndFailingReports) {
  SuiteReport empty;
  empty.suite = "fn";
  const SuiteReport back = parse_report_json(report_json(empty));
  EXPECT_TRUE(back.cases.empty());
  SuiteReport bad;
  bad.suite = "jacobiator";
  bad.cases.push_back({"J2#0", false, "1 term(s): x"});
  const std::string js = report_json(bad);
  EXPECT_NE(js.find("\"status\": \"fail\""), std::string::npos);
  EXPECT_NE(js.find("\"witness\": \"1 term(s): x\""), std::string::npos);
  EXPECT_EQ(parse_report_json(js).cases.at(0).witness, "1 term(s): x");
  EXPECT_THROW(parse_report_json("{\"suite\": 3}"), std::invalid_argument);
  EXPECT_THROW(parse_report_json("not json"), std::invalid_argument);
  EXPECT_THROW(emit_report(bad, ReportFormat::Json, "/nonexistent/dir/out.json"), ConfigError);
}

TEST(Report, SameSeedSameCases) {
  const Scenario sc = parse_scenario(kS1);
  const auto a = run_suite(sc, "foliation"), b = run_suite(sc, "foliation");
  EXPECT_EQ(report_json(strip_elapsed(a)), report_json(strip_elapsed(b)));
}

TEST(Cli, ExitCodes) {
  const std::string s1 = fixture("s1.ini");
  EXPECT_EQ(run_process(verify("--scenario " + s1 + " --suite fn")).exit_code, 0);
  EXPECT_EQ(run_process(verify("--scenario " + s1 + " --suite jacobiator --max-arity 3 --cases 5 "
                               "--inject-mutation drop-parity")).exit_code, 1);
  EXPECT_EQ(run_process(verify("--suite fn")).exit_code, 2);
  EXPECT_EQ(run_process(verify("--scenario " + s1 + " --suite bogus")).exit_code, 2);
  EXPECT_EQ(run_process(verify("--scenario " + s1 + " --suite fn --max-arity 9")).exit_code, 2);
  EXPECT_EQ(run_process(verify("--scenario /nonexistent.ini --suite fn")).exit_code, 2);
  EXPECT_EQ(run_process(verify("--scenario " + fixture("flat.ini") + " --suite splitting")).exit_code, 2);
  EXPECT_EQ(run_process(lrcheck_bin() + " --help").exit_code, 0);

  const auto unknown = write_temp("unknown", "[chart]\nleaf = x\ntransverse = u1, u2\n[splitting]\nu2.x = u3\n");
  const auto r = run_process(verify("--scenario " + unknown.string() + " --suite fn"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("splitting.u2.x"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("u3"), std::string::npos) << r.out;
  std::filesystem::remove(unknown);

  const auto syntax = write_temp("syntax", "[chart]\nleaf = x\ntransverse = u1, u2\n[splitting]\nu2.x = (u1\n");
  const auto r2 = run_process(verify("--scenario " + syntax.string() + " --suite fn"));
  EXPECT_EQ(r2.exit_code, 2);
  EXPECT_NE(r2.out.find("line 5"), std::string::npos) << r2.out;
  std::filesystem::remove(syntax);
}

TEST(Cli, JsonIsDeterministic) {
  const std::string s1 = fixture("s1.ini");
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / ("lrcheck-a-" + std::to_string(::getpid()) + ".json");
  const auto b = dir / ("lrcheck-b-" + std::to_string(::getpid()) + ".json");
  for (const auto& p : {a, b})
    ASSERT_EQ(run_process(verify("--scenario " + s1 + " --suite foliation --format json --out " + p.string())).exit_code,
              0);
  const SuiteReport ra = parse_report_json(slurp(a)), rb = parse_report_json(slurp(b));
  EXPECT_EQ(report_json(strip_elapsed(ra)), report_json(strip_elapsed(rb)));
  EXPECT_EQ(ra.suite, "foliation");
  EXPECT_EQ(ra.seed, 20240611u);
  const auto text = run_process(verify("--scenario " + s1 + " --suite fn --seed 3 --cases 2"));
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_NE(text.out.find("suite fn: 12/12 passed, seed 3"), std::string::npos) << text.out;
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
