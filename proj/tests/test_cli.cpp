#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "ghz/cli/run.hpp"

using namespace ghz;
using namespace ghz::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun ghz_cli(const std::string& args) {
  std::string cmd = std::string(GHZ_CLI_PATH) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) out.append(buf, n);
  int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Scenario builtin(const std::string& name) { return parse_scenario(builtin_scenarios().at(name)); }

Report run(const std::string& cmd, const std::string& example, Options o = {}) {
  Request q;
  q.command = cmd;
  q.example = example;
  q.options = o;
  return execute(q);
}

}  // namespace

TEST(Scenario, BuiltinsParseAndRoundTrip) {
  for (const auto& [name, text] : builtin_scenarios()) {
    Scenario s = parse_scenario(text);
    EXPECT_EQ(s.name, name);
    EXPECT_EQ(parse_scenario(serialize_scenario(s)), s) << name;
    EXPECT_NO_THROW(build_divisor(s)) << name;
  }
}

TEST(Scenario, BuiltinsMatchScenarioFiles) {
  for (const auto& [name, text] : builtin_scenarios()) {
    std::ifstream in(std::string(GHZ_SOURCE_DIR) + "/scenarios/" + name + ".json");
    ASSERT_TRUE(in) << name;
    std::string file((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(file, text) << name;
  }
}

TEST(Scenario, W25Content) {
  Scenario s = builtin("w25-imperfect");
  EXPECT_EQ(s.field, BaseField::rational_functions(2));
  PolyhedralDivisor D = build_divisor(s);
  ASSERT_EQ(D.support().size(), 2u);
  EXPECT_EQ(pdiv_eval(D, IntVec{Integer(-5)}).str(), "-1·[t] -1·[t^2+l]");
}

TEST(Scenario, Char2RamifiedContent) {
  Scenario s = builtin("char2-ramified");
  PolyhedralDivisor D = build_divisor(s);
  EXPECT_EQ(D.tail(), Cone::orthant(2));
  EXPECT_EQ(D.at(build_point("t", s, TrustPolicy::Strict)).vertices(), std::vector<RatVec>{(RatVec{Rational(1, 2), Rational(0)})});
}

TEST(Scenario, Errors) {
  std::string bad = builtin_scenarios().at("half-point-surface");
  std::string zero = bad;
  zero.replace(zero.find("1/2"), 3, "1/0");
  EXPECT_THROW(parse_scenario(zero), ParseError);
  try {
    parse_scenario("{\n  \"field\": {\"kind\": \"Q\"},\n  \"rank\": 1,,\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    parse_scenario(R"({"field": {"kind": "Q"}, "rank": 1, "support": [{"point": "t", "vertices": [["1", "2"]]}]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("support[0].vertices[0]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_scenario(R"({"field": {"kind": "Fp", "p": 4}, "rank": 1})"), ParseError);
}

TEST(Scenario, FieldOverride) {
  Scenario q = with_field(builtin("char2-ramified"), parse_field_name("Q"));
  EXPECT_EQ(q.field, BaseField::rationals());
  PolyhedralDivisor D = build_divisor(q);
  EXPECT_TRUE(D.in_support(build_point("t-1", q, TrustPolicy::Strict)));
  EXPECT_EQ(parse_field_name("F3(l)"), BaseField::rational_functions(3));
  EXPECT_EQ(parse_field_name("F_5"), BaseField::prime_field(5));
  EXPECT_THROW(parse_field_name("R"), ParseError);
}

TEST(Commands, CoherenceVerdicts) {
  Report a = run("coherent", "w25-imperfect");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.verdict, "coherent");
  EXPECT_FALSE(a.trust.empty());
  Report b = run("coherent", "w25-rational");
  EXPECT_EQ(b.exit_code, 1);
  ASSERT_EQ(b.witnesses.size(), 1u);
  EXPECT_EQ(b.witnesses[0].rfind("(v) fails at t+1, v=(1/5)", 0), 0u) << b.witnesses[0];
}

TEST(Commands, Eval) {
  Options o;
  o.m = "-5";
  Report r = run("eval", "w25-imperfect", o);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.verdict, "-1·[t] -1·[t^2+l]");
  EXPECT_EQ(run("eval", "w25-imperfect").exit_code, 2);  // --m missing
}

TEST(Commands, ExampleRuns) {
  Request q;
  q.command = "example";
  q.example = "w25-imperfect";
  EXPECT_EQ(execute(q).exit_code, 0);
  q.example = "char2-ramified";
  EXPECT_EQ(execute(q).exit_code, 0);
  q.field = "Q";
  q.run = "coherent";
  Report r = execute(q);
  EXPECT_EQ(r.exit_code, 1);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].rfind("(v) fails", 0), 0u);
  q.run = "verify";
  Report v = execute(q);
  EXPECT_EQ(v.exit_code, 1);
  bool stab = false;
  for (const auto& w : v.witnesses) stab |= w.find("d^(1)((1)*chi^(0,1))") != std::string::npos && w.find("chi^(1,1) outside A") != std::string::npos;
  EXPECT_TRUE(stab);
  Request t;
  t.command = "example";
  t.example = "toric-demo";
  Report tr = execute(t);
  EXPECT_EQ(tr.exit_code, 0);
  EXPECT_EQ(tr.verdict, "pass");
}

TEST(Commands, JsonAndTextAgree) {
  for (const auto& [name, text] : builtin_scenarios())
    for (const std::string cmd : {"validate", "coherent", "verify", "toric-check"}) {
      Report r = run(cmd, name);
      json j = json::parse(r.to_json().dump());
      EXPECT_EQ(j["verdict"], r.verdict);
      EXPECT_EQ(j["witnesses"].get<std::vector<std::string>>(), r.witnesses);
      std::string txt = r.text();
      EXPECT_NE(txt.find(r.verdict), std::string::npos);
      for (const auto& w : r.witnesses) EXPECT_NE(txt.find("witness: " + w), std::string::npos);
    }
}

TEST(Commands, Deterministic) {
  Report a = run("classify", "w25-imperfect"), b = run("classify", "w25-imperfect");
  EXPECT_EQ(a.text(), b.text());
}

TEST(Binary, ExitCodesOnBuiltinSuite) {
  EXPECT_EQ(ghz_cli("coherent --example w25-imperfect").code, 0);
  CliRun neg = ghz_cli("coherent --example w25-rational");
  EXPECT_EQ(neg.code, 1);
  EXPECT_NE(neg.out.find("(v) fails at t+1"), std::string::npos);
  CliRun ev = ghz_cli("eval --example w25-imperfect -m -5");
  EXPECT_EQ(ev.code, 0);
  EXPECT_NE(ev.out.find("-1·[t] -1·[t^2+l]"), std::string::npos);
  EXPECT_EQ(ghz_cli("example w25-imperfect --run verify").code, 0);
  EXPECT_EQ(ghz_cli("example char2-ramified --field Q --run coherent").code, 1);
  EXPECT_EQ(ghz_cli("example toric-demo").code, 0);
  EXPECT_EQ(ghz_cli("example half-point-surface").code, 0);
  EXPECT_EQ(ghz_cli("example p1-demo").code, 0);
  EXPECT_EQ(ghz_cli("frobnicate").code, 2);
  EXPECT_EQ(ghz_cli("eval --example no-such-example -m 1").code, 2);
  EXPECT_EQ(ghz_cli("eval --scenario /nonexistent.json -m 1").code, 2);
  CliRun js = ghz_cli("coherent --example w25-rational --json");
  EXPECT_EQ(js.code, 1);
  json j = json::parse(js.out);
  EXPECT_EQ(j["verdict"], "not coherent");
}

TEST(Binary, ScenarioFile) {
  std::string path = std::string(GHZ_SOURCE_DIR) + "/scenarios/char2-ramified.json";
  CliRun r = ghz_cli("apply --scenario " + path + " --m 0,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d^(2)((1)*chi^(0,1)) = (1/(t^2+t))*chi^(2,1)"), std::string::npos) << r.out;
}
