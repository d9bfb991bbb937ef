#include <gtest/gtest.h>

#include <cstdlib>

#include "divcert/error.hpp"
#include "divcert/parser.hpp"
#include "divcert/report.hpp"

using namespace divcert;

namespace {

TaskSpec spec(const std::string& task) {
  TaskSpec s;
  s.task = task;
  return s;
}

std::string error_message(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Syntax);
    return e.what();
  }
  ADD_FAILURE() << "parsed: " << text;
  return "";
}

const char* kNoether = "ring x y; gens x, y; target x^2 + x*y;";
const char* kConverse = "ring x y; gens x^2, x^2 + x; target x*y;";
const char* kMacaulay = "ring x y; variety ; gens x^2, y^2, x+y+1; target 1";

}  // namespace

TEST(Parser, Examples) {
  auto m = parse_instance(kMacaulay);
  EXPECT_EQ(m.m(), 3);
  EXPECT_TRUE(m.variety.empty());
  auto c = parse_instance("ring x y; gens x^2, x^2+x; target x*y^3");
  EXPECT_EQ(to_string(c.target), "x*y^3");
  EXPECT_NE(error_message("gens x^2").find("'gens' before the 'ring'"), std::string::npos);
}

TEST(Parser, Literals) {
  RingPtr ring = Ring::make({"x", "y"});
  EXPECT_EQ(to_string(parse_polynomial("-3/6*x^2 + 4/2", ring)), "-1/2*x^2 + 2");
  EXPECT_EQ(to_string(parse_polynomial("(x + y)^2 - 2*x*y", ring)), "x^2 + y^2");
  EXPECT_EQ(to_string(parse_polynomial("0", ring)), "0");
  EXPECT_EQ(parse_polynomial("x - x", ring), Polynomial(ring));
}

TEST(Parser, ErrorsCarryPositions) {
  EXPECT_NE(error_message("ring x y;\ngens 2x;").find("line 2, column 7: implicit multiplication"), std::string::npos);
  EXPECT_NE(error_message("ring x y; gens z;").find("unknown variable 'z'"), std::string::npos);
  EXPECT_NE(error_message("ring x y; gens 1.5*x;").find("non-rational"), std::string::npos);
  EXPECT_NE(error_message("ring x _h0; gens x;").find("reserved"), std::string::npos);
  EXPECT_NE(error_message("ring x y; gens x; gens y;").find("duplicate"), std::string::npos);
  EXPECT_NE(error_message("ring x y; gens x y;").find("implicit multiplication"), std::string::npos);
  EXPECT_NE(error_message("ring x; gens x/2;").find("expected"), std::string::npos);
  EXPECT_NE(error_message("ring x; gens 1/0;").find("zero denominator"), std::string::npos);
  EXPECT_NE(error_message("ring x;").find("gens"), std::string::npos);
  error_message("ring x; gens x; target x &;");
}

TEST(Parser, CommentsAndWhitespace) {
  auto inst = parse_instance("# a comment\nring x y;   # vars\n\ngens\n  x,\n  y;\ntarget x;\n");
  EXPECT_EQ(inst.m(), 2);
}

TEST(Run, MembershipFeasible) {
  TaskSpec s = spec("membership");
  s.degree = 2;
  RunResult r = run_text(s, kNoether);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["status"], "feasible");
  EXPECT_EQ(r.report["certificate"]["rho"], 2);
  EXPECT_TRUE(r.report["certificate"]["verified"].get<bool>());
}

TEST(Run, MembershipInfeasible) {
  TaskSpec s = spec("membership");
  s.degree = 1;
  RunResult r = run_text(s, "ring x y; gens x^2, x^2 + x; target x;");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["result"]["status"], "infeasible");
}

TEST(Run, BoundsMacaulay) {
  TaskSpec s = spec("bounds");
  s.theorem = "1.1";
  RunResult r = run_text(s, kMacaulay);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["rho"], 3);
  EXPECT_EQ(r.report["bound_report"]["rho"], 3);
}

TEST(Run, MinimalDegreeAndStatuses) {
  TaskSpec s = spec("minimal-degree");
  RunResult r = run_text(s, kConverse);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["minimal_degree"], 3);
  RunResult not_in = run_text(s, "ring x y; gens x, y; target 1;");
  EXPECT_EQ(not_in.exit_code, 2);
  EXPECT_EQ(not_in.report["result"]["status"], "not-in-ideal");
}

TEST(Run, RegularityResolutionHypothesesTheorem) {
  RunResult reg = run_text(spec("regularity"), "ring x y z; variety y - z^2, x - z^3; gens x; target x;");
  EXPECT_EQ(reg.exit_code, 0);
  EXPECT_EQ(reg.report["result"]["reg_X"], 2);
  EXPECT_EQ(reg.report["result"]["deg_X"], 3);

  RunResult res = run_text(spec("resolution"), "ring x y; gens x^2, x*y; target x;");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.report["result"]["length"], 2);

  RunResult hyp = run_text(spec("hypotheses"), kConverse);
  EXPECT_EQ(hyp.exit_code, 2);
  EXPECT_EQ(hyp.report["hypothesis_report"].size(), 6u);

  TaskSpec t = spec("theorem");
  t.theorem = "1.2";
  RunResult th = run_text(t, kNoether);
  EXPECT_EQ(th.exit_code, 0);
  EXPECT_EQ(th.report["result"]["status"], "feasible");
  EXPECT_TRUE(th.report["result"]["guaranteed"].get<bool>());
}

TEST(Run, ErrorsAndValidation) {
  RunResult bad = run_text(spec("membership"), kNoether);  // no --degree
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.report["error"]["kind"], "InvalidParameter");
  TaskSpec cap = spec("membership");
  cap.degree = 2;
  cap.cap = 4;
  EXPECT_EQ(run_text(cap, kNoether).exit_code, 1);
  TaskSpec unknown = spec("factor");
  EXPECT_EQ(run_text(unknown, kNoether).exit_code, 1);
  TaskSpec syntax = spec("membership");
  syntax.degree = 1;
  RunResult e = run_text(syntax, "gens x^2");
  EXPECT_EQ(e.exit_code, 1);
  EXPECT_EQ(e.report["error"]["kind"], "Syntax");
  TaskSpec cinf = spec("hypotheses");
  cinf.theorem = "1.5";
  cinf.c_infinity = "3";
  EXPECT_EQ(run_text(cinf, kNoether).exit_code, 1);
  cinf.c_infinity = "-inf";
  EXPECT_EQ(run_text(cinf, kNoether).exit_code, 0);
  cinf.c_infinity = "two";
  EXPECT_EQ(run_text(cinf, kNoether).exit_code, 1);
  TaskSpec missing_file = spec("regularity");
  missing_file.input_path = "/nonexistent/instance.txt";
  EXPECT_EQ(run(missing_file).exit_code, 1);
}

TEST(Run, ReportsAreDeterministic) {
  TaskSpec s = spec("theorem");
  s.theorem = "1.1";
  RunResult a = run_text(s, kMacaulay), b = run_text(s, kMacaulay);
  EXPECT_EQ(canonical_body(a.report), canonical_body(b.report));
  EXPECT_TRUE(a.report.contains("timings"));
  EXPECT_EQ(canonical_body(a.report).find("timings"), std::string::npos);
  auto keys = std::vector<std::string>{};
  for (auto it = a.report.begin(); it != a.report.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys.front(), "task");
  EXPECT_EQ(keys.back(), "timings");
}

TEST(Run, CertificatesRoundTrip) {
  const char* texts[] = {kNoether, kMacaulay, "ring x y; variety y - x^2; gens y; target x^2 + 3/7*x*y;",
                         "ring x y; gens x^2, x^2 + x; target x*y^4;"};
  for (const char* text : texts) {
    TaskSpec s = spec("minimal-degree");
    RunResult r = run_text(s, text);
    ASSERT_EQ(r.exit_code, 0) << text;
    Json reloaded = Json::parse(r.report.dump());
    auto inst = parse_instance(text);
    Certificate c = certificate_from_json(reloaded["certificate"], inst);
    EXPECT_TRUE(verify_certificate(inst, c)) << text;
  }
}

TEST(Run, FileInput) {
  const char* dir = std::getenv("DIVCERT_DATA");
  if (!dir) GTEST_SKIP() << "DIVCERT_DATA not set";
  TaskSpec s = spec("membership");
  s.input_path = std::string(dir) + "/noether.txt";
  s.degree = 2;
  EXPECT_EQ(run(s).exit_code, 0);
}
