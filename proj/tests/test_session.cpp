#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "nakayama/hopf_io.hpp"
#include "nakayama/session.hpp"

using namespace nakayama;

namespace {

const char* kQuantum = R"(
field Qt
algebra A { generators: x1, x2  relations: x2*x1 - t*x1*x2 }
)";

ParseError parse_error(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError("none", 0, 0);
}

SessionResult run_text(const std::string& text, const std::filesystem::path& base = ".") {
  return run_session(parse_session(text, base));
}

std::size_t count_status(const Report& r, bool pass) {
  std::size_t n = 0;
  for (const auto& c : r.details) n += c.pass == pass;
  return n;
}

}  // namespace

TEST(Parse, QuantumPlaneSession) {
  Session s = parse_session(kQuantum);
  EXPECT_EQ(s.field, Field::rational_functions());
  ASSERT_EQ(s.algebras.size(), 1u);
  EXPECT_EQ(s.algebras[0].P.generators(), 2);
  EXPECT_TRUE(s.commands.empty());
}

TEST(Parse, MisspelledKeywordHasLocation) {
  ParseError e = parse_error("field Qt\nalgebra A { generators: x1, x2\n  relatons: x2*x1 - t*x1*x2 }\n");
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 3);
  EXPECT_NE(std::string(e.what()).find("relations:"), std::string::npos);
}

TEST(Parse, ScalarValidatedAgainstField) {
  ParseError e = parse_error("field Q\nalgebra A { generators: x, y relations: y*x - z*x*y }");
  EXPECT_NE(std::string(e.what()).find("z requires cyclotomic field"), std::string::npos);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 47);
}

TEST(Parse, ErrorInsideMultilineRelationsIsRelocated) {
  ParseError e = parse_error("field Q\nalgebra A {\n  generators: x, y\n  relations: x*x;\n    y*y + w*x }");
  EXPECT_EQ(e.line(), 5);
  EXPECT_EQ(e.column(), 11);
}

TEST(Parse, UndeclaredAndDuplicateNames) {
  EXPECT_NE(std::string(parse_error("hopf K = sweedler\nrun lemma31 C").what()).find("'C'"), std::string::npos);
  parse_error("hopf K = sweedler\nhopf K = sweedler");
  parse_error("hopf K = sweedler\ncoaction C on A by K { y: [[g]] }");
  parse_error("algebra A { generators: x relations: x*x }\ncoaction C on A by K { y: [[1]] }");
}

TEST(Parse, FieldMustComeFirst) {
  parse_error("hopf K = sweedler\nfield Q");
  parse_error("field Q\nfield Qt");
  parse_error("field R");
}

TEST(Parse, CoactionShapeAndElements) {
  const std::string head = "field Q\nalgebra A { generators: x1, x2 relations: x2*x1 + x1*x2 }\nhopf K = sweedler\n";
  parse_error(head + "coaction C on A by K { y: [[g, x]] }");
  parse_error(head + "coaction C on A by K { y: [[g, q], [0, 1]] }");
  Session s = parse_session(head + "coaction C on A by K { y: [[g, x], [0, 1]] }");
  ASSERT_EQ(s.coactions.size(), 1u);
  EXPECT_EQ(s.coactions[0].Y[0][1], s.hopfs[0].K.parse_element("x"));
}

TEST(Parse, CommandsAndFlags) {
  parse_error(std::string(kQuantum) + "run frobnicate A");
  parse_error(std::string(kQuantum) + "run hilbert A --colour red");
  parse_error(std::string(kQuantum) + "run hilbert A --max-deg");
  parse_error(std::string(kQuantum) + "run consequence A");
  Session s = parse_session(std::string(kQuantum) + "run consequence A --target \"y11*y22 - y22*y11\" --sl\n");
  ASSERT_EQ(s.commands.size(), 1u);
  EXPECT_EQ(s.commands[0].flags.at("target"), "y11*y22 - y22*y11");
  EXPECT_EQ(s.commands[0].flags.at("sl"), "true");
  EXPECT_EQ(s.commands[0].line, 4);
}

TEST(Parse, CommentsAreIgnored) {
  Session s = parse_session("# header\nfield Q # trailing\nhopf K = group_cyclic 3 # more\n");
  EXPECT_EQ(s.hopfs.size(), 1u);
}

TEST(Parse, SkewDeclaration) {
  Session s = parse_session("field Qt\nalgebra S = skew 3 { p12: t; p23: t^2 }\nrun qij S\n");
  ASSERT_TRUE(s.algebras[0].skew_p.has_value());
  EXPECT_EQ(s.algebras[0].P.relations().size(), 3u);
  SessionResult r = run_session(s);
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.reports[0].result["q"][0][2], "t^3");
  parse_error("field Qt\nalgebra S = skew 2 { p21: t }");
}

TEST(Run, CodeterminantCommandGivesSevenPasses) {
  SessionResult r = run_text(R"(
field cyclotomic 4
algebra A { generators: x1, x2  relations: x2*x1 - z*x1*x2 }
hopf K = group_cyclic 4
coaction C on A by K { y: [[g, 0], [0, g]] }
run lemma31 C
)");
  ASSERT_EQ(r.reports.size(), 1u);
  const Report& rep = r.reports[0];
  EXPECT_EQ(rep.status, Status::Pass);
  std::size_t lemma = 0;
  for (const auto& c : rep.details)
    if (c.identity.rfind("lemma31.", 0) == 0) {
      ++lemma;
      EXPECT_TRUE(c.pass) << c.identity;
    }
  EXPECT_EQ(lemma, 7u);
  EXPECT_EQ(rep.result["D"], "g^2");
}

TEST(Run, SweedlerMainTheoremPasses) {
  SessionResult r = run_text(R"(
field Q
algebra A { generators: x1, x2  relations: x2*x1 + x1*x2 }
hopf K = sweedler
coaction C on A by K { y: [[g, x], [0, 1]] }
run check-main-theorem C
run inner-faithful C
)");
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.reports[0].status, Status::Pass);
  EXPECT_EQ(r.reports[0].result["D"], "g");
}

TEST(Run, HilbertOfQuantumPlane) {
  SessionResult r = run_text(std::string(kQuantum) + "run hilbert A --max-deg 5\n");
  EXPECT_EQ(r.reports[0].result["hilbert"], Json::parse("[1,2,3,4,5,6]"));
}

TEST(Run, VerificationFailureExitsOne) {
  SessionResult r = run_text(R"(
field Q
algebra J { generators: x1, x2 relations: x2*x1 - x1*x2 - x1*x1 }
hopf K = group_cyclic 2
coaction C on J by K { y: [[g, 0], [0, 1]] }
run verify-coaction C
run lemma31 C
)");
  EXPECT_EQ(r.exit_code, kExitFail);
  EXPECT_EQ(r.reports[0].status, Status::Fail);
  EXPECT_EQ(r.reports[1].status, Status::Fail);
  EXPECT_GT(count_status(r.reports[1], false), 0u);
}

TEST(Run, UnsupportedExitsThree) {
  SessionResult r = run_text("field Q\nalgebra C { generators: x, y relations: x*x*y - y*x*x }\nrun dual C\n");
  EXPECT_EQ(r.exit_code, kExitUnsupported);
  EXPECT_EQ(r.reports[0].status, Status::Error);
  EXPECT_NE(r.reports[0].error.find("N >= 3"), std::string::npos);
  SessionResult q = run_text(std::string(kQuantum) + "run qij A\n");
  EXPECT_EQ(q.exit_code, kExitUnsupported);
}

TEST(Run, BadFlagValueIsParseError) {
  SessionResult r = run_text(std::string(kQuantum) + "run hilbert A --max-deg five\n");
  EXPECT_EQ(r.exit_code, kExitParse);
}

TEST(Run, ConsequenceCommand) {
  SessionResult r = run_text(std::string(kQuantum) +
                             "run consequence A --target \"y22*y11 - t*y21*y12 - D\"\n"
                             "run consequence A --target \"y11*y22 - y22*y11\"\n"
                             "run consequence A --target \"y22*y11 - t*y21*y12 - 1\" --sl\n");
  EXPECT_EQ(r.reports[0].status, Status::Pass);
  EXPECT_EQ(r.reports[1].status, Status::Fail);
  EXPECT_EQ(r.reports[2].status, Status::Pass);
  EXPECT_EQ(r.exit_code, kExitFail);
}

TEST(Run, ManinReportShape) {
  SessionResult r = run_text(std::string(kQuantum) + "run manin A\n");
  const Json& j = r.reports[0].result;
  EXPECT_EQ(j["comult"], "matrix");
  EXPECT_EQ(j["counit"], "kronecker");
  EXPECT_EQ(j["codeterminant"], "-t^-1*y12*y21 + y11*y22");
  EXPECT_EQ(j["relations"].size(), 3u);
}

TEST(Run, ReportsAreDeterministic) {
  const std::string text = std::string(kQuantum) +
                           "run dual A\nrun nakayama-alg A\nrun manin A\nrun koszul-check A --max-deg 6\n";
  auto a = run_text(text), b = run_text(text);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i)
    EXPECT_EQ(a.reports[i].to_json().dump(), b.reports[i].to_json().dump());
  Json j = a.reports[0].to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "target", "status", "details", "result"}));
}

TEST(Run, SaveAndLoadHopfThroughSessions) {
  auto dir = std::filesystem::temp_directory_path() / "nakayama_session_io";
  std::filesystem::create_directories(dir);
  auto r1 = run_text("field cyclotomic 3\nhopf T = taft 3 z\nrun save-hopf T --path taft3.json\n", dir);
  EXPECT_EQ(r1.exit_code, kExitPass);
  auto r2 = run_text("field cyclotomic 3\nhopf T = from_file \"taft3.json\"\nrun hopf-verify T\nrun s2-order T\n", dir);
  EXPECT_EQ(r2.exit_code, kExitPass);
  EXPECT_EQ(r2.reports[1].result["order"], 3);
  // a field mismatch is caught at declaration time
  EXPECT_THROW(parse_session("field Q\nhopf T = from_file \"taft3.json\"\n", dir), ParseError);
  EXPECT_THROW(parse_session("field Q\nhopf T = from_file \"missing.json\"\n", dir), ParseError);

  // broken antipode: loads, then hopf-verify fails
  Json j = hopf_to_json(sweedler(Field::rationals()));
  j["antipode"][2] = Json::array({"0", "0", "1", "0"});
  std::ofstream(dir / "broken.json") << j.dump(2);
  auto r3 = run_text("field Q\nhopf B = from_file \"broken.json\"\nrun hopf-verify B\n", dir);
  EXPECT_EQ(r3.exit_code, kExitFail);
  std::filesystem::remove_all(dir);
}

TEST(ExitCodes, CombinePriority) {
  EXPECT_EQ(combine_exit(kExitPass, kExitFail), kExitFail);
  EXPECT_EQ(combine_exit(kExitUnsupported, kExitFail), kExitUnsupported);
  EXPECT_EQ(combine_exit(kExitUnsupported, kExitParse), kExitParse);
  EXPECT_EQ(combine_exit(kExitInternal, kExitParse), kExitInternal);
  EXPECT_EQ(combine_exit(kExitPass, kExitPass), kExitPass);
}

TEST(Commands, NamesCoverTheCatalogue) {
  const auto& names = command_names();
  for (const char* c : {"dual", "hilbert", "koszul-check", "nakayama-ext", "nakayama-alg", "is-r-nakayama", "qij",
                        "hopf-verify", "grouplikes", "s2-order", "verify-coaction", "hcodet", "lemma31",
                        "check-main-theorem", "inner-faithful", "solve-coactions", "manin", "sl-relations",
                        "consequence"})
    EXPECT_NE(std::find(names.begin(), names.end(), c), names.end()) << c;
}
