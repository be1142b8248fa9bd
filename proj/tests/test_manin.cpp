#include <gtest/gtest.h>

#include "corpus.hpp"
#include "nakayama/manin.hpp"

using namespace nakayama;

namespace {

const Field kQ = Field::rationals();

std::vector<NCPoly> parse_all(const MatrixBialgebraPresentation& M, const std::vector<std::string>& texts) {
  std::vector<NCPoly> out;
  for (const auto& t : texts) out.push_back(parse_ncpoly(t, M.names, M.field));
  return out;
}

}  // namespace

TEST(Manin, Names) {
  EXPECT_EQ(manin_names(2), (std::vector<std::string>{"y11", "y12", "y21", "y22"}));
  EXPECT_EQ(manin_names(10)[11], "y_2_2");
}

TEST(Manin, QuantumPlaneMatchesLemmaSystem) {
  Field f = Field::rational_functions();
  auto M = manin_matrix_relations(corpus::quantum_plane(f, "t"));
  EXPECT_EQ(M.raw_count, 3u);
  // D eliminated between the two codeterminant equations
  auto want = parse_all(M, {"y12*y11 - t*y11*y12", "y22*y21 - t*y21*y22",
                            "y22*y11 - t*y21*y12 - y11*y22 + t^-1*y12*y21"});
  EXPECT_TRUE(corpus::same_span(M.relations, want));
  ASSERT_TRUE(M.codeterminant.has_value());
  EXPECT_EQ(*M.codeterminant, M.parse("y11*y22 - t^-1*y12*y21"));
}

TEST(Manin, JordanPlaneMatchesLemmaSystem) {
  auto M = manin_matrix_relations(corpus::jordan_plane(kQ));
  const std::string e1 = "(y12*y11 - y11*y12 - y11*y11)", e2 = "(y12*y21 - y11*y22 - y11*y21)",
                    e3 = "(y22*y11 - y21*y12 - y21*y11)", e4 = "(y22*y21 - y21*y22 - y21*y21)";
  auto want = parse_all(M, {e1 + " - " + e2, e1 + " + " + e3, e4});
  EXPECT_TRUE(corpus::same_span(M.relations, want));
}

TEST(Manin, LemmaEquationsWithCodeterminant) {
  Field f = Field::rational_functions();
  auto Mq = manin_matrix_relations(corpus::quantum_plane(f, "t"));
  for (const char* eq : {"y12*y11 - t*y11*y12", "y22*y21 - t*y21*y22", "y22*y11 - t*y21*y12 - D",
                         "y11*y22 - t^-1*y12*y21 - D"})
    EXPECT_TRUE(consequence_check(Mq, Mq.parse(eq))) << eq;

  auto Mj = manin_matrix_relations(corpus::jordan_plane(kQ));
  for (const char* eq : {"y12*y11 - y11*y12 - y11*y11 + D", "y12*y21 - y11*y22 - y11*y21 + D",
                         "y22*y11 - y21*y12 - y21*y11 - D", "y22*y21 - y21*y22 - y21*y21"})
    EXPECT_TRUE(consequence_check(Mj, Mj.parse(eq))) << eq;
}

TEST(Manin, NegativeConsequence) {
  Field f = Field::rational_functions();
  auto M = manin_matrix_relations(corpus::quantum_plane(f, "t"));
  EXPECT_FALSE(consequence_check(M, M.parse("y11*y22 - y22*y11")));
}

TEST(Manin, SlRelations) {
  Field f = Field::rational_functions();
  auto M = sl_relation_set(corpus::quantum_plane(f, "t"));
  ASSERT_TRUE(M.inhomogeneous.has_value());
  EXPECT_TRUE(consequence_check(M, M.parse("y22*y11 - t*y21*y12 - 1")));
  EXPECT_TRUE(consequence_check(M, M.parse("y11*y22 - t^-1*y12*y21 - 1")));
  EXPECT_FALSE(consequence_check(M, M.parse("y11*y22 - 1")));
}

TEST(Manin, DegreeCapAndUnsupported) {
  auto M = manin_matrix_relations(corpus::jordan_plane(kQ));
  EXPECT_THROW(consequence_check(M, M.parse("y11*y11*y11*y11"), 3), DegreeCapExceeded);
  auto cubic = corpus::algebra(kQ, {"x", "y"}, {"x*x*y - y*x*x"});
  EXPECT_THROW(manin_matrix_relations(cubic), Unsupported);
}

TEST(Manin, FreeAlgebraHasNoRelations) {
  auto M = manin_matrix_relations(corpus::algebra(kQ, {"x", "y"}, {}));
  EXPECT_TRUE(M.relations.empty());
  EXPECT_FALSE(M.codeterminant.has_value());
  EXPECT_THROW(M.parse("D"), InvalidArgument);
}

TEST(ManinProperties, VerifiedCoactionsAnnihilateEveryRelation) {
  for (const auto& c : corpus::coaction_corpus()) {
    auto M = manin_matrix_relations(c.A);
    for (const auto& Y : solve_coactions(c.A, c.K).coactions)
      for (const auto& r : M.relations) EXPECT_TRUE(c.K.is_zero(substitute(c.K, r, Y))) << c.name;
  }
}

TEST(ManinProperties, NonCoactionViolatesSomeRelation) {
  HopfAlgebra C2 = group_cyclic(kQ, 2);
  auto A = corpus::jordan_plane(kQ);
  auto M = manin_matrix_relations(A);
  HMatrix Y = hm_parse(C2, {{"g", "0"}, {"0", "1"}});
  bool violated = false;
  for (const auto& r : M.relations) violated = violated || !C2.is_zero(substitute(C2, r, Y));
  EXPECT_TRUE(violated);
}
