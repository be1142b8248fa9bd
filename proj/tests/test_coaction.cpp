#include <gtest/gtest.h>

#include "corpus.hpp"
#include "nakayama/coaction.hpp"
#include "nakayama/manin.hpp"

using namespace nakayama;

namespace {

const Field kQ = Field::rationals();

HMatrix parse_y(const HopfAlgebra& K, const std::vector<std::vector<std::string>>& rows) { return hm_parse(K, rows); }

bool contains(const std::vector<HMatrix>& all, const HMatrix& Y) {
  for (const auto& x : all)
    if (x == Y) return true;
  return false;
}

// Independent check of relation preservation: substitute x_j -> sum_i x_i (x) Y[i][j]
// into each relation and reduce the A-side coefficients, entry by entry in K.
bool preserves_relations_oracle(const GradedPresentation& A, const HopfAlgebra& K, const HMatrix& Y) {
  const int n = A.generators();
  for (const auto& r : A.relations()) {
    // coefficient of each normal word of A_2, as an element of K
    const auto& slice = A.slice(2);
    std::vector<HopfElement> acc(slice.dim(), K.zero());
    for (const auto& [w, c] : r.terms())
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          NCPoly word = NCPoly::monomial(n, A.field(), Word{Letter(i), Letter(k)}, c);
          auto coords = A.coordinates(word, 2);
          HopfElement y = K.mul(Y[static_cast<std::size_t>(i)][w[0]], Y[static_cast<std::size_t>(k)][w[1]]);
          for (std::size_t s = 0; s < coords.size(); ++s)
            if (!coords[s].is_zero()) acc[s] = K.add(acc[s], K.scale(y, coords[s]));
        }
    for (const auto& e : acc)
      if (!K.is_zero(e)) return false;
  }
  return true;
}

}  // namespace

TEST(Comodule, DiagonalExamples) {
  HopfAlgebra C2 = group_cyclic(kQ, 2);
  auto J = corpus::jordan_plane(kQ);
  EXPECT_TRUE(verify_comodule_algebra(J, C2, parse_y(C2, {{"g", "0"}, {"0", "g"}})).pass());
  CheckList bad = verify_comodule_algebra(J, C2, parse_y(C2, {{"g", "0"}, {"0", "1"}}));
  EXPECT_FALSE(bad.pass());
  EXPECT_FALSE(bad.find("comodule.relations")->pass);
  EXPECT_TRUE(bad.find("comodule.delta")->pass);
}

TEST(Comodule, NonGrouplikeDiagonalFailsDelta) {
  HopfAlgebra S = sweedler(kQ);
  auto P = corpus::quantum_plane(kQ, "-1");
  CheckList cl = verify_comodule_algebra(P, S, parse_y(S, {{"x", "0"}, {"0", "1"}}));
  EXPECT_FALSE(cl.find("comodule.delta")->pass);
}

TEST(Comodule, ShapeMismatchThrows) {
  HopfAlgebra C2 = group_cyclic(kQ, 2);
  EXPECT_THROW(verify_comodule_algebra(corpus::jordan_plane(kQ), C2, parse_y(C2, {{"g"}})), AmbientMismatch);
}

TEST(Solver, FindsTheWorkedExamples) {
  Field f4 = Field::cyclotomic(4);
  HopfAlgebra C4 = group_cyclic(f4, 4);
  SolveResult r1 = solve_coactions(corpus::quantum_plane(f4, "z"), C4);
  EXPECT_EQ(r1.coactions.size(), 16u);
  EXPECT_TRUE(contains(r1.coactions, parse_y(C4, {{"g", "0"}, {"0", "g"}})));

  HopfAlgebra S = sweedler(kQ);
  SolveResult r2 = solve_coactions(corpus::quantum_plane(kQ, "-1"), S);
  EXPECT_TRUE(contains(r2.coactions, parse_y(S, {{"g", "x"}, {"0", "1"}})));
  EXPECT_FALSE(r2.partial);

  HopfAlgebra C2 = group_cyclic(kQ, 2);
  SolveResult r3 = solve_coactions(corpus::jordan_plane(kQ), C2);
  EXPECT_EQ(r3.coactions.size(), 2u);
  EXPECT_TRUE(contains(r3.coactions, parse_y(C2, {{"1", "0"}, {"0", "1"}})));
  EXPECT_TRUE(contains(r3.coactions, parse_y(C2, {{"g", "0"}, {"0", "g"}})));
}

TEST(Solver, EverySolutionPassesTheIndependentCheck) {
  for (const auto& c : corpus::coaction_corpus()) {
    SolveResult r = solve_coactions(c.A, c.K);
    EXPECT_FALSE(r.coactions.empty()) << c.name;
    for (const auto& Y : r.coactions) {
      EXPECT_TRUE(verify_comodule_algebra(c.A, c.K, Y).pass()) << c.name;
      EXPECT_TRUE(preserves_relations_oracle(c.A, c.K, Y)) << c.name;
    }
  }
}

TEST(Solver, CapMarksPartial) {
  Field f4 = Field::cyclotomic(4);
  SolveResult r = solve_coactions(corpus::quantum_plane(f4, "z"), group_cyclic(f4, 4), 3);
  EXPECT_TRUE(r.partial);
  EXPECT_LE(r.patterns, 3u);
}

TEST(Codeterminant, WorkedExamples) {
  Field f4 = Field::cyclotomic(4);
  HopfAlgebra C4 = group_cyclic(f4, 4);
  auto d1 = induced_dual_coaction(corpus::quantum_plane(f4, "z"), C4, parse_y(C4, {{"g", "0"}, {"0", "g"}}));
  EXPECT_EQ(C4.to_string(d1.D), "g^2");

  HopfAlgebra C2 = group_cyclic(kQ, 2);
  auto d2 = induced_dual_coaction(corpus::quantum_plane(kQ, "-1"), C2, parse_y(C2, {{"g", "0"}, {"0", "g"}}));
  EXPECT_EQ(d2.D, C2.one());

  HopfAlgebra S = sweedler(kQ);
  auto d3 = induced_dual_coaction(corpus::quantum_plane(kQ, "-1"), S, parse_y(S, {{"g", "x"}, {"0", "1"}}));
  EXPECT_EQ(S.to_string(d3.D), "g");
  EXPECT_TRUE(hcodet_checks(S, d3.D).pass());
}

TEST(Codeterminant, AgreesWithManinSubstitution) {
  for (const auto& c : corpus::coaction_corpus()) {
    NCPoly codet = codeterminant_element(c.A);
    for (const auto& Y : solve_coactions(c.A, c.K).coactions) {
      auto d = induced_dual_coaction(c.A, c.K, Y);
      EXPECT_EQ(substitute(c.K, codet, Y), d.D) << c.name;
    }
  }
}

TEST(CodeterminantIdentities, HoldOnTheCorpus) {
  for (const auto& c : corpus::coaction_corpus())
    for (const auto& Y : solve_coactions(c.A, c.K).coactions) {
      CheckList cl = lemma31_report(c.K, induced_dual_coaction(c.A, c.K, Y));
      EXPECT_EQ(cl.checks.size(), 7u);
      EXPECT_TRUE(cl.pass()) << c.name;
    }
}

TEST(MainTheorem, HoldsOnTheCorpus) {
  for (const auto& c : corpus::coaction_corpus())
    for (const auto& Y : solve_coactions(c.A, c.K).coactions) {
      CheckList cl = check_main_theorem(c.A, c.K, Y);
      EXPECT_TRUE(cl.pass()) << c.name;
      EXPECT_NE(cl.find("theorem01"), nullptr);
    }
}

TEST(MainTheorem, IndependentOfBasisChoice) {
  HopfAlgebra S = sweedler(kQ);
  auto A = corpus::quantum_plane(kQ, "-1");
  HMatrix Y = parse_y(S, {{"g", "x"}, {"0", "1"}});
  linalg::Matrix a = linalg::Matrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(-1), Scalar(3)}});
  EXPECT_TRUE(check_main_theorem(A, S, Y, std::nullopt, a).pass());
}

TEST(MainTheorem, SweedlerHasNontrivialSquaredAntipode) {
  HopfAlgebra S = sweedler(kQ);
  HMatrix Y = parse_y(S, {{"g", "x"}, {"0", "1"}});
  EXPECT_NE(hm_S(S, hm_S(S, Y)), Y);
  EXPECT_TRUE(check_main_theorem(corpus::quantum_plane(kQ, "-1"), S, Y).pass());
}

TEST(InnerFaithful, Examples) {
  HopfAlgebra V = group_abelian(kQ, {2, 2});
  auto P = corpus::quantum_plane(kQ, "-1");
  HMatrix Y = parse_y(V, {{"g", "0"}, {"0", "g"}});
  ASSERT_TRUE(verify_comodule_algebra(P, V, Y).pass());
  InnerFaithfulResult r = inner_faithful(V, Y);
  EXPECT_FALSE(r.inner_faithful);
  EXPECT_EQ(r.closure.dim, 2u);
  HMatrix Y2 = parse_y(V, {{"g", "0"}, {"0", "h"}});
  EXPECT_TRUE(inner_faithful(V, Y2).inner_faithful);

  HopfAlgebra S = sweedler(kQ);
  EXPECT_TRUE(inner_faithful(S, parse_y(S, {{"g", "x"}, {"0", "1"}})).inner_faithful);
}

TEST(ClosureS2, SquaredAntipodeTrivialOnClosure) {
  std::size_t cases = 0;
  for (const auto& c : corpus::coaction_corpus())
    for (const auto& Y : solve_coactions(c.A, c.K).coactions) {
      auto d = induced_dual_coaction(c.A, c.K, Y);
      auto f = inner_faithful(c.K, Y);
      if (!f.inner_faithful || d.D != c.K.one() || !d.frob.alpha.is_scalar_multiple_of_identity()) continue;
      EXPECT_TRUE(s2_identity_on(c.K, f.closure).pass) << c.name;
      EXPECT_TRUE(eta_s2_checks(c.K, d.D, f.closure).pass());
      ++cases;
    }
  EXPECT_GT(cases, 0u);
}

TEST(Divisibility, CodeterminantOrderDividesDim) {
  for (const auto& c : corpus::coaction_corpus())
    for (const auto& Y : solve_coactions(c.A, c.K).coactions) {
      auto D = induced_dual_coaction(c.A, c.K, Y).D;
      auto o = element_order(c.K, D, static_cast<long>(c.K.dim()));
      ASSERT_TRUE(o.has_value()) << c.name;
      EXPECT_EQ(static_cast<long>(c.K.dim()) % *o, 0);
    }
}
