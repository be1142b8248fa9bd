#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "corpus.hpp"
#include "nakayama/hopf.hpp"
#include "nakayama/hopf_io.hpp"

using namespace nakayama;

namespace {

const Field kQ = Field::rationals();

std::vector<std::string> grouplike_strings(const HopfAlgebra& K) {
  std::vector<std::string> out;
  for (const auto& g : grouplikes(K).grouplikes) out.push_back(K.to_string(g.element));
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nakayama_test_" + name);
}

}  // namespace

TEST(HopfVerify, AllBuiltinsPass) {
  for (const auto& [name, K] : corpus::builtins()) {
    CheckList cl = hopf_verify(K);
    EXPECT_TRUE(cl.pass()) << name;
    EXPECT_EQ(cl.checks.size(), 7u) << name;
  }
}

TEST(HopfVerify, SweedlerRelations) {
  HopfAlgebra K = sweedler(kQ);
  HopfElement g = K.parse_element("g"), x = K.parse_element("x");
  EXPECT_EQ(K.mul(g, g), K.one());
  EXPECT_TRUE(K.is_zero(K.mul(x, x)));
  EXPECT_EQ(K.mul(x, g), K.scale(K.mul(g, x), Scalar(-1)));
  EXPECT_EQ(K.delta(x), K.tensor(x, K.one()) + K.tensor(g, x));
  EXPECT_EQ(K.S(x), K.scale(K.mul(g, x), Scalar(-1)));
}

TEST(HopfVerify, TaftRelations) {
  Field f = Field::cyclotomic(3);
  HopfAlgebra K = taft(f, 3, Scalar::z(f));
  HopfElement g = K.parse_element("g"), x = K.parse_element("x");
  EXPECT_EQ(K.mul(x, g), K.scale(K.mul(g, x), Scalar::z(f)));
  EXPECT_TRUE(K.is_zero(K.pow(x, 3)));
  EXPECT_EQ(K.pow(g, 3), K.one());
  EXPECT_THROW(taft(f, 3, Scalar(1)), InvalidArgument);
}

TEST(HopfVerify, BrokenAntipodeIsReported) {
  HopfAlgebra K = sweedler(kQ);
  Json j = hopf_to_json(K);
  j["antipode"][2] = Json::array({"0", "0", "1", "0"});  // S(x) = x
  HopfAlgebra bad = hopf_from_json(j, kQ);
  CheckList cl = hopf_verify(bad);
  EXPECT_FALSE(cl.pass());
  const Check* a = cl.find("hopf.antipode");
  ASSERT_NE(a, nullptr);
  EXPECT_FALSE(a->pass);
  EXPECT_TRUE(cl.find("hopf.associativity")->pass);
}

TEST(Grouplikes, Goldens) {
  Field f4 = Field::cyclotomic(4);
  HopfAlgebra C4 = group_cyclic(f4, 4);
  GrouplikeResult g = grouplikes(C4);
  ASSERT_EQ(g.grouplikes.size(), 4u);
  std::vector<long> orders;
  for (const auto& x : g.grouplikes) orders.push_back(*x.order);
  EXPECT_EQ(orders, (std::vector<long>{1, 4, 2, 4}));
  EXPECT_TRUE(g.complete);

  EXPECT_EQ(grouplike_strings(sweedler(kQ)), (std::vector<std::string>{"1", "g"}));
  Field f3 = Field::cyclotomic(3);
  EXPECT_EQ(grouplike_strings(taft(f3, 3, Scalar::z(f3))), (std::vector<std::string>{"1", "g", "g^2"}));
}

TEST(Grouplikes, DualGroupDependsOnField) {
  // Characters of C3 need cube roots of unity.
  GrouplikeResult over_q = grouplikes(dual_group(kQ, 3));
  EXPECT_EQ(over_q.grouplikes.size(), 1u);
  Field f3 = Field::cyclotomic(3);
  HopfAlgebra K = dual_group(f3, 3);
  GrouplikeResult over_z = grouplikes(K);
  EXPECT_EQ(over_z.grouplikes.size(), 3u);
  for (const auto& g : over_z.grouplikes) EXPECT_TRUE(K.is_grouplike(g.element));
}

TEST(Grouplikes, AllFoundAreGrouplikeAndOrdersDivideDim) {
  for (const auto& [name, K] : corpus::builtins()) {
    for (const auto& g : grouplikes(K).grouplikes) {
      EXPECT_TRUE(K.is_grouplike(g.element)) << name;
      ASSERT_TRUE(g.order.has_value()) << name;
      EXPECT_EQ(static_cast<long>(K.dim()) % *g.order, 0) << name;
      EXPECT_EQ(K.pow(g.element, *g.order), K.one());
    }
  }
}

TEST(SquaredAntipode, OrdersDivideTwiceDim) {
  for (const auto& [name, K] : corpus::builtins()) {
    SquaredAntipode s = s_squared(K);
    ASSERT_TRUE(s.order.has_value()) << name;
    EXPECT_EQ(2 * static_cast<long>(K.dim()) % *s.order, 0) << name;
  }
  EXPECT_EQ(s_squared(sweedler(kQ)).order, 2);
  Field f3 = Field::cyclotomic(3);
  EXPECT_EQ(s_squared(taft(f3, 3, Scalar::z(f3))).order, 3);
  EXPECT_EQ(s_squared(group_cyclic(kQ, 5)).order, 1);
}

TEST(SquaredAntipode, IsConjugationByGrouplikeForSweedler) {
  // S^2(a) = g a g^-1 in Sweedler's algebra.
  HopfAlgebra K = sweedler(kQ);
  HopfElement g = K.parse_element("g");
  for (std::size_t j = 0; j < K.dim(); ++j) {
    HopfElement b = K.basis(j);
    EXPECT_EQ(K.S(K.S(b)), K.mul(K.mul(g, b), K.inverse(g)));
  }
}

TEST(Conjugation, AutomorphismChecksPass) {
  HopfAlgebra K = sweedler(kQ);
  ConjugationAutomorphism c = conj_auto(K, K.parse_element("g"));
  EXPECT_TRUE(c.checks.pass());
  EXPECT_EQ(K.apply(c.map, K.parse_element("x")), K.parse_element("-x"));
  EXPECT_THROW(conj_auto(K, K.parse_element("x")), InvalidArgument);
}

TEST(Closure, Dimensions) {
  HopfAlgebra V = group_abelian(kQ, {2, 2});
  EXPECT_EQ(subalgebra_closure(V, {V.parse_element("g")}).dim, 2u);
  EXPECT_EQ(subalgebra_closure(V, {V.parse_element("g"), V.parse_element("h")}).dim, 4u);
  HopfAlgebra S = sweedler(kQ);
  // x alone: S(x) = -gx and all products vanish, so g is never reached
  EXPECT_EQ(subalgebra_closure(S, {S.parse_element("x")}).dim, 3u);
  // entries of a comatrix span a subcoalgebra; the closure is then all of S
  EXPECT_EQ(subalgebra_closure(S, {S.parse_element("g"), S.parse_element("x"), S.one()}).dim, 4u);
}

TEST(Elements, ParseAndPrint) {
  Field f4 = Field::cyclotomic(4);
  HopfAlgebra K = taft(f4, 4, Scalar::z(f4));
  HopfElement a = K.parse_element("z*g + x - 1/2");
  EXPECT_EQ(K.parse_element(K.to_string(a)), a);
  EXPECT_EQ(K.mul(K.parse_element("g^-1"), K.parse_element("g")), K.one());
  EXPECT_THROW(K.parse_element("q"), ParseError);
}

TEST(HopfIO, RoundTripIsExact) {
  for (const auto& [name, K] : corpus::builtins()) {
    auto path = temp_file("roundtrip.json");
    save_hopf(K, path);
    HopfAlgebra back = load_hopf(path, K.field());
    EXPECT_TRUE(back == K) << name;
    EXPECT_EQ(back.labels(), K.labels());
    std::filesystem::remove(path);
  }
}

TEST(HopfIO, MalformedFilesRejected) {
  Json j = hopf_to_json(sweedler(kQ));
  Json short_mult = j;
  short_mult["mult"][0][0] = Json::array({"1", "0"});
  EXPECT_THROW(hopf_from_json(short_mult, kQ), InvalidArgument);
  Json no_counit = j;
  no_counit.erase("counit");
  EXPECT_THROW(hopf_from_json(no_counit, kQ), InvalidArgument);
  EXPECT_THROW(hopf_from_json(j, Field::cyclotomic(4)), InvalidArgument);
  auto path = temp_file("garbage.json");
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(load_hopf(path, kQ), InvalidArgument);
  std::filesystem::remove(path);
}

TEST(HopfConstruction, MalformedTablesRejected) {
  EXPECT_THROW(HopfAlgebra(kQ, {"1"}, {}, {Scalar(1)}, {{}}, {Scalar(1)}, {{Scalar(1)}}), InvalidArgument);
}
