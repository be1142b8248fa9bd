#include <gtest/gtest.h>

#include <random>

#include "nakayama/scalar.hpp"

using namespace nakayama;

namespace {

// Phi_n over Z by dividing x^n - 1 by Phi_d for proper divisors d.
std::vector<long> phi_oracle(int n) {
  std::vector<long> num(static_cast<std::size_t>(n + 1), 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> den = phi_oracle(d);
    // exact division by a monic polynomial
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      long c = num[k + den.size() - 1];
      q[k] = c;
      for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    num = q;
  }
  return num;
}

Scalar random_scalar(std::mt19937& rng, const Field& f) {
  std::uniform_int_distribution<long> c(-5, 5), den(1, 4), e(0, 3);
  Scalar out = Scalar::zero(f);
  for (int k = 0; k < 3; ++k) {
    Scalar term = Scalar::rational(f, mpq_class(c(rng), den(rng)));
    if (f.has_z()) term *= Scalar::z(f).pow(e(rng));
    if (f.has_t()) term *= Scalar::t(f).pow(e(rng) - 1);
    out += term;
  }
  return out;
}

std::vector<Field> fields() {
  return {Field::rationals(), Field::cyclotomic(3), Field::cyclotomic(4), Field::cyclotomic(8),
          Field::rational_functions(), Field::rational_functions_cyclotomic(4)};
}

}  // namespace

TEST(CyclotomicPolynomial, MatchesDivisionOracle) {
  for (int n = 1; n <= 30; ++n) {
    auto want = phi_oracle(n);
    const auto& got = cyclotomic_polynomial(n);
    ASSERT_EQ(got.size(), want.size()) << "n=" << n;
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(got[i], mpq_class(want[i])) << "n=" << n << " i=" << i;
  }
}

TEST(Cyclotomic, RootOfUnityRelations) {
  for (int n : {2, 3, 4, 5, 6, 8, 12}) {
    Field f = Field::cyclotomic(n);
    Scalar z = Scalar::z(f);
    EXPECT_TRUE(z.pow(n).is_one()) << n;
    for (int k = 1; k < n; ++k) EXPECT_FALSE(z.pow(k).is_one()) << n << " " << k;
    Scalar sum = Scalar::zero(f);
    for (int k = 0; k < n; ++k) sum += z.pow(k);
    EXPECT_TRUE(sum.is_zero()) << n;
    EXPECT_EQ(multiplicative_order(z), n);
    EXPECT_EQ(z.inverse(), z.pow(n - 1));
  }
}

TEST(Cyclotomic, SquareOfZeta4IsMinusOne) {
  Field f = Field::cyclotomic(4);
  EXPECT_EQ(Scalar::z(f) * Scalar::z(f), Scalar::integer(f, -1));
}

TEST(ScalarProperties, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(7);
  for (const Field& f : fields()) {
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one()) << f.name() << " " << a;
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(ScalarProperties, PrintParseRoundTrip) {
  std::mt19937 rng(11);
  for (const Field& f : fields())
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(rng, f);
      EXPECT_EQ(Scalar::parse(a.to_string(), f), a) << f.name() << ": " << a;
    }
}

TEST(ScalarProperties, CanonicalFormIsUnique) {
  Field f = Field::rational_functions();
  Scalar t = Scalar::t(f);
  Scalar a = (t * t - Scalar(1)) / (t - Scalar(1));
  EXPECT_EQ(a, t + Scalar(1));
  EXPECT_EQ(a.to_string(), (t + Scalar(1)).to_string());
}

TEST(ScalarErrors, ZUnderRationals) {
  try {
    Scalar::parse("z", Field::rationals());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("z requires cyclotomic field"), std::string::npos);
  }
}

TEST(ScalarErrors, TUnderCyclotomic) { EXPECT_THROW(Scalar::parse("t + 1", Field::cyclotomic(3)), ParseError); }

TEST(ScalarErrors, DivisionByZero) {
  Field f = Field::cyclotomic(6);
  EXPECT_THROW(Scalar::zero(f).inverse(), DivisionByZero);
}

TEST(ScalarErrors, MixingFieldsOnlyThroughQ) {
  Scalar z3 = Scalar::z(Field::cyclotomic(3));
  Scalar z4 = Scalar::z(Field::cyclotomic(4));
  EXPECT_THROW(z3 + z4, FieldMismatch);
  EXPECT_EQ(z3 + Scalar(1) - Scalar(1), z3);
}

TEST(ScalarOrder, NotARootOfUnity) {
  Field f = Field::rational_functions();
  EXPECT_FALSE(multiplicative_order(Scalar::t(f)).has_value());
  EXPECT_FALSE(multiplicative_order(Scalar(2)).has_value());
  EXPECT_EQ(multiplicative_order(Scalar(-1)), 2);
}
