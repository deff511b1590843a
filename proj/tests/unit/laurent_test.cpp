#include <gtest/gtest.h>

#include "random.hpp"
#include "skeintail/half_integer.hpp"
#include "skeintail/rational.hpp"

namespace skein {
namespace {

using testing::random_nonzero_poly;
using testing::random_poly;

LaurentPoly P(std::vector<LaurentPoly::Term> t) { return LaurentPoly::from_terms(std::move(t)); }

TEST(Laurent, FromTermsMergesAndDropsZeros) {
  const LaurentPoly p = P({{2, 3}, {-1, 1}, {2, -3}, {0, 0}, {-1, 4}});
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coefficient(-1), 5);
  EXPECT_EQ(p.coefficient(2), 0);
  EXPECT_TRUE(P({{1, 1}, {1, -1}}).is_zero());
}

TEST(Laurent, DegreesAndCoefficients) {
  const LaurentPoly p = P({{-3, 2}, {5, -7}, {1, 1}});
  EXPECT_EQ(p.min_exponent(), -3);
  EXPECT_EQ(p.max_exponent(), 5);
  EXPECT_EQ(p.trailing_coefficient(), 2);
  EXPECT_EQ(p.leading_coefficient(), -7);
  EXPECT_FALSE(p.has_only_even_exponents());
  EXPECT_TRUE(P({{-2, 1}, {4, 1}}).has_only_even_exponents());
}

TEST(Laurent, HandComputedProduct) {
  // (v^-1 + v)^2 = v^-2 + 2 + v^2
  const LaurentPoly a = P({{-1, 1}, {1, 1}});
  EXPECT_EQ(a * a, P({{-2, 1}, {0, 2}, {2, 1}}));
  EXPECT_EQ(a.pow(3), P({{-3, 1}, {-1, 3}, {1, 3}, {3, 1}}));
  EXPECT_EQ(a.pow(0), LaurentPoly::constant(1));
}

TEST(Laurent, QStringHalvesExponents) {
  EXPECT_EQ(P({{-2, -1}, {2, -1}}).to_q_string(), "-q^-1 - q");
  EXPECT_EQ(LaurentPoly::monomial(3, -1).to_q_string(), "-q^(3/2)");
  EXPECT_EQ(LaurentPoly{}.to_q_string(), "0");
}

TEST(Laurent, RingAxiomsOnRandomElements) {
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly{});
    EXPECT_EQ(a * LaurentPoly::constant(1), a);
    EXPECT_EQ((a * b).reflected(), a.reflected() * b.reflected());
  }
}

TEST(Laurent, ShiftAndScale) {
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly a = random_poly();
    EXPECT_EQ(a.shifted(3), a * LaurentPoly::monomial(3));
    EXPECT_EQ(a.scaled_shift(-2, 5), a * LaurentPoly::monomial(-2, 5));
    EXPECT_EQ(a.shifted(4).shifted(-4), a);
  }
}

TEST(Laurent, ExactQuotientRecoversFactor) {
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(), b = random_nonzero_poly();
    const auto q = exact_quotient(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(exact_quotient(P({{0, 1}, {2, 1}}), P({{0, 1}, {1, 1}})).has_value());
  EXPECT_THROW(exact_quotient(LaurentPoly::constant(1), LaurentPoly{}), Error);
}

TEST(Laurent, GcdDividesBoth) {
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly common = random_nonzero_poly();
    const LaurentPoly a = random_nonzero_poly() * common, b = random_nonzero_poly() * common;
    const LaurentPoly g = gcd(a, b);
    EXPECT_TRUE(exact_quotient(a, g).has_value());
    EXPECT_TRUE(exact_quotient(b, g).has_value());
    EXPECT_TRUE(exact_quotient(g, common).has_value());
  }
}

TEST(Rational, CanonicalFormIsUnique) {
  const LaurentPoly a = P({{0, 1}, {2, 1}});
  const LaurentPoly b = P({{-1, 2}, {3, -1}});
  const LaurentPoly u = P({{1, 3}, {4, 1}});
  EXPECT_EQ(RationalFn(a * u, b * u), RationalFn(a, b));
  EXPECT_EQ(RationalFn(-a, -b), RationalFn(a, b));
  EXPECT_EQ(RationalFn(a.shifted(5), b.shifted(2)), RationalFn(a.shifted(3), b));
  EXPECT_TRUE(RationalFn(a * b, b).is_laurent());
  EXPECT_THROW(RationalFn(a, LaurentPoly{}), Error);
}

TEST(Rational, FieldAxiomsOnRandomElements) {
  for (int trial = 0; trial < 60; ++trial) {
    const RationalFn x(random_poly(), random_nonzero_poly());
    const RationalFn y(random_poly(), random_nonzero_poly());
    const RationalFn z(random_nonzero_poly(), random_nonzero_poly());
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(z * z.inverse(), RationalFn(LaurentPoly::constant(1)));
    EXPECT_EQ((x / z) * z, x);
    EXPECT_EQ(x - x, RationalFn{});
  }
  EXPECT_THROW(RationalFn{}.inverse(), Error);
}

TEST(Rational, QuantumIntegerQuotient) {
  // (v^4 - v^-4)/(v^2 - v^-2) = v^2 + v^-2
  const RationalFn r(P({{4, 1}, {-4, -1}}), P({{2, 1}, {-2, -1}}));
  ASSERT_TRUE(r.is_laurent());
  EXPECT_EQ(*r.to_laurent(), P({{-2, 1}, {2, 1}}));
}

TEST(HalfIntegerTest, ArithmeticAndPrinting) {
  const HalfInteger a = HalfInteger::from_twice(-9);
  EXPECT_EQ(a.to_string(), "-9/2");
  EXPECT_EQ((a + HalfInteger::from_twice(3)).to_string(), "-3");
  EXPECT_FALSE(a.is_integer());
  EXPECT_LT(a, HalfInteger::from_integer(-4));
  EXPECT_EQ(-a, HalfInteger::from_twice(9));
}

}  // namespace
}  // namespace skein
