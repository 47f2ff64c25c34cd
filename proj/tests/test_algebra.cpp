#include <gtest/gtest.h>

#include <random>

#include "circe/algebra.hpp"
#include "circe/series.hpp"

using namespace circe;

namespace {

DimPolynomial dp(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return DimPolynomial(std::move(v));
}

struct Gen {
  std::mt19937_64 rng{12345};
  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  BigRational rational() {
    long den = small(1, 9);
    return make_rational(small(-20, 20), den);
  }
  DimPolynomial dim_poly() {
    std::vector<BigInt> c(small(0, 5));
    for (auto& x : c) x = small(-50, 50);
    return DimPolynomial(std::move(c));
  }
  MPolynomial m_poly() {
    std::vector<BigRational> c(small(0, 4));
    for (auto& x : c) x = rational();
    return MPolynomial(std::move(c));
  }
  RationalSeries series(int cap) {
    std::vector<BigRational> t(cap + 1);
    for (auto& x : t) x = rational();
    return RationalSeries(cap, std::move(t));
  }
  MSeries m_series(int cap) {
    std::vector<MPolynomial> t(cap + 1);
    for (auto& x : t) x = m_poly();
    return MSeries(cap, std::move(t));
  }
};

bool reduced(const BigRational& q) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return q.get_den() > 0 && g == 1;
}

}  // namespace

TEST(PolyAdd, Examples) {
  const auto j2 = dp({8, 10, 4, 2});
  EXPECT_EQ(j2 + DimPolynomial(), j2);
  EXPECT_TRUE((dp({0, 1}) + dp({0, -1})).is_zero());
  EXPECT_EQ((dp({0, 1}) + dp({0, -1})).degree(), -1);
  EXPECT_EQ(dp({48, 74, 49, 16, 5}) + dp({0, 0, 0, 0, 1}), dp({48, 74, 49, 16, 6}));
}

TEST(PolyEval, CancellingValuesAtMinusOne) {
  const BigRational minus_one(-1);
  EXPECT_EQ(dp({8, 10, 4, 2}).evaluate(minus_one), 0);
  EXPECT_EQ(dp({48, 74, 49, 16, 5}).evaluate(minus_one), 12);
  EXPECT_EQ(dp({384, 688, 528, 242, 64, 14}).evaluate(minus_one), 32);
}

TEST(PolyFormat, HighestPowerFirst) {
  EXPECT_EQ(dp({8, 10, 4, 2}).to_string("d"), "2d^3+4d^2+10d+8");
  EXPECT_EQ(dp({1}).to_string("d"), "1");
  EXPECT_EQ(DimPolynomial().to_string("d"), "0");
  EXPECT_EQ(dp({0, -1, 0, 1}).to_string("d"), "d^3-d");
  EXPECT_EQ(MPolynomial({BigRational(0), make_rational(3, 2)}).to_string("M"), "(3/2)M");
}

TEST(SeriesMul, GeometricIdentity) {
  // (1 - u + u^2)(1 + u) = 1 + u^3, so nothing survives below the cap.
  RationalSeries a(2, {BigRational(1), BigRational(-1), BigRational(1)});
  RationalSeries b(2, {BigRational(1), BigRational(1)});
  EXPECT_EQ(a * b, RationalSeries::one(2));
  // 1/(1+u) times (1 + u) is 1 through the cap.
  RationalSeries inverse(3, {BigRational(1), BigRational(-1), BigRational(1), BigRational(-1)});
  EXPECT_EQ(inverse * RationalSeries(3, {BigRational(1), BigRational(1)}), RationalSeries::one(3));
}

TEST(SeriesMul, IdentityAndCap) {
  Gen g;
  auto s = g.series(4);
  EXPECT_EQ(s * RationalSeries::one(4), s);
  auto u = RationalSeries::monomial(2, 1, BigRational(1));
  EXPECT_EQ(u * u, RationalSeries::monomial(2, 2, BigRational(1)));
  // Mixed caps keep the smaller one.
  EXPECT_EQ((s * u).cap(), 2);
  EXPECT_EQ((s + u).cap(), 2);
}

TEST(SeriesScale, Examples) {
  Gen g;
  EXPECT_TRUE(g.series(3).scaled(BigRational(0)).is_zero());
  RationalSeries s(2, {BigRational(0), BigRational(1), BigRational(1)});
  EXPECT_EQ(s.scaled(make_rational(-1, 2)),
            RationalSeries(2, {BigRational(0), make_rational(-1, 2), make_rational(-1, 2)}));
  // 4M(M+1)u^2 / 4 = M(M+1)u^2
  MSeries m = MSeries::monomial(4, 2, MPolynomial({BigRational(0), BigRational(4), BigRational(4)}));
  EXPECT_EQ(m.scaled(make_rational(1, 4)),
            MSeries::monomial(4, 2, MPolynomial({BigRational(0), BigRational(1), BigRational(1)})));
}

TEST(SeriesFormat, ZerosThroughCap) {
  EXPECT_EQ(RationalSeries::monomial(4, 1, BigRational(1)).to_string(), "u + 0u^2 + 0u^3 + 0u^4");
  EXPECT_EQ(RationalSeries(2, {BigRational(0), make_rational(-1, 2), BigRational(3)}).to_string(),
            "-(1/2)u + 3u^2");
  EXPECT_EQ(RationalSeries(3).to_string(), "0");
  MSeries m = MSeries::monomial(2, 1, MPolynomial({BigRational(0), BigRational(2)}));
  EXPECT_EQ(m.to_string(), "(2M)u + 0u^2");
}

TEST(SeriesCap, NoCoefficientBeyondCap) {
  RationalSeries s(3);
  EXPECT_THROW(s.coefficient(4), std::out_of_range);
  EXPECT_THROW(s.add_term(4, BigRational(1)), std::out_of_range);
  EXPECT_THROW(RationalSeries(1, {BigRational(1), BigRational(1), BigRational(1)}), std::invalid_argument);
  EXPECT_THROW(s.truncated(5), std::invalid_argument);
  EXPECT_EQ(s.truncated(1).cap(), 1);
}

TEST(Rational, ParseAndReduce) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
  EXPECT_EQ(parse_rational("10/-4"), make_rational(-5, 2));
  EXPECT_EQ(parse_integer("-99072"), BigInt(-99072));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_integer("1.5"), std::invalid_argument);
  EXPECT_EQ(pow(make_rational(-1, 2), 3), make_rational(-1, 8));
}

TEST(Rational, ReducedAfterEveryOperation) {
  Gen g;
  for (int trial = 0; trial < 500; ++trial) {
    BigRational a = g.rational(), b = g.rational();
    EXPECT_TRUE(reduced(a + b));
    EXPECT_TRUE(reduced(a - b));
    EXPECT_TRUE(reduced(a * b));
    if (b != 0) {
      EXPECT_TRUE(reduced(BigRational(a / b)));
    }
  }
}

TEST(RingAxioms, DimPolynomial) {
  Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    auto a = g.dim_poly(), b = g.dim_poly(), c = g.dim_poly();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    BigRational x = g.rational();
    EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
    auto s = a + b;
    EXPECT_TRUE(s.is_zero() || s.leading_coefficient() != 0);
  }
}

TEST(RingAxioms, MPolynomial) {
  Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    auto a = g.m_poly(), b = g.m_poly(), c = g.m_poly();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    BigRational x = g.rational();
    EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
  }
}

TEST(RingAxioms, Series) {
  Gen g;
  for (int trial = 0; trial < 100; ++trial) {
    const int cap = static_cast<int>(g.small(0, 5));
    auto a = g.series(cap), b = g.series(cap), c = g.series(cap);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    auto x = g.m_series(cap), y = g.m_series(cap), z = g.m_series(cap);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
  }
}
