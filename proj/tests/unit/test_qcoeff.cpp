#include <gtest/gtest.h>

#include <random>

#include "qverma/qcoeff.hpp"

using namespace qverma;

namespace {

LaurentPoly P(const std::string& s) {
  QRat x = parse_qrat(s);
  EXPECT_TRUE(x.is_poly());
  return x.num();
}

// integer binomial, computed independently of any q-code
long binom(int m, int n) {
  long r = 1;
  for (int k = 1; k <= n; ++k) r = r * (m - n + k) / k;
  return r;
}

LaurentPoly random_poly(std::mt19937& g) {
  std::uniform_int_distribution<int> c(-3, 3), e(-3, 3), len(0, 3);
  LaurentPoly p;
  int n = len(g);
  for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(e(g), c(g));
  return p;
}

QRat random_qrat(std::mt19937& g) {
  LaurentPoly d = random_poly(g);
  if (d.is_zero()) d = LaurentPoly(1);
  return QRat(random_poly(g), d);
}

}  // namespace

TEST(QInt, SmallValues) {
  EXPECT_EQ(qint(1, 1), LaurentPoly(1));
  EXPECT_EQ(qint(2, 1), P("q+q^-1"));
  // (q^3-q^-3) = (q-q^-1)(q^2+1+q^-2)
  LaurentPoly num = LaurentPoly::monomial(3) - LaurentPoly::monomial(-3);
  LaurentPoly den = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  EXPECT_EQ(qint(3, 1), num.divexact(den));
  EXPECT_EQ(qint(3, 1).str(), "q^2+1+q^-2");
  EXPECT_EQ(qint(-2, 1), -qint(2, 1));
  EXPECT_EQ(qint(0, 1), LaurentPoly());
  EXPECT_EQ(qint(2, 2), P("q^2+q^-2"));
}

TEST(QInt, FactorialAndBinomial) {
  EXPECT_EQ(qfact(0, 1), LaurentPoly(1));
  EXPECT_EQ(qfact(2, 1), P("q+q^-1"));
  EXPECT_EQ(qfact(3, 1), P("(q+q^-1)*(q^2+1+q^-2)"));
  EXPECT_EQ(qbinom(2, 1, 1), P("q+q^-1"));
  for (int n = -3; n < 6; ++n) EXPECT_EQ(qbinom(n, 0, 1), LaurentPoly(1));
  LaurentPoly oracle = (qint(4) * qint(3)).divexact(qint(2) * qint(1));
  EXPECT_EQ(qbinom(4, 2, 1), oracle);
  EXPECT_EQ(qbinom(4, 2, 1).str(), "q^4+q^2+2+q^-2+q^-4");
}

TEST(QInt, NegativeUpperIndex) {
  // [-1 choose n] = (-1)^n
  EXPECT_EQ(qbinom(-1, 1, 1), LaurentPoly(-1));
  EXPECT_EQ(qbinom(-1, 2, 1), LaurentPoly(1));
  EXPECT_EQ(qbinom(-2, 1, 1), -qint(2));
}

TEST(QInt, BinomialSymmetry) {
  for (int d = 1; d <= 2; ++d)
    for (int m = 0; m <= 8; ++m)
      for (int n = 0; n <= m; ++n) EXPECT_EQ(qbinom(m, n, d), qbinom(m, m - n, d));
}

TEST(QInt, BarInvariance) {
  for (int d = 1; d <= 3; ++d)
    for (int n = -6; n <= 6; ++n) {
      EXPECT_EQ(qint(n, d).bar(), qint(n, d));
      if (n >= 0) EXPECT_EQ(qfact(n, d).bar(), qfact(n, d));
      for (int k = 0; k <= 4; ++k) EXPECT_EQ(qbinom(n, k, d).bar(), qbinom(n, k, d));
    }
}

TEST(EvalAtOne, Values) {
  EXPECT_EQ(eval_at_one(QRat(P("q+q^-1"))), 2);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= m; ++n) EXPECT_EQ(eval_at_one(QRat(qbinom(m, n, 1))), binom(m, n));
  QRat x = parse_qrat("(q-q^-1)/(q^2-q^-2)");
  EXPECT_EQ(x, QRat(LaurentPoly(1), P("q+q^-1")));
  EXPECT_EQ(eval_at_one(x), Rational(1, 2));
  for (int d = 1; d <= 3; ++d)
    for (int n = -10; n <= 10; ++n) EXPECT_EQ(eval_at_one(QRat(qint(n, d))), n);
  EXPECT_THROW(eval_at_one(parse_qrat("1/(q-q^-1)")), PoleAtOne);
}

TEST(AForm, Membership) {
  EXPECT_EQ(aform_member(parse_qrat("1/(q+q^-1)"), {1}).verdict, AFormVerdict::Member);
  EXPECT_EQ(aform_member(parse_qrat("q^5"), {1}).verdict, AFormVerdict::Member);
  EXPECT_EQ(aform_member(parse_qrat("1/(q-2)"), {1}).verdict, AFormVerdict::NotMember);
  // q - q^-1 = q^-1 Phi_1 Phi_2 never divides a q-integer
  EXPECT_EQ(aform_member(parse_qrat("1/(q-q^-1)"), {1}).verdict, AFormVerdict::NotMember);
  QRat big = QRat(LaurentPoly(1), qfact(5, 1) * qint(7, 2));
  EXPECT_EQ(aform_member(big, {1, 2}).verdict, AFormVerdict::Member);
  // [2]_{q^2} = q^2+q^-2 needs d = 2
  EXPECT_EQ(aform_member(QRat(LaurentPoly(1), qint(2, 2)), {1}).verdict, AFormVerdict::Member);
  EXPECT_EQ(aform_member(QRat(LaurentPoly(1), qint(3, 1)), {2}).verdict, AFormVerdict::Member);
}

TEST(AForm, BoundExhaustedIsInconclusive) {
  QRat x(LaurentPoly(1), qint(60, 1));
  EXPECT_EQ(aform_member(x, {1}, 64).verdict, AFormVerdict::Member);
  EXPECT_EQ(aform_member(x, {1}, 4).verdict, AFormVerdict::Inconclusive);
  // 1/[70] is in A but Phi_140 only shows up past n = 64
  EXPECT_EQ(aform_member(QRat(LaurentPoly(1), qint(70, 1)), {1}, 64).verdict,
            AFormVerdict::Inconclusive);
}

TEST(QRat, CanonicalForm) {
  QRat a = parse_qrat("(2*q^3+2*q)/(4*q^2+4)");
  EXPECT_EQ(a, QRat(LaurentPoly::monomial(1, Rational(1, 2))));
  QRat b = parse_qrat("1/(3*q^-2+3*q)");
  EXPECT_EQ(b.den().low(), 0);
  EXPECT_EQ(b.den().low_coeff(), 1);
  EXPECT_EQ(parse_qrat(b.str()), b);
  EXPECT_EQ(parse_qrat("q^2+1+q^-2").str(), "q^2+1+q^-2");
  EXPECT_EQ(parse_qrat("-3/2*q^-1+q").str(), "q-3/2*q^-1");
}

TEST(QRat, RingAxiomsRandom) {
  std::mt19937 g(12345);
  for (int it = 0; it < 200; ++it) {
    QRat a = random_qrat(g), b = random_qrat(g), c = random_qrat(g);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a - a, QRat());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), QRat(1));
    EXPECT_EQ(a.bar().bar(), a);
  }
  for (int it = 0; it < 200; ++it) {
    LaurentPoly a = random_poly(g), b = random_poly(g), c = random_poly(g);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(QRat, ParseErrors) {
  EXPECT_THROW(parse_qrat("q^"), std::invalid_argument);
  EXPECT_THROW(parse_qrat("(q+1"), std::invalid_argument);
  EXPECT_THROW(parse_qrat("x"), std::invalid_argument);
  EXPECT_THROW(parse_qrat("1/(q-q)"), std::domain_error);
}
