#include <gtest/gtest.h>

#include "qverma/beckorder.hpp"
#include "qverma/uq.hpp"

using namespace qverma;

namespace {

Word W(std::initializer_list<Letter> ls) {
  Word w;
  for (Letter l : ls) w.push_back(letter_char(l));
  return w;
}

QRat qint_r(int n) { return (QRat::q_pow(n) - QRat::q_pow(-n)) / (QRat::q_pow(1) - QRat::q_pow(-1)); }

struct A1 {
  CartanData cd = build_cartan("A1~");
  Uq uq{cd};
  BeckOrdering ord = find_pi(cd, 12);
  RootVectors rv{uq, ord};
  A1() { uq.ensure_completed(8); }
};

}  // namespace

TEST(Omega, RespectsRelations) {
  for (const char* tag : {"A1~", "A2~"}) {
    CartanData cd = build_cartan(tag);
    Uq uq(cd);
    uq.ensure_completed(4);
    for (auto& [name, x] : uq.relations()) {
      if (x.max_height() > 4) continue;
      EXPECT_TRUE(uq.reduce(omega(x)).is_zero()) << tag << " " << name;
    }
  }
}

TEST(Omega, Involution) {
  Element x = parse_element("(q^2+1/3)*E0.K1.F1 - q^-1*D+.E1");
  EXPECT_EQ(omega(omega(x)), x);
  EXPECT_EQ(omega(Element::letter(E(1))), Element::letter(F(1)));
  // q goes to q^-1
  EXPECT_EQ(omega(Element::word(W({E(0), E(1)}), QRat::q_pow(2))),
            Element::word(W({F(1), F(0)}), QRat::q_pow(-2)));
}

TEST(Braid, InverseOnLetters) {
  CartanData cd = build_cartan("A2~");
  Uq uq(cd);
  uq.ensure_completed(6);
  for (int i = 0; i <= cd.N; ++i)
    for (int j = 0; j <= cd.N; ++j)
      for (Letter l : {E(j), F(j), Kp(j), Km(j)}) {
        Element x = Element::letter(l);
        EXPECT_EQ(uq.reduce(uq.braid_T_inv(i, uq.braid_T(i, x))), x);
        EXPECT_EQ(uq.reduce(uq.braid_T(i, uq.braid_T_inv(i, x))), x);
      }
}

TEST(Braid, ReflectsWeights) {
  CartanData cd = build_cartan("A1~");
  Uq uq(cd);
  uq.ensure_completed(6);
  Element t = uq.braid_T(1, Element::letter(E(0)));
  EXPECT_EQ(t.weight(cd), simple_reflection(1, cd.simple(0), cd));
  EXPECT_EQ(uq.braid_T(1, Element::letter(E(1))).weight(cd), -cd.simple(1));
}

TEST(RootVectors, SimpleAndWeights) {
  A1 a;
  // beta_0 and beta_1 are simple roots, their vectors are generators
  EXPECT_EQ(a.rv.real(0).element, Element::letter(E(a.ord.pi.at(0))));
  EXPECT_EQ(a.rv.real(1).element, Element::letter(E(a.ord.pi.at(1))));
  for (int k = -4; k <= 4; ++k) EXPECT_EQ(a.rv.real(k).element.weight(a.cd), a.ord.beta(k));
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(a.rv.imaginary(1, k).element.weight(a.cd), a.cd.delta(k));
  RootVector n = a.rv.negative(a.rv.real(-1));
  EXPECT_EQ(n.element.weight(a.cd), -a.ord.beta(-1));
}

TEST(RootVectors, ImaginaryCommute) {
  A1 a;
  const Element& x = a.rv.imaginary(1, 1).element;
  const Element& y = a.rv.imaginary(1, 2).element;
  EXPECT_EQ(a.uq.zero_test(a.uq.mul(x, y) - a.uq.mul(y, x)), ZeroVerdict::Zero);
}

TEST(RootVectors, PlainCommutatorDoesNotCommute) {
  A1 a;
  a.rv.q_commutator = false;
  const Element& x = a.rv.imaginary(1, 1).element;
  const Element& y = a.rv.imaginary(1, 2).element;
  EXPECT_EQ(a.uq.zero_test(a.uq.mul(x, y) - a.uq.mul(y, x)), ZeroVerdict::NonZero);
}

TEST(RootVectors, ImaginaryArePrimitive) {
  // [E_{2 delta}, E_{-a1+delta}] is a multiple of E_{-a1+3 delta}
  A1 a;
  const Element& e2 = a.rv.imaginary(1, 2).element;
  const Element& b1 = a.rv.of_root(a.cd.delta(1) - a.cd.simple(1)).element;
  const Element& b3 = a.rv.of_root(a.cd.delta(3) - a.cd.simple(1)).element;
  Element c = a.uq.mul(e2, b1) - a.uq.mul(b1, e2);
  ASSERT_FALSE(c.is_zero());
  const Word& w = b3.leading_word();
  QRat ratio = c.coeff(w) / b3.coeff(w);
  EXPECT_EQ(a.uq.zero_test(c - b3 * ratio), ZeroVerdict::Zero);
}

TEST(Lusztig, ProductIdentity) {
  CartanData cd = build_cartan("C2~");
  for (int i = 0; i <= cd.N; ++i)
    for (int n = 1; n <= 3; ++n)
      for (int s = -3; s <= 3; ++s) EXPECT_TRUE(verify_lusztig_identity(cd, i, s, n));
}

TEST(Lusztig, UnweightedFormFails) {
  CartanData cd = build_cartan("A1~");
  EXPECT_FALSE(lusztig_identity_unweighted(cd, 1, 1, 1));
  EXPECT_TRUE(verify_lusztig_identity(cd, 1, 1, 1));
}

TEST(Lusztig, EigenvalueScalars) {
  CartanData cd = build_cartan("A1~");
  // [K;0/1] on eigenvalue q^m is [m]
  for (int m = -3; m <= 3; ++m) EXPECT_EQ(lusztig_K(cd, 1, 0, 1, m), qint_r(m));
  // [K;0/2] on q^2: [2][1]/[2]! = 1
  EXPECT_EQ(lusztig_K(cd, 1, 0, 2, 2), QRat(1));
  EXPECT_EQ(lusztig_K(cd, 1, 0, 2, 1), QRat(0));
}

TEST(Lusztig, CommutationSuite) {
  CartanData cd = build_cartan("A1~");
  Uq uq(cd);
  CheckReport r = verify_commutation_suite(uq, 3);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.checks, 0);
}
