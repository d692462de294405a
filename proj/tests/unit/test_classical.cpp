#include <gtest/gtest.h>

#include "qverma/beckorder.hpp"
#include "qverma/classical.hpp"

using namespace qverma;

namespace {

LoopElement single(LoopGen x) { return LoopElement{{x, Rational(1)}}; }

LoopElement add(LoopElement a, const LoopElement& b, const Rational& s = 1) {
  for (auto& [k, v] : b) {
    a[k] += s * v;
    if (a[k] == 0) a.erase(k);
  }
  return a;
}

std::vector<LoopGen> sample(const LoopAlgebra& L) {
  std::vector<LoopGen> out;
  for (int b = 0; b < L.finite().dim(); ++b)
    for (int t : {-1, 0, 2}) out.push_back({b, t});
  out.push_back(L.c());
  out.push_back(L.d());
  return out;
}

}  // namespace

TEST(FiniteLie, Sl2) {
  CartanData cd = build_cartan("A1~");
  FiniteLie g(cd);
  ASSERT_EQ(g.dim(), 3);
  auto ef = g.bracket(g.e(1), g.f(1));
  EXPECT_EQ(ef, (std::map<int, Rational>{{g.h(1), Rational(1)}}));
  EXPECT_EQ(g.bracket(g.h(1), g.e(1)), (std::map<int, Rational>{{g.e(1), Rational(2)}}));
  EXPECT_EQ(g.bracket(g.h(1), g.f(1)), (std::map<int, Rational>{{g.f(1), Rational(-2)}}));
  EXPECT_EQ(g.form(g.e_theta(), g.f_theta()), Rational(1));
}

TEST(FiniteLie, InvariantFormAndIntegrality) {
  for (const char* tag : {"A2~", "A3~", "C2~"}) {
    CartanData cd = build_cartan(tag);
    FiniteLie g(cd);
    EXPECT_EQ(g.dim(), 2 * g.positive_roots() + cd.N) << tag;
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        for (auto& [k, v] : g.bracket(a, b)) EXPECT_EQ(v.get_den(), 1) << tag;
        for (int c = 0; c < g.dim(); ++c) {
          // ([a,b]|c) = (a|[b,c])
          Rational l = 0, r = 0;
          for (auto& [k, v] : g.bracket(a, b)) l += v * g.form(k, c);
          for (auto& [k, v] : g.bracket(b, c)) r += v * g.form(a, k);
          EXPECT_EQ(l, r) << tag;
        }
      }
  }
}

TEST(LoopAlgebra, JacobiAndCentre) {
  for (const char* tag : {"A1~", "C2~"}) {
    CartanData cd = build_cartan(tag);
    LoopAlgebra L(cd);
    auto s = sample(L);
    for (const LoopGen& x : s) {
      EXPECT_TRUE(L.bracket(L.c(), x).empty());
      if (x.b < L.finite().dim()) {
        LoopElement dx = L.bracket(L.d(), x);
        LoopElement want = x.t == 0 ? LoopElement{} : LoopElement{{x, Rational(x.t)}};
        EXPECT_EQ(dx, want);
      }
    }
    for (std::size_t i = 0; i < s.size(); i += 3)
      for (std::size_t j = 1; j < s.size(); j += 2)
        for (std::size_t k = 2; k < s.size(); k += 5) {
          LoopElement x = single(s[i]), y = single(s[j]), z = single(s[k]);
          LoopElement sum = loop_bracket(L, x, loop_bracket(L, y, z));
          sum = add(sum, loop_bracket(L, y, loop_bracket(L, z, x)));
          sum = add(sum, loop_bracket(L, z, loop_bracket(L, x, y)));
          EXPECT_TRUE(sum.empty()) << tag << " " << L.str(s[i]) << " " << L.str(s[j]) << " " << L.str(s[k]);
        }
  }
}

TEST(LoopAlgebra, AffineChevalley) {
  CartanData cd = build_cartan("A2~");
  LoopAlgebra L(cd);
  for (int i = 0; i <= cd.N; ++i) {
    EXPECT_EQ(L.weight(L.e(i)), cd.simple(i));
    EXPECT_EQ(L.weight(L.f(i)), -cd.simple(i));
    for (int j = 0; j <= cd.N; ++j) {
      LoopElement b = L.bracket(L.e(i), L.f(j));
      if (i != j) EXPECT_TRUE(b.empty());
    }
  }
  // [e_0, f_0] = c - h_theta
  LoopElement h0 = L.bracket(L.e(0), L.f(0));
  EXPECT_EQ(h0.at(L.c()), Rational(1));
}

TEST(ClassicalLimit, Generators) {
  CartanData cd = build_cartan("A1~");
  LoopAlgebra L(cd);
  EXPECT_EQ(classical_limit_element(L, Element::letter(E(1))),
            (LoopPoly{{{L.e(1)}, Rational(1)}}));
  Element x = Element::letter(F(0)) * (QRat::q_pow(1) + QRat::q_pow(-1));
  EXPECT_EQ(classical_limit_element(L, x), (LoopPoly{{{L.f(0)}, Rational(2)}}));
  // K goes to 1
  Element k = Element::letter(Kp(1)) - Element::letter(Km(1));
  EXPECT_TRUE(classical_limit_element(L, k).empty());
  Element bad = Element::letter(E(1)) * (QRat(1) / (QRat::q_pow(1) - QRat(1)));
  EXPECT_ANY_THROW(classical_limit_element(L, bad));
}

TEST(ClassicalLimit, RootVectorWeights) {
  CartanData cd = build_cartan("A1~");
  Uq uq(cd);
  BeckOrdering ord = find_pi(cd, 10);
  RootVectors rv(uq, ord);
  LoopAlgebra L(cd);
  for (int k = -3; k <= 3; ++k) {
    LoopPoly p = classical_limit_element(L, rv.real(k).element);
    ASSERT_FALSE(p.empty()) << k;
    EXPECT_EQ(loop_weight(L, p), ord.beta(k));
    // real root vectors specialize to a single loop generator
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(p.begin()->first.size(), 1u);
  }
  LoopPoly im = classical_limit_element(L, rv.imaginary(1, 2).element);
  EXPECT_EQ(loop_weight(L, im), cd.delta(2));
}

TEST(ClassicalVerma, Counts) {
  CartanData cd = build_cartan("A1~");
  LoopAlgebra L(cd);
  Weight lam{{0, 2}, 0};
  ClassicalVerma m(L, lam, {}, 6);
  long long p[] = {1, 1, 2, 3, 5, 7};
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(m.dim(cd.delta(k)).count, p[k]) << k;
  ClassicalVerma std1(L, lam, {1}, 4);
  EXPECT_EQ(std1.dim(cd.delta(1)).count, 2);
  EXPECT_EQ(std1.dim(cd.delta(2)).count, 6);
  EXPECT_EQ(m.dim(cd.simple(1)).kind, MultResult::Kind::Infinite);
  EXPECT_EQ(m.dim(-cd.simple(1)).kind, MultResult::Kind::Zero);
}

TEST(Deformation, SmallWindow) {
  CartanData cd = build_cartan("A1~");
  Uq uq(cd);
  BeckOrdering ord = find_pi(cd, 12);
  RootVectors rv(uq, ord);
  PBWAlgebra alg(rv);
  LoopAlgebra L(cd);
  for (std::vector<int> J : {std::vector<int>{}, std::vector<int>{1}}) {
    DeformationReport r = verify_deformation(alg, L, Weight{{1, 1}, 0}, J, 3);
    EXPECT_TRUE(r.ok()) << r.str();
    EXPECT_FALSE(r.rows.empty());
  }
}
