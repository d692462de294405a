#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qverma/beckorder.hpp"
#include "qverma/verma.hpp"

using namespace qverma;

namespace {

QRat qn(int n) { return (QRat::q_pow(n) - QRat::q_pow(-n)) / (QRat::q_pow(1) - QRat::q_pow(-1)); }

struct Algebras {
  CartanData cd;
  Uq uq;
  BeckOrdering ord;
  RootVectors rv;
  PBWAlgebra alg;
  explicit Algebras(const char* tag) : cd(build_cartan(tag)), uq(cd), ord(find_pi(cd, 14)), rv(uq, ord), alg(rv) {}
};

ModVec vac() { return ModVec{{SymWord{}, QRat(1)}}; }

}  // namespace

TEST(Mult, Examples) {
  CartanData cd = build_cartan("A1~");
  Weight lam{{0, 2}, 0};
  long long p[] = {1, 1, 2, 3, 5, 7};
  for (int k = 0; k <= 5; ++k) {
    MultResult r = weight_mult(lam, {}, cd.shift(lam, cd.delta(k)), cd);
    EXPECT_EQ(r.kind, MultResult::Kind::Finite);
    EXPECT_EQ(r.count, p[k]) << k;
  }
  EXPECT_EQ(weight_mult(lam, {1}, cd.shift(lam, cd.delta(1)), cd).count, 2);
  EXPECT_EQ(weight_mult(lam, {1}, lam, cd).count, 1);
  // above lambda
  EXPECT_EQ(weight_mult(lam, {1}, cd.shift(lam, -cd.simple(1)), cd).kind, MultResult::Kind::Zero);
  // J empty: lambda - alpha_1 is reached by E_{-a1+n delta} E_{-n delta} for every n
  EXPECT_EQ(weight_mult(lam, {}, cd.shift(lam, cd.simple(1)), cd).kind, MultResult::Kind::Infinite);
  // standard Verma module of A1~: Kostant partition function at delta
  EXPECT_EQ(mult_of(cd.delta(2), make_partition(cd, {1})).count, 6);
}

TEST(Module, BasisMatchesCount) {
  Algebras s("A2~");
  VermaModule m = build_module(s.alg, ModuleConfig{Weight{{1, 1, 0}, 0}, {1}, 3});
  for (const Root& nu : m.weights_in_window(true)) {
    WeightSpace ws = m.weight_space(nu);
    EXPECT_EQ(static_cast<long long>(ws.basis.size()), ws.mult.count) << nu.str();
  }
}

TEST(Module, SimpleLoweringThenRaising) {
  // E_1 F_1 v = [lambda(h_1)] v
  Algebras s("A1~");
  for (int h : {0, 1, 3}) {
    VermaModule m = build_module(s.alg, ModuleConfig{Weight{{1 - h, h}, 0}, {1}, 2});
    ModVec x = m.act_letter(E(1), m.act_letter(F(1), vac()));
    ASSERT_LE(x.size(), 1u);
    EXPECT_EQ(VermaModule::vacuum(x), qn(h));
  }
}

TEST(Module, TorusAction) {
  Algebras s("A1~");
  VermaModule m = build_module(s.alg, ModuleConfig{Weight{{1, 2}, 3}, {1}, 2});
  ModVec f = m.act_letter(F(1), vac());
  ModVec k = m.act_letter(Kp(1), f);
  ASSERT_EQ(k.size(), 1u);
  // K_1 on weight lambda - alpha_1: q^{2 - 2}
  EXPECT_EQ(k.begin()->second, f.begin()->second);
  ModVec d = m.act_letter(Dp(), m.act_letter(F(0), vac()));
  // D on lambda - alpha_0: q^{3 - 1}
  EXPECT_EQ(d.begin()->second, m.act_letter(F(0), vac()).begin()->second.shifted(2));
}

TEST(Module, RaisingKillsVacuum) {
  Algebras s("A1~");
  VermaModule m = build_module(s.alg, ModuleConfig{Weight{{0, 2}, 0}, {}, 4});
  for (const Sym& x : {Sym{s.cd.simple(1), 0}, Sym{s.cd.delta(1), 1}, Sym{s.cd.simple(1) + s.cd.delta(1), 0}}) {
    ASSERT_TRUE(m.raising(x));
    EXPECT_TRUE(m.apply({x}).empty());
  }
}

TEST(Module, StraighteningIsConfluent) {
  Algebras s("A1~");
  VermaModule a = build_module(s.alg, ModuleConfig{Weight{{1, 2}, 0}, {1}, 4});
  VermaModule b = build_module(s.alg, ModuleConfig{Weight{{1, 2}, 0}, {1}, 4});
  std::mt19937_64 rng(9);
  b.shuffle_choices = &rng;
  int tried = 0;
  for (const Root& nu : a.weights_in_window(true)) {
    for (const SymWord& w : a.basis(nu)) {
      if (w.size() < 2) continue;
      SymWord p = w;
      std::shuffle(p.begin(), p.end(), rng);
      ModVec x = a.apply(p), y = b.apply(p);
      EXPECT_EQ(x, y) << symword_str(p);
      for (auto& [u, c] : x) EXPECT_EQ(a.weight_of(u), a.weight_of(p));
      ++tried;
    }
  }
  EXPECT_GT(tried, 10);
}

TEST(Module, SingularVectorAtSimpleRoot) {
  // lambda(h_1) = 0: F_1 v is singular in the standard Verma module
  Algebras s("A1~");
  VermaModule m = build_module(s.alg, ModuleConfig{Weight{{2, 0}, 0}, {1}, 2});
  auto sv = m.singular_vectors(s.cd.simple(1));
  ASSERT_EQ(sv.size(), 1u);
  EXPECT_TRUE(m.singular_vectors(s.cd.simple(0)).empty());
}

TEST(Pairing, MatchesQNumbers) {
  // [E_{k delta}, E_{-k delta}] v = [2k]/k [k c] v
  Algebras s("A1~");
  for (int c = 0; c <= 2; ++c)
    for (int k = 1; k <= 2; ++k) {
      QRat want = qn(2 * k) * QRat(Rational(1, k)) * qn(k * c);
      EXPECT_EQ(heisenberg_pairing(s.alg, 1, 1, k, Weight{{c - 1, 1}, 0}), want) << c << " " << k;
    }
}

TEST(Irreducibility, Verdicts) {
  Algebras s("A1~");
  auto red = check_irreducibility(s.alg, ModuleConfig{Weight{{-1, 1}, 0}, {}, 2});
  EXPECT_FALSE(red.irreducible);
  EXPECT_EQ(red.witnessWeight, s.cd.delta(1));
  auto irr = check_irreducibility(s.alg, ModuleConfig{Weight{{0, 1}, 0}, {}, 4});
  EXPECT_TRUE(irr.irreducible);
  EXPECT_EQ(irr.str(), "IrreducibleUpToDepth(4)");
  auto std0 = check_irreducibility(s.alg, ModuleConfig{Weight{{0, 0}, 0}, {1}, 2});
  EXPECT_FALSE(std0.irreducible);
}

TEST(LevelZero, ReducedModule) {
  Algebras s("A1~");
  EXPECT_THROW(reduced_imaginary_module(s.alg, Weight{{0, 1}, 0}, 2), LevelNotZero);
  VermaModule m = reduced_imaginary_module(s.alg, Weight{{-1, 1}, 0}, 3);
  // imaginary lowering on v is killed, real lowering is not
  EXPECT_TRUE(m.apply({Sym{-s.cd.delta(1), 1}}).empty());
  EXPECT_FALSE(m.act_letter(F(1), vac()).empty());
  std::string why;
  EXPECT_TRUE(reduced_quotient_closed(m, &why)) << why;
}

TEST(LevelZero, BothDirections) {
  Algebras s("A1~");
  auto zero = verify_level_zero(s.alg, Weight{{0, 0}, 0}, 3);
  EXPECT_TRUE(zero.ok());
  EXPECT_EQ(zero.zeroNodes, std::vector<int>{1});
  EXPECT_TRUE(zero.vExcluded);
  auto gen = verify_level_zero(s.alg, Weight{{-2, 2}, 0}, 3);
  EXPECT_TRUE(gen.ok());
  EXPECT_TRUE(gen.singular.empty());
}

TEST(Algebra, CommutationRuleShape) {
  Algebras s("A1~");
  // E_{a1} E_{-a1+d}: both positive, out of order, with an imaginary term in between
  Sym x{s.cd.simple(1), 0}, y{s.cd.delta(1) - s.cd.simple(1), 0};
  const Sym& hi = s.alg.pbw_less(x, y) ? y : x;
  const Sym& lo = s.alg.pbw_less(x, y) ? x : y;
  const SwapRule& r = s.alg.swap_rule(hi, lo);
  EXPECT_EQ(r.xi, QRat::q_pow(-bilinear_form(hi.root, lo.root, s.cd)));
  EXPECT_EQ(s.alg.sign_fallbacks(), 0);
}
