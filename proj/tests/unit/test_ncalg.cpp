#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qverma/beckorder.hpp"
#include "qverma/uq.hpp"

using namespace qverma;

namespace {

Word W(std::initializer_list<Letter> ls) {
  Word w;
  for (Letter l : ls) w.push_back(letter_char(l));
  return w;
}

Element random_element(std::mt19937_64& rng, int N, int maxlen) {
  Element x;
  std::vector<Letter> alphabet;
  for (int i = 0; i <= N; ++i)
    for (Letter l : {E(i), F(i), Kp(i), Km(i)}) alphabet.push_back(l);
  int terms = 1 + rng() % 3;
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = rng() % (maxlen + 1);
    for (int k = 0; k < len; ++k) w.push_back(letter_char(alphabet[rng() % alphabet.size()]));
    x.add_term(w, QRat::q_pow(static_cast<int>(rng() % 5) - 2));
  }
  return x;
}

}  // namespace

TEST(Words, LetterOrder) {
  TermLess less;
  // height first
  EXPECT_TRUE(less(W({Kp(0), Kp(1), Dp()}), W({F(0)})));
  // then length
  EXPECT_TRUE(less(W({E(1)}), W({Kp(0), F(1)})));
  // then letters: F < K^- < K^+ < D^- < D^+ < E
  EXPECT_TRUE(less(W({F(1)}), W({E(0)})));
  EXPECT_TRUE(less(W({Km(1), E(0)}), W({Kp(0), E(0)})));
  EXPECT_TRUE(less(W({Dm(), E(0)}), W({Dp(), E(0)})));
  EXPECT_TRUE(less(W({E(0)}), W({E(1)})));
}

TEST(Words, ParseRoundTrip) {
  Element x = parse_element("(q+q^-1)*F1.K0-.E1 - 2*E0");
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(x.coeff(W({F(1), Km(0), E(1)})), parse_qrat("q+q^-1"));
  EXPECT_EQ(parse_element(x.str()), x);
  EXPECT_EQ(parse_element("1").coeff(Word()), QRat(1));
  EXPECT_THROW(parse_element("(q*E1"), ParseError);
}

TEST(Words, Weight) {
  CartanData cd = build_cartan("A1~");
  Element x = parse_element("E0.E1.F1 + q*K1.E0");
  EXPECT_EQ(x.weight(cd), cd.delta(1) - cd.simple(1));
  EXPECT_FALSE(parse_element("E0 + E1").is_homogeneous(cd));
}

TEST(Rewrite, RelationsReduceToZero) {
  for (const char* tag : {"A1~", "A2~", "C2~"}) {
    CartanData cd = build_cartan(tag);
    Uq uq(cd);
    uq.ensure_completed(cd.N == 1 ? 4 : 3);
    for (auto& [name, x] : uq.relations()) {
      if (x.max_height() > uq.completed_height()) continue;
      EXPECT_TRUE(uq.reduce(x).is_zero()) << tag << " " << name;
    }
  }
}

TEST(Rewrite, NormalFormIdempotent) {
  CartanData cd = build_cartan("A1~");
  Uq uq(cd);
  uq.ensure_completed(5);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    Element x = random_element(rng, cd.N, 5);
    Element r = uq.reduce(x);
    EXPECT_EQ(uq.reduce(r), r);
    // weight is preserved term by term
    if (x.is_homogeneous(cd) && !r.is_zero()) EXPECT_EQ(r.weight(cd), x.weight(cd));
  }
}

TEST(Rewrite, RulesDecrease) {
  CartanData cd = build_cartan("A2~");
  Uq uq(cd);
  uq.ensure_completed(3);
  TermLess less;
  const RewriteSystem& rs = uq.completed();
  for (std::size_t k = 0; k < rs.rules().size(); ++k) {
    if (!rs.is_alive(k)) continue;
    for (auto& [w, c] : rs.rules()[k].rhs.terms()) EXPECT_TRUE(less(w, rs.rules()[k].lead));
  }
}

TEST(Rewrite, SingleIndexConfluence) {
  CartanData cd = build_cartan("A1~");
  Uq uq(cd);
  std::set<Letter> allowed{E(1), F(1), Kp(1), Km(1)};
  RewriteSystem rs(&cd);
  for (auto& [name, x] : uq.relations()) {
    bool inside = true;
    for (auto& [w, c] : x.terms())
      for (char ch : w) inside = inside && allowed.count(static_cast<Letter>(ch));
    if (inside) rs.add_relation(x);
  }
  RewriteSystem done = complete(rs, 5);
  std::vector<Letter> alphabet(allowed.begin(), allowed.end());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    Word w;
    for (int k = 0, h = 0; k < 7; ++k) {
      Letter l = alphabet[rng() % alphabet.size()];
      if (!is_torus(l) && ++h > 5) continue;
      w.push_back(letter_char(l));
    }
    Element x = Element::word(w);
    EXPECT_EQ(reduce_random(x, done, rng), reduce(x, done)) << word_str(w);
  }
}

TEST(ZeroTest, SerreAndCommutators) {
  CartanData cd = build_cartan("A1~");
  Uq uq(cd);
  uq.ensure_completed(4);
  Element e0 = Element::letter(E(0)), e1 = Element::letter(E(1));
  EXPECT_EQ(uq.zero_test(commutator(e0, e1)), ZeroVerdict::NonZero);
  for (auto& [name, x] : uq.relations())
    if (name.rfind("Serre", 0) == 0) {
      EXPECT_EQ(is_zero_mod_ideal(x, uq.completed(), 4), ZeroVerdict::Zero) << name;
      EXPECT_TRUE(uq.shuffle().is_zero(x)) << name;
    }
  // a word that is already normal is not zero
  EXPECT_EQ(uq.zero_test(Element::word(W({F(0), E(1)}))), ZeroVerdict::NonZero);
}

TEST(ZeroTest, ShuffleImageOfE0E1) {
  // E_0 E_1 shuffles to the two orders with a q-power on one of them
  CartanData cd = build_cartan("A1~");
  ShuffleEmbedding sh(cd);
  auto img = sh.image(W({E(0), E(1)}));
  EXPECT_EQ(img.size(), 2u);
}

TEST(GradedModel, DegreeAdditivity) {
  CartanData cd = build_cartan("A1~");
  BeckOrdering ord = find_pi(cd, 6);
  std::vector<Root> syms;
  for (int k = -3; k <= 3; ++k) syms.push_back(ord.beta(k));
  syms.push_back(cd.delta(1));
  std::stable_sort(syms.begin(), syms.end(),
                   [&](const Root& a, const Root& b) { return compare(ord, a, b) == Cmp::Greater; });
  GradedModel g(cd, syms);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    GradedMonomial a, b;
    for (auto* m : {&a, &b}) {
      m->neg.assign(g.size(), 0);
      m->pos.assign(g.size(), 0);
      for (int k = 0; k < 3; ++k) (rng() % 2 ? m->neg : m->pos)[rng() % g.size()] += 1;
    }
    GradedMonomial ab = g.product(a, b);
    EXPECT_EQ(g.degree(ab), g.degree(a) + g.degree(b));
    EXPECT_EQ(ab.coeff.den(), LaurentPoly(1));
  }
}

TEST(GradedModel, QuasiCommutation) {
  // two positive symbols out of order pick up q^{-(x|y)}
  CartanData cd = build_cartan("A1~");
  std::vector<Root> syms{cd.simple(1), cd.delta(1) - cd.simple(1)};
  GradedModel g(cd, syms);
  GradedMonomial x{{0, 0}, {1, 0}}, y{{0, 0}, {0, 1}};
  GradedMonomial yx = g.product(y, x);
  EXPECT_EQ(yx.coeff, QRat::q_pow(-bilinear_form(syms[0], syms[1], cd)));
  EXPECT_EQ(g.product(x, y).coeff, QRat(1));
}
