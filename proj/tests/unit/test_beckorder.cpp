#include <gtest/gtest.h>

#include "qverma/beckorder.hpp"

using namespace qverma;

namespace {

Root R(std::vector<int> f, int n) { return Root(std::move(f), n); }

}  // namespace

TEST(Beck, A1Sequence) {
  CartanData cd = build_cartan("A1~");
  BeckOrdering ord = find_pi(cd, 4);
  EXPECT_EQ(ord.pi.at(0), 1);
  EXPECT_EQ(ord.pi.at(-1), 0);
  EXPECT_EQ(ord.pi.at(-2), 1);
  EXPECT_EQ(ord.pi.at(1), 0);
  EXPECT_EQ(ord.pi.at(2), 1);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(beta(ord, -k), R({1}, k));
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(beta(ord, k), R({-1}, k));
  EXPECT_EQ(beta(ord, 0), cd.simple(ord.pi.at(0)));
  EXPECT_EQ(beta(ord, 1), R({-1}, 1));
  EXPECT_THROW(beta(ord, 5), OutOfWindow);
}

TEST(Beck, CompareExamples) {
  CartanData cd = build_cartan("A1~");
  BeckOrdering ord = find_pi(cd, 4);
  EXPECT_EQ(compare(ord, R({1}, 0), R({1}, 1)), Cmp::Greater);
  EXPECT_EQ(compare(ord, R({0}, 1), R({0}, 2)), Cmp::Greater);
  EXPECT_EQ(compare(ord, R({-1}, 0), R({1}, -1)), Cmp::Less);
  EXPECT_EQ(compare(ord, R({0}, 2), R({0}, 2)), Cmp::Equal);
  // the A3 chain runs ... > beta_2 > beta_1
  EXPECT_EQ(compare(ord, R({-1}, 2), R({-1}, 1)), Cmp::Greater);
  EXPECT_THROW(compare(ord, R({-1}, 9), R({-1}, 1)), OutOfWindow);
  BeckOrdering wide = find_pi(cd, 20);
  EXPECT_EQ(compare(wide, R({-1}, 9), R({-1}, 1)), Cmp::Greater);
  EXPECT_EQ(compare(wide, R({1}, 9), R({1}, 1)), Cmp::Less);
}

TEST(Beck, ValidateBlocks) {
  for (const char* tag : {"A1~", "A2~", "A3~", "C2~"}) {
    CartanData cd = build_cartan(tag);
    BeckOrdering ord = find_pi(cd, 20);
    BlockReport rep = validate_blocks(ord);
    EXPECT_TRUE(rep.ok) << tag << " " << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_GE(rep.coveredDelta, 1) << tag;
  }
}

TEST(Beck, RepeatedBetaFails) {
  CartanData cd = build_cartan("A1~");
  // pi(0)=pi(-1)=pi(-2)=1 sends beta_{-1} to -alpha_1 and then repeats alpha_1
  BeckOrdering ord = ordering_from_pi(cd, {{0, 1}, {-1, 1}, {-2, 1}, {1, 0}});
  BlockReport rep = validate_blocks(ord);
  EXPECT_FALSE(rep.ok);
  bool dup = false;
  for (auto& f : rep.failures) dup |= f.find("duplicate") != std::string::npos;
  EXPECT_TRUE(dup);
}

TEST(Beck, TotalOrder) {
  for (const char* tag : {"A1~", "A2~"}) {
    CartanData cd = build_cartan(tag);
    BeckOrdering ord = find_pi(cd, 40);
    std::vector<Root> rs;
    for (auto& r : roots_up_to(cd, 4))
      if (!r.fin_zero() || r.n != 0) rs.push_back(r);
    auto flip = [](Cmp c) { return c == Cmp::Less ? Cmp::Greater : c == Cmp::Greater ? Cmp::Less : c; };
    for (auto& a : rs)
      for (auto& b : rs) {
        Cmp ab = compare(ord, a, b);
        ASSERT_EQ(ab, flip(compare(ord, b, a)));
        ASSERT_EQ(ab == Cmp::Equal, a == b);
      }
    for (auto& a : rs)
      for (auto& b : rs) {
        if (compare(ord, a, b) != Cmp::Less) continue;
        for (auto& c : rs)
          if (compare(ord, b, c) == Cmp::Less) ASSERT_EQ(compare(ord, a, c), Cmp::Less);
      }
  }
}

TEST(Beck, BlockChain) {
  CartanData cd = build_cartan("A2~");
  BeckOrdering ord = find_pi(cd, 40);
  auto p = make_partition(cd, {});
  auto rs = roots_up_to(cd, 3);
  std::vector<int> rank = {5, 4, 3, 0, 1, 2};  // A1 A2 A3 B1 B2 B3 positions in the chain
  for (auto& a : rs)
    for (auto& b : rs) {
      if (a.is_zero() || b.is_zero()) continue;
      int ra = rank[static_cast<int>(block_of(a, p).block)];
      int rb = rank[static_cast<int>(block_of(b, p).block)];
      if (ra < rb) EXPECT_EQ(compare(ord, a, b), Cmp::Less);
    }
}
