#include <gtest/gtest.h>

#include "qverma/partition.hpp"

using namespace qverma;

namespace {

Root R(std::vector<int> f, int n) { return Root(std::move(f), n); }

std::vector<std::vector<int>> subsets(int N) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << N); ++m) {
    std::vector<int> J;
    for (int i = 1; i <= N; ++i)
      if (m & (1 << (i - 1))) J.push_back(i);
    out.push_back(J);
  }
  return out;
}

}  // namespace

TEST(SJ, Examples) {
  CartanData cd = build_cartan("A1~");
  for (auto J : subsets(1)) {
    auto p = make_partition(cd, J);
    EXPECT_TRUE(in_SJ(R({0}, 3), p));
    EXPECT_TRUE(in_SJ(cd.simple(1), p));
  }
  auto p0 = make_partition(cd, {});
  EXPECT_TRUE(in_SJ(R({1}, -5), p0));
  EXPECT_FALSE(in_SJ(R({-1}, 5), p0));
  auto p1 = make_partition(cd, {1});
  EXPECT_FALSE(in_SJ(R({1}, -5), p1));
  EXPECT_THROW(in_SJ(R({2}, 0), p1), NotARoot);
}

TEST(SJ, ClosedExamples) {
  CartanData cd = build_cartan("A1~");
  auto p0 = make_partition(cd, {});
  EXPECT_TRUE(is_closed([&](const Root& r) { return in_SJ(r, p0); }, cd, 6));
  EXPECT_TRUE(is_closed([&](const Root& r) { return height(r, cd) > 0; }, cd, 6));
  // alpha_1 and -alpha_1 + k delta for k != 0, plus the positive imaginary roots; the
  // complement takes the rest. alpha_1 + (-alpha_1 + delta) = delta is fine, but
  // (-alpha_1 + delta) + (-alpha_1 + delta) is not a root, while
  // (-alpha_1 - delta) + (alpha_1) = -delta is outside S.
  auto adhoc = [&](const Root& r) {
    if (r.fin_zero()) return r.n > 0;
    if (r.fin[0] == 1) return r.n == 0;
    return r.n != 0;
  };
  EXPECT_FALSE(is_closed(adhoc, cd, 4));
  // S and -S overlapping
  EXPECT_THROW(is_closed([](const Root&) { return true; }, cd, 2), NotAPartition);
}

TEST(SJ, Properties) {
  for (const char* tag : {"A1~", "A2~", "A3~", "C2~"}) {
    CartanData cd = build_cartan(tag);
    auto rs = roots_up_to(cd, tag == std::string("A3~") ? 3 : 6);
    for (auto J : subsets(cd.N)) {
      auto p = make_partition(cd, J);
      EXPECT_EQ(p.finJ.empty(), J.empty());
      for (auto& r : rs) EXPECT_NE(in_SJ(r, p), in_SJ(-r, p)) << tag << " " << r.str();
      for (auto& a : cd.finitePositiveRoots) EXPECT_TRUE(in_SJ(a, p));
      for (int k = 1; k <= 4; ++k) EXPECT_TRUE(in_SJ(cd.delta(k), p));
      EXPECT_TRUE(is_closed([&](const Root& r) { return in_SJ(r, p); }, cd,
                            tag == std::string("A3~") ? 3 : 6))
          << tag << " J=" << p.jstr();
    }
  }
}

TEST(Blocks, Examples) {
  CartanData cd = build_cartan("A1~");
  auto p0 = make_partition(cd, {});
  auto p1 = make_partition(cd, {1});
  EXPECT_EQ(block_of(R({1}, 2), p1), (BlockTag{Block::A1, true}));
  EXPECT_EQ(block_of(R({1}, 2), p0), (BlockTag{Block::A1, false}));
  EXPECT_EQ(block_of(R({0}, -3), p0), (BlockTag{Block::B2, true}));
  EXPECT_EQ(block_of(R({1}, -1), p0), (BlockTag{Block::B3, false}));
  EXPECT_EQ(block_of(R({1}, -1), p0).str(), "B3^inf");
}

TEST(Blocks, Cover) {
  for (const char* tag : {"A1~", "A2~", "C2~"}) {
    CartanData cd = build_cartan(tag);
    for (auto J : subsets(cd.N)) {
      auto p = make_partition(cd, J);
      for (auto& r : roots_up_to(cd, 5)) {
        BlockTag b = block_of(r, p);
        bool positive = height(r, cd) > 0;
        bool aside = b.block == Block::A1 || b.block == Block::A2 || b.block == Block::A3;
        EXPECT_EQ(positive, aside) << r.str();
        if (b.block == Block::A2 || b.block == Block::B2) EXPECT_TRUE(b.fin);
        // -r sits in the mirrored block
        BlockTag m = block_of(-r, p);
        EXPECT_EQ(static_cast<int>(m.block), (static_cast<int>(b.block) + 3) % 6);
        EXPECT_EQ(m.fin, b.fin);
      }
    }
  }
}
