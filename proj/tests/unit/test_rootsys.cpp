#include <gtest/gtest.h>

#include "qverma/rootsys.hpp"

using namespace qverma;

namespace {

Root R(std::vector<int> f, int n) { return Root(std::move(f), n); }

}  // namespace

TEST(Cartan, A1Data) {
  CartanData cd = build_cartan("A1~");
  EXPECT_EQ(cd.A, (std::vector<std::vector<int>>{{2, -2}, {-2, 2}}));
  EXPECT_EQ(cd.d, (std::vector<int>{1, 1}));
  EXPECT_EQ(cd.dualLabels, (std::vector<int>{1, 1}));
  EXPECT_EQ(cd.theta, R({1}, 0));
}

TEST(Cartan, A2Cyclic) {
  CartanData cd = build_cartan("A2~");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(cd.A[i][j], i == j ? 2 : -1);
  EXPECT_EQ(cd.finitePositiveRoots.size(), 3u);
  EXPECT_EQ(cd.theta, R({1, 1}, 0));
}

TEST(Cartan, AllTypesSymmetrizable) {
  for (const char* tag : {"A1~", "A2~", "A3~", "C2~"}) {
    CartanData cd = build_cartan(tag);
    for (int i = 0; i <= cd.N; ++i)
      for (int j = 0; j <= cd.N; ++j) EXPECT_EQ(cd.d[i] * cd.A[i][j], cd.d[j] * cd.A[j][i]) << tag;
    // A * marks = 0 and dual labels are a null vector of A^T
    for (int i = 0; i <= cd.N; ++i) {
      int s = 0, t = 0;
      for (int j = 0; j <= cd.N; ++j) {
        s += cd.A[i][j] * cd.marks[j];
        t += cd.A[j][i] * cd.dualLabels[j];
      }
      EXPECT_EQ(s, 0) << tag;
      EXPECT_EQ(t, 0) << tag;
    }
  }
}

TEST(Cartan, Corank2Rejected) {
  std::vector<std::vector<int>> A = {
      {2, -2, 0, 0}, {-2, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, -2, 2}};
  EXPECT_THROW(build_cartan_matrix(A), NotAffine);
  // finite type, corank 0
  EXPECT_THROW(build_cartan_matrix({{2, -1}, {-1, 2}}), NotAffine);
}

TEST(Cartan, MatrixMatchesTag) {
  CartanData a = build_cartan("A2~");
  CartanData b = build_cartan_matrix(a.A);
  EXPECT_EQ(a.d, b.d);
  EXPECT_EQ(a.dualLabels, b.dualLabels);
  EXPECT_EQ(a.theta, b.theta);
}

TEST(Form, Examples) {
  CartanData cd = build_cartan("A1~");
  EXPECT_EQ(bilinear_form(cd.delta(), cd.delta(), cd), 0);
  EXPECT_EQ(bilinear_form(cd.simple(1), cd.simple(1), cd), 2);
  EXPECT_EQ(bilinear_form(R({1}, 3), R({1}, -5), cd), 2);
  CartanData c2 = build_cartan("C2~");
  // short roots have square length 2
  int mn = 1000;
  for (auto& r : c2.finitePositiveRoots) mn = std::min(mn, bilinear_form(r, r, c2));
  EXPECT_EQ(mn, 2);
}

TEST(Classify, Examples) {
  CartanData cd = build_cartan("A1~");
  EXPECT_EQ(classify(R({1}, -7), cd), RootClass::RealRoot);
  EXPECT_EQ(classify(R({0}, 3), cd), RootClass::ImaginaryRoot);
  EXPECT_EQ(classify(R({2}, 0), cd), RootClass::NotRoot);
  EXPECT_EQ(classify(R({0}, 0), cd), RootClass::NotRoot);
}

TEST(Height, Examples) {
  CartanData cd = build_cartan("A1~");
  EXPECT_EQ(height(cd.simple(1), cd), 1);
  EXPECT_EQ(height(cd.delta(), cd), 2);
  EXPECT_EQ(height(R({-1}, 1), cd), 1);
  CartanData a2 = build_cartan("A2~");
  EXPECT_EQ(height(R({-1, 0}, 4), a2), 11);
}

TEST(Reflection, Examples) {
  CartanData cd = build_cartan("A1~");
  EXPECT_EQ(simple_reflection(1, cd.simple(1), cd), R({-1}, 0));
  EXPECT_EQ(simple_reflection(1, cd.simple(0), cd), R({1}, 1));
  EXPECT_EQ(simple_reflection(0, cd.delta(), cd), cd.delta());
}

TEST(Reflection, PreservesFormAndType) {
  for (const char* tag : {"A1~", "A2~", "A3~", "C2~"}) {
    CartanData cd = build_cartan(tag);
    std::vector<Root> rs;
    for (auto& r : roots_up_to(cd, 4))
      if (std::abs(height(r, cd)) <= 8) rs.push_back(r);
    ASSERT_FALSE(rs.empty());
    for (int i = 0; i <= cd.N; ++i) {
      for (auto& x : rs) {
        Root rx = simple_reflection(i, x, cd);
        EXPECT_EQ(classify(rx, cd), classify(x, cd)) << tag << " " << x.str();
        EXPECT_EQ(bilinear_form(x, cd.delta(), cd), 0);
        for (auto& y : rs)
          ASSERT_EQ(bilinear_form(rx, simple_reflection(i, y, cd), cd), bilinear_form(x, y, cd))
              << tag << " " << x.str() << " " << y.str();
      }
    }
  }
}

TEST(Coords, RoundTrip) {
  CartanData cd = build_cartan("C2~");
  for (auto& r : roots_up_to(cd, 3)) {
    auto c = cd.coords(r);
    int s = 0;
    for (int x : c) s += x;
    EXPECT_EQ(s, height(r, cd));
    EXPECT_EQ(cd.from_coords(c), r);
  }
}

TEST(Weight, Parse) {
  CartanData cd = build_cartan("A1~");
  Weight w = parse_weight("h0=0,h1=2,d=0", cd);
  EXPECT_EQ(w.h, (std::vector<int>{0, 2}));
  EXPECT_EQ(cd.level(w), 2);
  EXPECT_THROW(parse_weight("h7=1", cd), std::invalid_argument);
}
