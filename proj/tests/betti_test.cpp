#include "oracles.hpp"

#include "detinv/detinv.hpp"

#include <gtest/gtest.h>

using namespace detinv;

TEST(Betti, TwoByTwoPermanentTable) {
  const MatrixContext c(3, 3);
  const auto bp = betti_polynomial(c, 2, 2);
  const auto t = betti_table(bp, c);
  EXPECT_EQ(t.totals(), (std::vector<BigInt>{36, 90, 84, 37, 9, 1}));
  EXPECT_EQ(t.beta(3, 9), 1);
  EXPECT_EQ(t.beta(5, 9), 1);
  EXPECT_EQ(t.beta(2, 6), 84);
  std::vector<BigInt> parts;
  for (const auto& term : bp.at(2).terms(2)) parts.push_back(dim_term(term, 3, 3));
  std::sort(parts.begin(), parts.end());
  EXPECT_EQ(parts, (std::vector<BigInt>{10, 10, 64}));
  const std::string expect =
      "        0  1  2  3 4 5\n"
      "total: 36 90 84 37 9 1\n"
      "    4: 36 90 84 36 9 1\n"
      "    5:  .  .  .  . . .\n"
      "    6:  .  .  .  1 . .\n";
  EXPECT_EQ(t.pretty(), expect);
  EXPECT_NE(t.csv().find("i,degree,beta\n"), std::string::npos);
  EXPECT_NE(t.csv().find("\n2,6,84\n"), std::string::npos);
}

TEST(Betti, RectangleExpansions) {
  const MatrixContext c(3, 3);
  const auto h33 = h_rect(c, 3, 3);
  ASSERT_EQ(h33.size(), 1u);
  EXPECT_EQ(h33.terms(0).front().wm, DominantWeight({3, 3, 3}));
  EXPECT_EQ(h33.terms(0).front().degree, 9);

  const auto h22 = h_rect(c, 2, 2);
  EXPECT_EQ(h22.size(), 9u);
  EXPECT_EQ(h22.terms(0).size(), 1u);
  EXPECT_EQ(h22.terms(0).front().wm, DominantWeight({2, 2, 0}));
  EXPECT_EQ(h22.terms(4).size(), 1u);
  EXPECT_EQ(h22.terms(4).front().wm, DominantWeight({3, 3, 2}));
  EXPECT_EQ(h22.terms(4).front().wn, DominantWeight({3, 3, 2}));

  // B = h_{2x2} + q^3 h_{3x3} + q^5 h_{3x3}
  auto expect = h22;
  expect.merge(h33, 3);
  expect.merge(h33, 5);
  EXPECT_EQ(betti_polynomial(c, 2, 2).terms, expect);
}

TEST(Betti, HookResolutions) {
  for (int N = 2; N <= 4; ++N) {
    for (int d = 1; d <= 3; ++d) {
      const MatrixContext c(N, 1);
      const auto bp = betti_polynomial(c, 1, d);
      EXPECT_EQ(bp.terms, h_rect(c, 1, d));
      const auto t = betti_table(bp, c);
      EXPECT_EQ(t.max_index(), N - 1);
      for (int p = 0; p < N; ++p) {
        std::vector<int> hook{d};
        hook.insert(hook.end(), static_cast<std::size_t>(p), 1);
        EXPECT_EQ(t.beta(p, d + p), ssyt_count(Partition(hook), N));
        ASSERT_EQ(bp.at(p).size(), 1u);
        EXPECT_EQ(bp.at(p).terms(p).front().wn, DominantWeight({d + p}));
      }
    }
  }
  const MatrixContext c(3, 1);
  const auto t = betti_table(betti_polynomial(c, 1, 2), c);
  EXPECT_EQ(t.totals(), (std::vector<BigInt>{6, 8, 3}));
}

TEST(Betti, MaximalMinorPowersHaveOneSummand) {
  for (int n = 1; n <= 3; ++n)
    for (int m = n; m <= n + 2; ++m)
      for (int d = 1; d <= 3; ++d) {
        const MatrixContext c(m, n);
        EXPECT_EQ(betti_polynomial(c, n, d).terms, h_rect(c, n, d));
        // alpha lives in a min(n,d) x 0 box, beta in an (m-n) x min(n,d) box
        EXPECT_EQ(BigInt(h_rect(c, n, d).size()), oracle::choose(m - n + std::min(n, d), m - n));
      }
}

TEST(Betti, EulerCharacteristicMatchesHilbertFunction) {
  struct Case {
    int m, n, a, b;
  };
  for (const auto& k : std::vector<Case>{{2, 2, 1, 1}, {2, 2, 2, 1}, {2, 2, 1, 2}, {3, 2, 1, 2}, {3, 2, 2, 2},
                                         {3, 3, 2, 2}, {3, 3, 1, 2}, {3, 3, 2, 1}, {4, 2, 1, 3}, {3, 1, 1, 3}}) {
    const MatrixContext c(k.m, k.n);
    const auto t = betti_table(betti_polynomial(c, k.a, k.b), c);
    int top = 0;
    for (const auto& [key, v] : t.entries) top = std::max(top, key.second);
    const std::vector<Partition> gens{Partition::rectangle(k.a, k.b)};
    for (int j = 0; j <= top + 2; ++j) {
      BigInt alt = 0;
      for (int i = 0; i <= t.max_index(); ++i) alt += (i % 2 == 0) ? t.beta(i, j) : BigInt(-t.beta(i, j));
      EXPECT_EQ(alt, oracle::euler_char_in_degree(c, gens, j)) << k.m << "x" << k.n << " I_" << k.a << "x" << k.b << " j=" << j;
    }
  }
}

TEST(Betti, StructuralInvariants) {
  for (int n = 1; n <= 3; ++n)
    for (int m = n; m <= n + 1; ++m)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= 3; ++b) {
          const MatrixContext c(m, n);
          const auto bp = betti_polynomial(c, a, b);
          for (const auto& [key, mult] : bp.terms.entries()) {
            EXPECT_GE(key.degree, a * b + key.index);
            EXPECT_GT(mult, 0);
          }
          const auto rect = Partition::rectangle(a, b);
          EXPECT_EQ(betti_table(bp, c).beta(0, a * b), oracle::schur_dim(rect, m) * oracle::schur_dim(rect, n));
        }
}

TEST(Betti, ConjugationSymmetryForSquareMatrices) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 4; ++s) {
        const auto h = h_rect(MatrixContext(n, n), r, s);
        for (const auto& [key, mult] : h.entries()) {
          EquivariantCharacter swapped;
          swapped.add(key.index, IrredTerm{key.wn, key.wm, key.degree, mult});
          const auto [k2, m2] = *swapped.entries().begin();
          EXPECT_EQ(h.entries().count(k2), 1u) << "n=" << n << " r=" << r << " s=" << s;
        }
      }
}

TEST(Betti, Validation) {
  const MatrixContext c(3, 2);
  EXPECT_THROW(h_rect(c, 3, 1), std::invalid_argument);
  EXPECT_THROW(betti_polynomial(c, 3, 1), std::invalid_argument);
  EXPECT_THROW(betti_polynomial(c, 1, 0), std::invalid_argument);
}
