#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tilek/ktheory.hpp"
#include "tilek/snf.hpp"

using namespace tilek;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix diagonal_matrix(const SnfResult& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.rank; ++i) d(i, i) = s.diagonal[i];
  return d;
}

void expect_chain(const SnfResult& s) {
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    EXPECT_GT(s.diagonal[i], 0);
    if (i + 1 < s.diagonal.size()) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
  }
}

}  // namespace

TEST(Snf, Identity) {
  const auto s = snf(IntMatrix::identity(4));
  EXPECT_EQ(s.rank, 4u);
  EXPECT_EQ(s.diagonal, vec({1, 1, 1, 1}));
}

TEST(Snf, Zero) {
  const auto s = snf(IntMatrix(3, 5));
  EXPECT_EQ(s.rank, 0u);
  EXPECT_TRUE(s.diagonal.empty());
  EXPECT_EQ(snf(IntMatrix(0, 0)).rank, 0u);
  EXPECT_EQ(snf(IntMatrix(0, 3)).rank, 0u);
}

TEST(Snf, TwoByTwo) {
  const IntMatrix m{{2, 4}, {6, 8}};
  const auto s = snf(m);
  EXPECT_EQ(s.diagonal, vec({2, 4}));
  EXPECT_EQ(s.diagonal[0], oracle::minor_gcd(m, 1));
  EXPECT_EQ(s.diagonal[0] * s.diagonal[1], abs(oracle::cofactor_det(m)));
}

TEST(Snf, TransformsReproduceDiagonal) {
  auto rng = oracle::rng(11);
  for (int k = 0; k < 60; ++k) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
    const IntMatrix m = oracle::random_matrix(rng, rows, cols, -9, 9);
    const auto s = snf(m, true);
    ASSERT_TRUE(s.left && s.right);
    EXPECT_EQ(*s.left * m * *s.right, diagonal_matrix(s, rows, cols));
    EXPECT_EQ(abs(determinant(*s.left)), 1);
    EXPECT_EQ(abs(determinant(*s.right)), 1);
    expect_chain(s);
  }
}

TEST(Snf, RankAgreesWithRationalElimination) {
  auto rng = oracle::rng(12);
  for (int k = 0; k < 60; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7, -2, 2);
    EXPECT_EQ(snf(m).rank, oracle::rational_rank(m));
  }
}

TEST(Snf, DeterminantalDivisors) {
  // d_1 ... d_k = gcd of k x k minors for every k up to the rank.
  auto rng = oracle::rng(13);
  for (int n = 0; n < 80; ++n) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, -6, 6);
    const auto s = snf(m);
    mpz_class prod = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      const mpz_class g = oracle::minor_gcd(m, k);
      if (k <= s.rank) {
        prod *= s.diagonal[k - 1];
        EXPECT_EQ(prod, g) << to_string(m);
      } else {
        EXPECT_EQ(g, 0) << to_string(m);
      }
    }
  }
}

TEST(Snf, InvariantUnderUnimodularMultiplication) {
  auto rng = oracle::rng(14);
  for (int k = 0; k < 50; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 5, 7, -9, 9);
    const IntMatrix p = oracle::random_unimodular(rng, 5) * m * oracle::random_unimodular(rng, 7);
    EXPECT_EQ(snf(m).diagonal, snf(p).diagonal);
  }
}

TEST(Snf, DiagonalBiggerThanMachineWords) {
  IntMatrix m(2, 2);
  m(0, 0) = mpz_class("340282366920938463463374607431768211456");  // 2^128
  m(1, 1) = mpz_class("12");
  const auto s = snf(m);
  EXPECT_EQ(s.diagonal[0], 4);
  EXPECT_EQ(s.diagonal[1], mpz_class("340282366920938463463374607431768211456") * 3);
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel(IntMatrix(3, 0)), FgAbelianGroup::free(3));
  const IntMatrix d{{2, 0}, {0, 0}};
  EXPECT_EQ(cokernel(d), FgAbelianGroup::from_summands({2}, 1));
}

TEST(Cokernel, ColumnPermutationInvariant) {
  auto rng = oracle::rng(15);
  for (int k = 0; k < 30; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 6, -5, 5);
    IntMatrix p = m;
    p.swap_cols(0, 5);
    p.swap_cols(1, 3);
    EXPECT_EQ(cokernel(m), cokernel(p));
  }
}

TEST(Cokernel, PointedTilesOfK22) {
  const auto pair = build_pair(BipartiteGraph::complete(2, 2), {SystemKind::PointedTile, 2});
  EXPECT_EQ(cokernel(evans_block(pair.horizontal, pair.vertical)), FgAbelianGroup::free(4));
}

TEST(BlockRight, Shapes) {
  const IntMatrix b = block_right(IntMatrix::identity(2), IntMatrix::identity(2));
  EXPECT_EQ(b.rows(), 2u);
  EXPECT_EQ(b.cols(), 4u);
  EXPECT_THROW(block_right(IntMatrix(2, 2), IntMatrix(3, 2)), DimensionError);
  const IntMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(hermite_normal_form(block_right(a, IntMatrix(2, 3))), hermite_normal_form(a));
  const auto pair = build_pair(BipartiteGraph::complete(2, 2), {SystemKind::PointedTile, 2});
  const IntMatrix e = evans_block(pair.horizontal, pair.vertical);
  EXPECT_EQ(e.rows(), 16u);
  EXPECT_EQ(e.cols(), 32u);
}

TEST(ElementOrder, Examples) {
  const IntMatrix d{{2, 0}, {0, 0}};
  EXPECT_EQ(element_order_in_cokernel(d, vec({1, 0})), ElementOrder::finite(2));
  EXPECT_EQ(element_order_in_cokernel(d, vec({0, 1})), ElementOrder::infinite());
  EXPECT_EQ(element_order_in_cokernel(d, vec({0, 0})), ElementOrder::finite(1));
  EXPECT_THROW(element_order_in_cokernel(d, vec({1})), DimensionError);
}

TEST(ElementOrder, AllOnesOfK46PointedTiles) {
  // The closed-form order of [1] for kappa(4,6) is 2; the cokernel says 1,
  // and an order read off without transforms agrees with the cokernel.
  const auto pair = build_pair(BipartiteGraph::complete(4, 6), {SystemKind::PointedTile, 2});
  const IntMatrix b = evans_block(pair.horizontal, pair.vertical);
  const IntVector ones(b.rows(), mpz_class(1));
  EXPECT_EQ(element_order_in_cokernel(b, ones), ElementOrder::finite(1));
  EXPECT_EQ(oracle::ratio_order(b, ones), mpz_class(1));
  EXPECT_EQ(oracle::naive_order(b, ones, 4), 1);
}

TEST(ElementOrder, AgreesWithNaiveHnfOracle) {
  auto rng = oracle::rng(16);
  for (int k = 0; k < 100; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 6, -4, 4);
    IntVector v(4);
    for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
    const ElementOrder got = element_order_in_cokernel(m, v);
    const FgAbelianGroup c = cokernel(m);
    const long bound = c.invariant_factors().empty() ? 1 : c.invariant_factors().back().get_si();
    const auto naive = oracle::naive_order(m, v, bound);
    if (got.is_finite()) {
      ASSERT_TRUE(naive.has_value()) << to_string(m);
      EXPECT_EQ(*got.value, *naive);
    } else {
      EXPECT_FALSE(naive.has_value());
      EXPECT_GT(c.free_rank(), 0u);
    }
  }
}

TEST(Hnf, MembershipOfColumnsAndNonMembers) {
  auto rng = oracle::rng(17);
  for (int k = 0; k < 40; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 5, -6, 6);
    const IntMatrix h = hermite_normal_form(m);
    EXPECT_EQ(h.cols(), oracle::rational_rank(m));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      IntVector col(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
      EXPECT_TRUE(in_column_lattice(h, col));
    }
    // HNF is canonical: a unimodular change of generators leaves it fixed.
    EXPECT_EQ(hermite_normal_form(m * oracle::random_unimodular(rng, 5)), h);
  }
  const IntMatrix two{{2, 0}, {0, 3}};
  EXPECT_FALSE(in_column_lattice(hermite_normal_form(two), vec({1, 0})));
  EXPECT_TRUE(in_column_lattice(hermite_normal_form(two), vec({4, 3})));
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  auto rng = oracle::rng(18);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix m = oracle::random_matrix(rng, n, n, -5, 5);
    EXPECT_EQ(determinant(m), oracle::cofactor_det(m));
  }
}
