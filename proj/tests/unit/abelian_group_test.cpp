#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tilek/abelian_group.hpp"
#include "tilek/json_io.hpp"

using namespace tilek;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

FgAbelianGroup g(std::initializer_list<long> moduli, std::size_t rank) {
  return FgAbelianGroup::from_summands(ints(moduli), rank);
}

// Counts elements of order dividing p^k in a finite group given by cyclic
// orders. Two finite abelian groups are isomorphic iff these counts agree for
// every prime power, which gives a check independent of the canonical form.
long count_killed(const std::vector<long>& orders, long n) {
  long c = 1;
  for (long d : orders) c *= std::gcd(d, n);
  return c;
}

}  // namespace

TEST(FromSummands, Examples) {
  EXPECT_EQ(g({2, 3}, 0).invariant_factors(), ints({6}));
  const auto a = g({4, 6}, 1);
  EXPECT_EQ(a.invariant_factors(), ints({2, 12}));
  EXPECT_EQ(a.free_rank(), 1u);
  EXPECT_EQ(g({}, 8), FgAbelianGroup::free(8));
}

TEST(FromSummands, RejectsSmallModuli) {
  EXPECT_THROW(g({1}, 0), PreconditionError);
  EXPECT_THROW(g({0}, 0), PreconditionError);
  EXPECT_THROW(g({-4}, 0), PreconditionError);
  EXPECT_EQ(FgAbelianGroup::from_orders(ints({1, 1, 4}), 0), g({4}, 0));
}

TEST(FromSummands, OrderIndependentAndChain) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    std::vector<long> m;
    for (int i = 0, n = 1 + rng() % 6; i < n; ++i) m.push_back(2 + static_cast<long>(rng() % 30));
    std::vector<BigInt> a(m.begin(), m.end());
    std::vector<BigInt> b(a.rbegin(), a.rend());
    std::shuffle(b.begin(), b.end(), rng);
    const auto ga = FgAbelianGroup::from_summands(a, 0);
    EXPECT_EQ(ga, FgAbelianGroup::from_summands(b, 0));
    const auto& f = ga.invariant_factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_GT(f[i], 1);
      if (i + 1 < f.size()) EXPECT_EQ(f[i + 1] % f[i], 0);
    }
    BigInt prod = 1;
    for (long x : m) prod *= x;
    EXPECT_EQ(ga.torsion_order(), prod);
    std::vector<long> canon;
    for (const auto& d : f) canon.push_back(d.get_si());
    for (long n = 1; n <= 64; ++n) EXPECT_EQ(count_killed(m, n), count_killed(canon, n));
  }
}

TEST(FromSummands, CoprimeAndNonCoprimePairs) {
  for (long a = 2; a <= 20; ++a)
    for (long b = 2; b <= 20; ++b) {
      const long d = std::gcd(a, b);
      if (d == 1) EXPECT_EQ(g({a, b}, 0), g({a * b}, 0));
      else EXPECT_EQ(g({a, b}, 0), FgAbelianGroup::from_orders(ints({std::lcm(a, b), d}), 0));
    }
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(direct_sum(g({2}, 0), g({2}, 0)).invariant_factors(), ints({2, 2}));
  EXPECT_EQ(direct_sum(FgAbelianGroup::free(3), FgAbelianGroup::free(4)), FgAbelianGroup::free(7));
  const auto s = direct_sum(g({2}, 0), g({4}, 1));
  EXPECT_EQ(s.invariant_factors(), ints({2, 4}));
  EXPECT_EQ(s.free_rank(), 1u);
}

TEST(DirectSum, CommutativeAndAssociative) {
  const auto a = g({4, 6}, 1), b = g({9}, 0), c = g({2, 2, 8}, 3);
  EXPECT_EQ(direct_sum(a, b), direct_sum(b, a));
  EXPECT_EQ(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c)));
}

TEST(Power, Examples) {
  const auto p = power(g({2}, 1), 3);
  EXPECT_EQ(p.invariant_factors(), ints({2, 2, 2}));
  EXPECT_EQ(p.free_rank(), 3u);
  EXPECT_TRUE(power(g({6}, 2), 0).is_trivial());
  EXPECT_EQ(power(FgAbelianGroup::free(8), 2), FgAbelianGroup::free(16));
}

TEST(Render, Examples) {
  EXPECT_EQ(render(FgAbelianGroup{}), "0");
  EXPECT_EQ(render(FgAbelianGroup::free(8)), "Z^8");
  EXPECT_EQ(render(g({2, 2, 4}, 1)), "(Z/2)^2 + Z/4 + Z");
  EXPECT_EQ(render(g({2, 6, 6, 6}, 24)), "Z/2 + (Z/6)^3 + Z^24");
  EXPECT_EQ(render(g({3}, 0)), "Z/3");
}

TEST(Json, RoundTrip) {
  const auto a = g({2, 12}, 5);
  const Json j = to_json(a);
  EXPECT_EQ(j.dump(), R"({"free_rank":5,"invariant_factors":[2,12]})");
  EXPECT_EQ(group_from_json(j), a);
}
