#include <gtest/gtest.h>

#include "mubkit/error.hpp"
#include "mubkit/prime.hpp"

using namespace mubkit;

TEST(Prime, AgreesWithSieve) {
  constexpr std::uint64_t kLimit = 5000;
  std::vector<bool> composite(kLimit, false);
  composite[0] = composite[1] = true;
  for (std::uint64_t i = 2; i * i < kLimit; ++i) {
    if (composite[i]) continue;
    for (auto j = i * i; j < kLimit; j += i) composite[j] = true;
  }
  for (std::uint64_t n = 0; n < kLimit; ++n) EXPECT_EQ(is_prime(n), !composite[n]) << n;
}

TEST(Prime, ConstructionRejectsComposites) {
  EXPECT_THROW(Prime(4), DomainError);
  EXPECT_THROW(Prime(1), DomainError);
  EXPECT_THROW(Prime(0), DomainError);
  EXPECT_EQ(Prime(7).value(), 7u);
  EXPECT_TRUE(Prime(3).is_odd());
  EXPECT_FALSE(Prime(2).is_odd());
}

TEST(Prime, FactorsOfGroupOrders) {
  EXPECT_EQ(prime_factors(8), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(prime_factors(124), (std::vector<std::uint64_t>{2, 31}));
  EXPECT_EQ(prime_factors(16383), (std::vector<std::uint64_t>{3, 43, 127}));
  EXPECT_TRUE(prime_factors(1).empty());
}

TEST(Prime, OrderAndPrimitiveRoot) {
  const Prime five(5);
  // 2, 4, 3, 1
  EXPECT_EQ(order_mod(2, five), 4u);
  EXPECT_EQ(order_mod(3, five), 4u);
  EXPECT_EQ(order_mod(4, five), 2u);
  EXPECT_EQ(order_mod(1, five), 1u);
  EXPECT_THROW(order_mod(0, five), DomainError);
  EXPECT_EQ(least_primitive_root(five), 2u);
  EXPECT_EQ(least_primitive_root(Prime(2)), 1u);
  EXPECT_EQ(least_primitive_root(Prime(7)), 3u);
}

TEST(Prime, IpowOverflowIsCapacity) {
  EXPECT_EQ(ipow(3, 4), 81u);
  EXPECT_THROW(ipow(2, 64), CapacityError);
}
