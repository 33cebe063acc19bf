#include "fibcube/sequences.hpp"

#include <gtest/gtest.h>

using fibcube::ExactInteger;
using fibcube::fib;
using fibcube::lucas;

TEST(Sequences, Seeds) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(1), 1);
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(1), 1);
}

TEST(Sequences, SmallValues) {
  EXPECT_EQ(fib(10), 55);
  EXPECT_EQ(lucas(5), 11);
  EXPECT_EQ(lucas(10), 123);
}

TEST(Sequences, BeyondSixtyFourBits) {
  EXPECT_EQ(fibcube::to_decimal(fib(100)), "354224848179261915075");
  EXPECT_EQ(fibcube::to_decimal(fib(1000)).size(), 209u);
}

TEST(Sequences, NegativeIndexRejected) {
  EXPECT_THROW(fib(-1), std::invalid_argument);
  EXPECT_THROW(lucas(-3), std::invalid_argument);
}

TEST(Sequences, RecurrencesAndLucasIdentity) {
  const fibcube::FibTable f(1001);
  ExactInteger l_prev = lucas(0), l = lucas(1);
  for (int n = 2; n <= 1000; ++n) {
    ASSERT_EQ(f[n], f[n - 1] + f[n - 2]) << n;
    ASSERT_GE(f[n], f[n - 1]) << n;
    ExactInteger next = l_prev + l;
    l_prev = l;
    l = next;
    ASSERT_EQ(l, f[n - 1] + f[n + 1]) << n;
  }
  EXPECT_EQ(fib(1000), f[1000]);
  EXPECT_EQ(lucas(1000), l);
}

TEST(Sequences, FibTableBounds) {
  const fibcube::FibTable f(5);
  EXPECT_EQ(f.last(), 5);
  EXPECT_EQ(f[5], 5);
  EXPECT_THROW(f[6], std::out_of_range);
  EXPECT_THROW(f[-1], std::out_of_range);
  EXPECT_EQ(fibcube::FibTable(0)[0], 0);
}

TEST(Sequences, LargeIndexExact) {
  // f_{2n+2} at n = 5000 is needed by the closed forms at that size.
  const ExactInteger a = fib(10002), b = fib(10001), c = fib(10000);
  EXPECT_EQ(a, b + c);
  EXPECT_EQ(fibcube::from_decimal(fibcube::to_decimal(a)), a);
}
