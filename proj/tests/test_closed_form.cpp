#include "fibcube/closed_form.hpp"

#include <gtest/gtest.h>

using namespace fibcube;

TEST(MostarGamma, SmallValues) {
  EXPECT_EQ(mostar_gamma_sum(2), 2);
  EXPECT_EQ(mostar_gamma_sum(4), 28);
  EXPECT_EQ(mostar_gamma_sum(6), 298);
  EXPECT_EQ(mostar_gamma_alt(3), 7);
  EXPECT_EQ(mostar_gamma_alt(5), 92);
  EXPECT_EQ(mostar_gamma_closed(2), 2);
  EXPECT_EQ(mostar_gamma_closed(5), 92);
}

TEST(MostarGamma, FrozenLargeValues) {
  // Evaluated independently from the defining sum in arbitrary precision.
  EXPECT_EQ(mostar_gamma_closed(12), 201108);
  EXPECT_EQ(mostar_gamma_closed(20), 754025282);
  EXPECT_EQ(to_decimal(mostar_gamma_closed(100)), "10571669593182423484149301991946198090301660");
}

TEST(MostarGamma, MethodsAgree) {
  const auto mn = mn_sequence(200);
  for (int n = 2; n <= 200; ++n) {
    const ExactInteger sum = mostar_gamma_sum(n);
    ASSERT_EQ(mostar_gamma_alt(n), sum) << n;
    ASSERT_EQ(mostar_gamma_closed(n), sum) << n;
    ASSERT_EQ(mn[static_cast<std::size_t>(n)].total(), sum) << n;
  }
  EXPECT_EQ(mostar_gamma_alt(10), mostar_gamma_sum(10));
}

TEST(MostarGamma, RangeErrors) {
  EXPECT_THROW(mostar_gamma_sum(1), std::out_of_range);
  EXPECT_THROW(mostar_gamma_alt(0), std::out_of_range);
  EXPECT_THROW(mostar_gamma_closed(1), std::out_of_range);
  EXPECT_THROW(mostar_lambda(1), std::out_of_range);
}

TEST(ExactDivision, InexactIsAnInternalError) {
  EXPECT_EQ(divide_exact(50, 25), 2);
  EXPECT_THROW(divide_exact(51, 25), std::logic_error);
}

TEST(MostarLambda, Values) {
  EXPECT_EQ(mostar_lambda(2), 2);
  EXPECT_EQ(mostar_lambda(3), 6);
  EXPECT_EQ(mostar_lambda(4), 24);
  EXPECT_EQ(mostar_lambda(5), 75);
}

TEST(MnRecursion, PaperTable) {
  EXPECT_EQ(mn_recursion(0), (PartitionPolynomial{0, 0, 0}));
  EXPECT_EQ(mn_recursion(1), (PartitionPolynomial{0, 0, 0}));
  EXPECT_EQ(mn_recursion(2), (PartitionPolynomial{1, 1, 0}));
  EXPECT_EQ(mn_recursion(3), (PartitionPolynomial{4, 2, 1}));
  EXPECT_EQ(mn_recursion(4), (PartitionPolynomial{16, 6, 6}));
  EXPECT_EQ(mn_recursion(5), (PartitionPolynomial{54, 15, 23}));
  EXPECT_THROW(mn_recursion(-1), std::out_of_range);
}

TEST(MnRecursion, SubstitutionFormMatchesCoefficients) {
  // Mₙ(x,y,z) = Mₙ₋₁(x+z,0,x) + Mₙ₋₂(2x+z,x+z,x+z) + fₙ₋₁(fₙ+fₙ₋₂)x + fₙfₙ₋₁y,
  // checked by evaluating both sides at several integer points.
  const auto m = mn_sequence(40);
  const int points[][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, -3, 5}, {7, 11, -13}};
  for (int n = 2; n <= 40; ++n)
    for (const auto& p : points) {
      const ExactInteger x = p[0], y = p[1], z = p[2];
      const auto& m1 = m[static_cast<std::size_t>(n - 1)];
      const auto& m2 = m[static_cast<std::size_t>(n - 2)];
      const ExactInteger rhs = m1.evaluate(x + z, 0, x) + m2.evaluate(2 * x + z, x + z, x + z) +
                               fib(n - 1) * (fib(n) + fib(n - 2)) * x + fib(n) * fib(n - 1) * y;
      ASSERT_EQ(m[static_cast<std::size_t>(n)].evaluate(x, y, z), rhs) << n;
    }
}

TEST(MnRecursion, ACoefficientIsShiftedWiener) {
  const auto m = mn_sequence(200);
  for (int n = 3; n <= 200; ++n) ASSERT_EQ(m[static_cast<std::size_t>(n)].a, wiener_gamma_sum(n - 1)) << n;
}

TEST(Wiener, SmallValues) {
  EXPECT_EQ(wiener_gamma_sum(1), 1);
  EXPECT_EQ(wiener_gamma_sum(2), 4);
  EXPECT_EQ(wiener_gamma_sum(5), 176);
  EXPECT_EQ(wiener_gamma_sum(6), 548);
  EXPECT_EQ(wiener_gamma_closed_cited(1), 1);
  EXPECT_EQ(wiener_gamma_closed_cited(2), 4);
  EXPECT_EQ(wiener_gamma_closed_cited(3), 16);
  EXPECT_EQ(wiener_gamma_closed_new(2), 4);
  EXPECT_EQ(wiener_gamma_closed_new(5), 176);
  EXPECT_EQ(wiener_gamma_closed_cited(10), 42348);
  EXPECT_EQ(to_decimal(wiener_gamma_closed_new(100)), "17236720100042009566381889827711909023118230");
  EXPECT_THROW(wiener_gamma_sum(0), std::out_of_range);
  EXPECT_THROW(wiener_gamma_closed_new(1), std::out_of_range);
}

TEST(Wiener, IdentityChain) {
  for (int n = 2; n <= 200; ++n) {
    const ExactInteger w = wiener_gamma_sum(n);
    ASSERT_EQ(wiener_gamma_closed_cited(n), w) << n;
    ASSERT_EQ(wiener_gamma_closed_new(n), w) << n;
    ASSERT_EQ(mostar_gamma_closed(n) + square_cut_sum(n), w) << n;
  }
  EXPECT_EQ(wiener_gamma_closed_new(30), wiener_gamma_closed_cited(30));
}

TEST(SquareCutSum, Values) {
  EXPECT_EQ(square_cut_sum(1), 1);
  EXPECT_EQ(square_cut_sum(2), 2);
  EXPECT_EQ(square_cut_sum(3), 9);
  EXPECT_EQ(square_cut_sum(5), 84);
}

TEST(Brackets, DivisibleByTwentyFive) {
  for (int n = 2; n <= 1000; ++n) {
    ASSERT_TRUE(divides(25, mostar_gamma_bracket(n))) << n;
    ASSERT_TRUE(divides(25, wiener_cited_bracket(n))) << n;
    ASSERT_TRUE(divides(25, wiener_new_bracket(n))) << n;
  }
  EXPECT_TRUE(divides(25, wiener_cited_bracket(1)));
}

TEST(TermIdentity, ImbalanceRewrite) {
  const FibTable f(203);
  for (int n = 1; n <= 200; ++n)
    for (int k = 1; k <= n; ++k)
      ASSERT_EQ(f[k + 1] * f[n - k + 2] - f[k] * f[n - k + 1], f[k] * f[n - k] + f[k - 1] * f[n - k + 2])
          << n << ' ' << k;
}
