#include <gtest/gtest.h>

#include "obk/error.hpp"
#include "obk/polynomial.hpp"
#include "test_seed.hpp"

using namespace obk;

TEST(Polynomial, TrimsAndPrints) {
  const Polynomial p({1, -3, 1, 0, 0});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_string(), "1 -3 1");
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, NormalizationRemovesUnits) {
  EXPECT_EQ(Polynomial({0, 0, -1, 3, -1}).normalized(), Polynomial({1, -3, 1}));
  EXPECT_TRUE(equal_up_to_units(Polynomial({0, -1, 1, -1}), Polynomial({1, -1, 1})));
  EXPECT_FALSE(equal_up_to_units(Polynomial({1, -1, 1}), Polynomial({1, -3, 1})));
  EXPECT_TRUE(Polynomial().normalized().is_zero());
}

TEST(Polynomial, ArithmeticAndDivision) {
  const Polynomial a({-1, 1});  // t - 1
  const Polynomial b({1, 1});   // t + 1
  EXPECT_EQ(a * b, Polynomial({-1, 0, 1}));
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_THROW(divide_exact(Polynomial({1, 0, 1}), b), Error);
  EXPECT_EQ((a + b), Polynomial({0, 2}));
  EXPECT_EQ((a - a), Polynomial());
  EXPECT_EQ(a.evaluate(3), 2);
}

TEST(Polynomial, CharacteristicPolynomials) {
  EXPECT_EQ(characteristic_polynomial(IntMatrix::identity(2)), Polynomial({1, -2, 1}));
  EXPECT_EQ(characteristic_polynomial(IntMatrix{{0, -1}, {1, 1}}), Polynomial({1, -1, 1}));
  EXPECT_EQ(characteristic_polynomial(IntMatrix{{2, -1}, {-1, 1}}), Polynomial({1, -3, 1}));
  EXPECT_EQ(characteristic_polynomial(IntMatrix{}), Polynomial({1}));
}

TEST(Polynomial, DeterminantOverZt) {
  // det [[t, 1], [1, t]] = t^2 - 1
  PolyMatrix m{{Polynomial({0, 1}), Polynomial({1})}, {Polynomial({1}), Polynomial({0, 1})}};
  EXPECT_EQ(determinant(m), Polynomial({-1, 0, 1}));
  EXPECT_EQ(pencil_determinant(IntMatrix{{1}}, IntMatrix{{-1}}), Polynomial({1, -1}));
}

TEST(Polynomial, CharpolyMatchesCayleyHamiltonTrace) {
  auto rng = test::rng_for(2);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(random_int(rng, 1, 5));
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_int(rng, -3, 3);
    const auto p = characteristic_polynomial(a);
    ASSERT_EQ(p.degree(), static_cast<int>(n));
    EXPECT_EQ(p.leading(), 1);
    EXPECT_EQ(p.coefficient(n - 1), -a.trace());
    const Int sign = n % 2 == 0 ? 1 : -1;
    EXPECT_EQ(p.coefficient(0), sign * determinant(a));
  }
}
