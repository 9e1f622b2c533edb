#include "support.hpp"

#include <gtest/gtest.h>

using namespace welded;
using namespace testing_support;

namespace {

LaurentMatrix from_rows(const std::vector<std::vector<LaurentPolynomial>>& rows) {
  const std::size_t arity = rows.empty() || rows[0].empty() ? 1 : rows[0][0].arity();
  LaurentMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), arity);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(from_rows({{one() - t(3)}})), one() - t(3));
  EXPECT_EQ(determinant(LaurentMatrix::identity(3, 1)), one());
  const auto m = from_rows({{one() - t(), t()}, {t(), one() - t()}});
  EXPECT_EQ(determinant(m), (one() - t()) * (one() - t()) - t() * t());
  EXPECT_EQ(determinant(LaurentMatrix(0, 0, 2)), LaurentPolynomial::one(2));
}

TEST(Determinant, NotSquare) {
  try {
    (void)determinant(LaurentMatrix(2, 3, 1));
    FAIL() << "expected NotSquare";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST(Determinant, CofactorOracle) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t arity = 1 + rng() % 2;
    LaurentMatrix m(n, n, arity);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, arity, 3);
    ASSERT_EQ(determinant(m), cofactor_determinant(m)) << "trial " << trial;
  }
}

TEST(Determinant, SingularRows) {
  const auto r = one() + t(-1);
  const auto m = from_rows({{r, 2 * r}, {t() * r, 2 * t() * r}});
  EXPECT_TRUE(determinant(m).is_zero());
}

TEST(MinorsGcd, Examples) {
  EXPECT_TRUE(minors_gcd(LaurentMatrix(2, 2, 1), 0).is_one());
  EXPECT_TRUE(minors_gcd(LaurentMatrix(3, 2, 1), 1).is_zero());
  EXPECT_TRUE(minors_gcd(LaurentMatrix(3, 2, 1), 2).is_zero());
  const auto m = from_rows({{one() - t(), LaurentPolynomial(1)},
                            {LaurentPolynomial(1), one() - t(2)}});
  EXPECT_EQ(minors_gcd(m, 1), normalize(one() - t()));
}

TEST(MinorsGcd, SizeOutOfRange) {
  try {
    (void)minors_gcd(LaurentMatrix(2, 3, 1), 3);
    FAIL() << "expected SizeOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeOutOfRange);
  }
}

TEST(MinorsGcd, DividesEveryMinor) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
    LaurentMatrix m(rows, cols, 1);
    const auto common = one() - t(1 + static_cast<int>(rng() % 2));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = common * random_poly(rng, 1, 2);
    const std::size_t size = 1 + rng() % std::min(rows, cols);
    const auto g = minors_gcd(m, size);
    auto rs = detail::first_combination(size);
    do {
      auto cs = detail::first_combination(size);
      do {
        const auto minor = determinant(m.submatrix(rs, cs));
        if (g.is_zero()) {
          ASSERT_TRUE(minor.is_zero());
        } else {
          ASSERT_TRUE(divide_exact(minor, g.representative()).has_value());
        }
      } while (detail::next_combination(cs, cols));
    } while (detail::next_combination(rs, rows));
  }
}

// The reduced path used for Alexander polynomials must agree with the plain
// gcd of all minors.
TEST(MinorsGcd, UnitPivotReductionAgrees) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
    LaurentMatrix m(rows, cols, 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const auto k = rng() % 4;
        m(i, j) = k == 0   ? LaurentPolynomial(1)
                  : k == 1 ? (rng() % 2 ? t(static_cast<int>(rng() % 3) - 1) : -t())
                           : random_poly(rng, 1, 3);
      }
    for (std::size_t size = 1; size <= std::min(rows, cols); ++size) {
      ASSERT_EQ(elementary_ideal_gcd(m, size), minors_gcd(m, size))
          << "trial " << trial << " size " << size;
    }
  }
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form({{1, 0}, {0, 1}}), (std::vector<BigInt>{1, 1}));
  EXPECT_EQ(smith_normal_form({{2, 0}, {0, 3}}), (std::vector<BigInt>{1, 6}));
  EXPECT_EQ(smith_normal_form({{0, 0}}), (std::vector<BigInt>{0}));
  EXPECT_EQ(smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
            (std::vector<BigInt>{2, 6, 12}));
}

TEST(SmithNormalForm, DivisibilityChainRandomized) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a(r, std::vector<BigInt>(c));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<int>(rng() % 13) - 6;
    const auto d = smith_normal_form(a);
    ASSERT_EQ(d.size(), std::min(r, c));
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      ASSERT_GE(d[i], 0);
      if (d[i] == 0) {
        ASSERT_EQ(d[i + 1], 0);
      } else {
        ASSERT_EQ(d[i + 1] % d[i], 0);
      }
    }
    // the product of the invariant factors is the gcd of maximal minors (up
    // to sign), checked through the Laurent determinant on constants
    if (r == c) {
      LaurentMatrix m(r, r, 1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) m(i, j) = LaurentPolynomial::constant(1, a[i][j]);
      BigInt prod = 1;
      for (const auto& x : d) prod *= x;
      const BigInt det = determinant(m).constant_term();
      ASSERT_EQ(abs(det), prod);
    }
  }
}
