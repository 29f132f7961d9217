#include "shortlinks/exact_simplex.hpp"

#include <gtest/gtest.h>

#include <random>

namespace shortlinks {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Solves the square system B z = b by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(Matrix b, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && b[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(b[piv], b[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || b[r][c] == 0) continue;
      Rational f = b[r][c] / b[c][c];
      for (std::size_t k = 0; k < n; ++k) b[r][k] -= f * b[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] /= b[r][r];
  return rhs;
}

// Feasibility by enumerating basic solutions. Rows must be independent.
bool feasible_by_bases(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size(), n = a.front().size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1U) cols.push_back(j);
    Matrix sq(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) sq[i][k] = a[i][cols[k]];
    auto z = solve_square(sq, b);
    if (z && std::all_of(z->begin(), z->end(), [](const Rational& v) { return v >= 0; })) return true;
  }
  return false;
}

bool full_row_rank(const Matrix& a) {
  const std::size_t m = a.size(), n = a.front().size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    Matrix sq(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1U) sq[i].push_back(a[i][j]);
    if (solve_square(sq, std::vector<Rational>(m, Rational(0)))) return true;
  }
  return false;
}

void expect_solution(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& x) {
  for (const auto& v : x) EXPECT_GE(v, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += a[i][j] * x[j];
    EXPECT_EQ(s, b[i]);
  }
}

void expect_farkas(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y) {
  Rational yb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) yb += y[i] * b[i];
  EXPECT_GT(yb, 0);
  for (std::size_t j = 0; j < a.front().size(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += y[i] * a[i][j];
    EXPECT_LE(s, 0);
  }
}

TEST(Phase1SimplexTest, FeasibleSystem) {
  Matrix a{{1, 1, 0}, {0, 1, 1}};
  std::vector<Rational> b{Rational(3, 2), 2};
  Phase1Simplex lp(a, b);
  auto x = lp.solve();
  ASSERT_TRUE(x.has_value());
  expect_solution(a, b, *x);
}

TEST(Phase1SimplexTest, InfeasibleSystemHasCertificate) {
  // x1 + x2 = 1 and x1 + x2 = 2 cannot both hold.
  Matrix a{{1, 1}, {1, 1}};
  std::vector<Rational> b{1, 2};
  Phase1Simplex lp(a, b);
  EXPECT_FALSE(lp.solve().has_value());
  expect_farkas(a, b, lp.farkas_certificate());
}

TEST(Phase1SimplexTest, NegativeRightHandSide) {
  Matrix a{{1, -1}};
  Phase1Simplex feasible(a, {Rational(-3)});
  auto x = feasible.solve();
  ASSERT_TRUE(x.has_value());
  expect_solution(a, {Rational(-3)}, *x);

  Matrix pos{{1, 2}};
  Phase1Simplex infeasible(pos, {Rational(-1, 3)});
  EXPECT_FALSE(infeasible.solve().has_value());
  expect_farkas(pos, {Rational(-1, 3)}, infeasible.farkas_certificate());
}

TEST(Phase1SimplexTest, Errors) {
  EXPECT_THROW(Phase1Simplex(Matrix{{1, 2}, {1}}, {1, 1}), InputError);
  EXPECT_THROW(Phase1Simplex(Matrix{{1, 2}}, {1, 1}), InputError);
  Phase1Simplex lp(Matrix{{1}}, {Rational(1)});
  EXPECT_THROW(lp.farkas_certificate(), std::logic_error);
  ASSERT_TRUE(lp.solve().has_value());
  EXPECT_THROW(lp.farkas_certificate(), std::logic_error);
}

TEST(Phase1SimplexTest, AgreesWithBasisEnumeration) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), den(1, 4);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t m = 1 + trial % 3, n = m + 1 + trial % 4;
    Matrix a(m, std::vector<Rational>(n));
    std::vector<Rational> b(m);
    for (auto& row : a)
      for (auto& v : row) v = Rational(entry(rng), den(rng));
    for (auto& v : b) v = Rational(entry(rng), den(rng));
    if (!full_row_rank(a)) continue;
    Phase1Simplex lp(a, b);
    auto x = lp.solve();
    EXPECT_FALSE(lp.used_unbounded_integers());
    EXPECT_EQ(x.has_value(), feasible_by_bases(a, b)) << "trial " << trial;
    if (x) {
      expect_solution(a, b, *x);
      ++feasible;
    } else {
      expect_farkas(a, b, lp.farkas_certificate());
      ++infeasible;
    }
  }
  EXPECT_GT(feasible, 50);
  EXPECT_GT(infeasible, 50);
}

TEST(Phase1SimplexTest, LargeEntriesUseUnboundedIntegers) {
  // Entries near 2^62 overflow the 64-bit tableau on the first update.
  const Rational big = Rational(BigInt(1) << 62) - 1;
  Matrix a{{big, 1, 0}, {1, big, 1}};
  std::vector<Rational> b{big + 1, big * 2};
  Phase1Simplex lp(a, b);
  auto x = lp.solve();
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(lp.used_unbounded_integers());
  expect_solution(a, b, *x);

  // The second row forces a negative combination.
  Matrix c{{big, 1}, {-1, -big}};
  std::vector<Rational> d{big, 1};
  Phase1Simplex bad(c, d);
  EXPECT_FALSE(bad.solve().has_value());
  EXPECT_TRUE(bad.used_unbounded_integers());
  expect_farkas(c, d, bad.farkas_certificate());
}

}  // namespace
}  // namespace shortlinks
