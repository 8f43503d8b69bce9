#include <random>

#include <gtest/gtest.h>

#include "rthh/integer_matrix.hpp"

using namespace rthh;

namespace {

BigMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> entry(-9, 9);
  BigMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
  return m;
}

bool is_diagonal(const BigMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST(Smith, DiagTwoThree) {
  BigMatrix a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = 3;
  SmithForm s = smith_normal_form(a);
  ASSERT_EQ(s.invariant_factors.size(), 2u);
  EXPECT_EQ(s.invariant_factors[0], 1);
  EXPECT_EQ(s.invariant_factors[1], 6);
  EXPECT_EQ(s.left * a * s.right, s.diagonal);
}

TEST(Smith, ZeroMatrix) {
  BigMatrix a(3, 2);
  SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.rank, 0u);
  EXPECT_EQ(s.left, BigMatrix::identity(3));
  EXPECT_EQ(s.right, BigMatrix::identity(2));
}

TEST(Smith, RandomRecomposition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    BigMatrix a = random_matrix(rng, r, c);
    SmithForm s = smith_normal_form(a);
    EXPECT_TRUE(is_diagonal(s.diagonal));
    EXPECT_EQ(unimodular_inverse(s.left) * s.diagonal * unimodular_inverse(s.right), a);
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
      EXPECT_EQ(s.invariant_factors[i] % s.invariant_factors[i - 1], 0);
    EXPECT_EQ(invariant_factors(a, PivotStrategy::kFirstNonzero), s.invariant_factors);
  }
}

TEST(Hermite, SpansSameLattice) {
  Mat rows = {{2, 4}, {3, 6}, {0, 5}};
  Mat h = hermite_basis(rows, 2);
  ASSERT_EQ(h.size(), 2u);
  for (const Vec& r : rows) EXPECT_TRUE(lattice_contains(h, r));
  EXPECT_EQ(determinant(h), 5);
}

TEST(LinearAlgebra, NonnegativeSolution) {
  // (1,0) and (0,1) reach (2,3); (1,1) alone does not reach (1,0).
  EXPECT_TRUE(nonnegative_solution(Mat{{1, 0}, {0, 1}}, Vec{2, 3}).has_value());
  EXPECT_FALSE(nonnegative_solution(Mat{{1, 1}}, Vec{1, 0}).has_value());
  EXPECT_FALSE(nonnegative_solution(Mat{{1}, {2}}, Vec{-1}).has_value());
}

TEST(LinearAlgebra, Determinant) {
  EXPECT_EQ(determinant(Mat{{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant(Mat{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
}

TEST(Hermite, EchelonMembershipMatchesSolver) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Mat rows(count(rng), Vec(3));
    for (auto& r : rows)
      for (auto& v : r) v = entry(rng);
    const Mat h = hermite_basis(rows, 3);
    if (h.empty()) continue;
    for (int k = 0; k < 20; ++k) {
      Vec x{entry(rng), entry(rng), entry(rng)};
      EXPECT_EQ(echelon_contains(h, x), lattice_contains(h, x));
    }
  }
  EXPECT_TRUE(echelon_contains(Mat{{2, 0}, {0, 3}}, Vec{4, -6}));
  EXPECT_FALSE(echelon_contains(Mat{{2, 0}, {0, 3}}, Vec{4, 1}));
}

namespace {

// Determinant by cofactor expansion over the chosen rows and columns.
BigInt minor_det(const BigMatrix& a, const std::vector<std::size_t>& rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return a(rows[0], cols[0]);
  BigInt total = 0;
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> sub = cols;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
    const BigInt term = a(rows[0], cols[k]) * minor_det(a, rest, sub);
    total += (k % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_k / d_{k-1} with d_k the gcd of all k x k minors.
std::vector<BigInt> determinantal_factors(const BigMatrix& a) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        BigInt d = minor_det(a, r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    BigMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4);
    if (trial % 3 == 0)  // force some torsion and rank drop
      for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = 2 * a(a.rows() - 1, j);
    const auto expected = determinantal_factors(a);
    EXPECT_EQ(smith_normal_form(a, PivotStrategy::kSmallestMagnitude).invariant_factors, expected);
    EXPECT_EQ(smith_normal_form(a, PivotStrategy::kFirstNonzero).invariant_factors, expected);
  }
}

TEST(Smith, FirstNonzeroTransformsStaySmall) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    BigMatrix a = random_matrix(rng, 8, 8);
    SmithForm s = smith_normal_form(a, PivotStrategy::kFirstNonzero);
    EXPECT_TRUE(is_diagonal(s.diagonal));
    EXPECT_EQ(unimodular_inverse(s.left) * s.diagonal * unimodular_inverse(s.right), a);
    for (const BigMatrix* t : {&s.left, &s.right})
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) EXPECT_LT(mpz_sizeinbase((*t)(i, j).get_mpz_t(), 2), 256u);
  }
}
