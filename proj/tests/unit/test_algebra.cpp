#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "subraid/algebra/kh_polynomial.hpp"
#include "subraid/algebra/laurent_poly.hpp"
#include "subraid/algebra/sparse_rank.hpp"

using namespace subraid;
using algebra::KhPolynomial;
using algebra::LaurentPoly;
using algebra::SparseIntMatrix;

namespace {

LaurentPoly P(std::vector<LaurentPoly::Term> t) { return LaurentPoly::from_terms(t); }

// plain Gaussian elimination over Q
std::size_t dense_rank(std::vector<std::vector<boost::multiprecision::cpp_rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const boost::multiprecision::cpp_rational f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(LaurentPoly, ProductWithZero) {
  EXPECT_TRUE(algebra::laurent_mul(algebra::q_plus_qinv(), LaurentPoly()).is_zero());
}

TEST(LaurentPoly, ExactProduct) {
  const auto a = P({{-1, 1}, {1, 1}});
  const auto sq = algebra::laurent_mul(a, a);
  EXPECT_EQ(sq, P({{-2, 1}, {0, 2}, {2, 1}}));
  EXPECT_EQ(sq.min_degree(), -2);
  EXPECT_EQ(sq.max_degree(), 2);
}

TEST(LaurentPoly, CancellationNormalizes) {
  auto a = P({{3, 2}, {5, 1}});
  a -= P({{3, 2}});
  EXPECT_EQ(a.min_degree(), 5);
  EXPECT_EQ(a.term_count(), 1u);
  a -= P({{5, 1}});
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a, LaurentPoly());
}

TEST(LaurentPoly, TextRoundTrip) {
  const auto p = P({{-18, -1}, {-16, 1}, {0, 9}, {4, -123456789}});
  EXPECT_EQ(p.to_string(), "-1 q^-18 + 1 q^-16 + 9 q^0 - 123456789 q^4");
  EXPECT_EQ(algebra::parse_laurent(p.to_string()), p);
  EXPECT_EQ(algebra::parse_laurent("0"), LaurentPoly());
}

TEST(LaurentPoly, BigCoefficients) {
  const auto x = P({{0, 1}, {1, 1}});
  const auto big = x.pow(200);
  algebra::Integer binom = 1;
  for (int k = 1; k <= 100; ++k) binom = binom * (100 + k) / k;
  EXPECT_EQ(big.coeff(100), binom);
}

TEST(LaurentPoly, RandomRingAxioms) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-6, 6), c(-5, 5);
  auto rnd = [&] {
    std::vector<LaurentPoly::Term> t;
    for (int k = 0; k < 4; ++k) t.emplace_back(e(rng), c(rng));
    return P(t);
  };
  for (int it = 0; it < 200; ++it) {
    const auto a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).mirrored(), a.mirrored() * b.mirrored());
  }
}

TEST(KhPolynomial, ReflectAndEuler) {
  KhPolynomial k;
  k.add(0, 1, 1);
  k.add(0, 3, 1);
  k.add(2, 5, 1);
  k.add(3, 9, 1);
  EXPECT_EQ(k.q_max(), 9);
  EXPECT_EQ(k.q_min(), 1);
  EXPECT_EQ(k.reflected().q_max(), -1);
  EXPECT_EQ(k.reflected().reflected(), k);
  EXPECT_EQ(k.euler_characteristic(), P({{1, 1}, {3, 1}, {5, 1}, {9, -1}}));
  EXPECT_EQ(k.to_rows(), "0 1 1\n0 3 1\n2 5 1\n3 9 1\n");
  EXPECT_EQ(k.total_rank(), 4);
}

TEST(SparseRank, MatchesDenseElimination) {
  std::mt19937 rng(11);
  for (int it = 0; it < 300; ++it) {
    const int rows = 1 + static_cast<int>(rng() % 12), cols = 1 + static_cast<int>(rng() % 12);
    SparseIntMatrix m(rows, cols);
    std::vector<std::vector<boost::multiprecision::cpp_rational>> d(static_cast<std::size_t>(rows),
        std::vector<boost::multiprecision::cpp_rational>(static_cast<std::size_t>(cols)));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (rng() % 3 == 0) {
          const int v = static_cast<int>(rng() % 7) - 3;
          m.add(r, c, v);
          d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        }
    ASSERT_EQ(algebra::rank_over_rationals(m), dense_rank(d));
  }
}

TEST(SparseRank, OverflowFallsBackToBigIntegers) {
  std::mt19937_64 rng(5);
  const int n = 7;
  SparseIntMatrix m(n, n);
  std::vector<std::vector<boost::multiprecision::cpp_rational>> d(n, std::vector<boost::multiprecision::cpp_rational>(n));
  std::vector<std::vector<std::int64_t>> vals(n, std::vector<std::int64_t>(n));
  for (auto& row : vals)
    for (auto& v : row) v = static_cast<std::int64_t>(rng() % 4000000000000000000ULL) - 2000000000000000000LL;
  for (int c = 0; c < n; ++c) vals[n - 1][static_cast<std::size_t>(c)] = vals[0][static_cast<std::size_t>(c)] + vals[1][static_cast<std::size_t>(c)];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const auto v = vals[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      m.add(r, c, v);
      d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    }
  EXPECT_EQ(dense_rank(d), 6u);
  EXPECT_EQ(algebra::rank_over_rationals(m), 6u);
  SparseIntMatrix z(3, 4);
  EXPECT_EQ(algebra::rank_over_rationals(z), 0u);
}
