#include <gtest/gtest.h>

#include "subraid/jones/jones.hpp"
#include "subraid/khovanov/khovanov.hpp"
#include "subraid/rational/kh_formula.hpp"
#include "subraid/rational/montesinos.hpp"
#include "subraid/su/obstruction.hpp"
#include "support.hpp"

using namespace subraid;
using rational::MontesinosSpec;
using rational::TwoBridge;

namespace {

bool same_classes(const std::vector<TwoBridge>& got, const std::vector<TwoBridge>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want)
    if (std::none_of(got.begin(), got.end(), [&](const TwoBridge& g) { return rational::same_knot(g, w, true); }))
      return false;
  return true;
}

}  // namespace

TEST(ContinuedFraction, Examples) {
  EXPECT_EQ(rational::continued_fraction(3, 1), (std::vector<int>{3}));
  EXPECT_TRUE(rational::continued_fraction(1, 0).empty());
  const auto a = rational::continued_fraction(9, 4);
  EXPECT_EQ(rational::fold_continued_fraction(a), (std::pair<long long, long long>{9, 4}));
  EXPECT_THROW(rational::continued_fraction(9, 3), Error);
}

TEST(ContinuedFraction, Reconstruction) {
  for (int p = 2; p <= 60; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ASSERT_EQ(rational::fold_continued_fraction(rational::continued_fraction(p, q)),
                (std::pair<long long, long long>{p, q}));
      for (const auto& e : rational::mixed_continued_fractions(p, q, 5))
        ASSERT_EQ(rational::fold_continued_fraction(e), (std::pair<long long, long long>{p, q}));
    }
}

TEST(ContinuedFraction, MixedSigns) {
  const auto all = rational::mixed_continued_fractions(9, 4, 4);
  EXPECT_TRUE(std::find(all.begin(), all.end(), std::vector<int>{2, 4}) != all.end());
  EXPECT_TRUE(std::find(all.begin(), all.end(), std::vector<int>{3, -2, 2, -2}) != all.end());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(TwoBridge, Classes) {
  // 2 * 5 = 1 and 4 * 7 = 1 mod 9; 7 = -2 and 4 = -5
  EXPECT_TRUE(rational::same_knot({9, 2}, {9, 5}, false));
  EXPECT_TRUE(rational::same_knot({9, 4}, {9, 7}, false));
  EXPECT_FALSE(rational::same_knot({9, 2}, {9, 4}, false));
  EXPECT_TRUE(rational::same_knot({9, 2}, {9, 4}, true));
  EXPECT_TRUE(rational::same_knot({9, 2}, {9, 7}, true));
  EXPECT_FALSE(rational::same_knot({9, 1}, {9, 4}, true));
  EXPECT_EQ(rational::canonical({11, 5}, true), (TwoBridge{11, 2}));
  EXPECT_EQ(rational::canonical({11, 5}, false), (TwoBridge{11, 5}));
  EXPECT_THROW(rational::check_two_bridge({9, 3}), Error);
  EXPECT_THROW(rational::check_two_bridge({8, 3}), Error);
  EXPECT_EQ(rational::parse_two_bridge("9/4"), (TwoBridge{9, 4}));
}

TEST(TwoBridge, Candidates) {
  EXPECT_TRUE(same_classes(rational::partial_knot_candidates(81).knots, {{9, 1}, {9, 4}}));
  EXPECT_TRUE(same_classes(rational::partial_knot_candidates(121).knots, {{11, 1}, {11, 3}, {11, 5}}));
  const auto one = rational::partial_knot_candidates(1);
  ASSERT_EQ(one.knots.size(), 1u);
  EXPECT_TRUE(one.knots[0].is_unknot());
  const auto bad = rational::partial_knot_candidates(80);
  EXPECT_FALSE(bad.square);
  EXPECT_TRUE(bad.knots.empty());
  EXPECT_FALSE(bad.diagnostic.empty());
  EXPECT_FALSE(rational::partial_knot_candidates(4).square);
}

TEST(FourPlat, DeterminantIsP) {
  EXPECT_EQ(jones::determinant(jones::jones_plat(rational::fourplat_braid({1, 0}))), 1);
  EXPECT_EQ(jones::determinant(jones::jones_plat(rational::fourplat_braid({3, 1}))), 3);
  for (int p = 3; p <= 25; p += 2)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto w = rational::fourplat_braid({p, q});
      EXPECT_EQ(braid::plat_closure(w).components, 1);
      EXPECT_EQ(jones::determinant(jones::jones_plat(w)), p) << p << "/" << q;
    }
}

TEST(FourPlat, StevedoreMatchesReference) {
  const auto v = jones::jones_plat(rational::fourplat_braid({9, 4}));
  const auto ref = jones::jones_closure(braid::parse_braid_word("1 1 2 -1 -3 2 -3"));
  EXPECT_TRUE(v == ref || v == jones::mirror(ref));
}

TEST(FourPlat, MixedExpansionsGiveTheSameKnot) {
  for (const auto& e : rational::mixed_continued_fractions(11, 3, 4)) {
    const auto v = jones::jones_plat(rational::fourplat_from_expansion(e));
    const auto ref = jones::jones_plat(rational::fourplat_braid({11, 3}));
    EXPECT_TRUE(v == ref || v == jones::mirror(ref)) << e.size();
  }
}

TEST(Montesinos, ParseAndPrint) {
  const auto m = rational::parse_montesinos("1/9,1/2,-1/9");
  EXPECT_EQ(m, (MontesinosSpec{9, 1, 2}));
  EXPECT_EQ(m.to_string(), "1/9,1/2,-1/9");
  EXPECT_EQ(rational::parse_montesinos("4/9, 1/0, -4/9"), (MontesinosSpec{9, 4, 0}));
  EXPECT_THROW(rational::parse_montesinos("1/9,1/2,-2/9"), Error);
  EXPECT_THROW(rational::parse_montesinos("1/9"), Error);
}

TEST(Montesinos, DegenerateCases) {
  for (int n : {-2, 0, 1, 3}) {
    const auto d = rational::montesinos_diagram({1, 0, n});
    EXPECT_EQ(d.components, 1);
    EXPECT_EQ(khovanov::kh_ranks(d).ranks, rational::kh_formula({1, 0, n}, algebra::LaurentPoly(1)));
  }
  const auto d = rational::montesinos_diagram({3, 1, 0});
  EXPECT_EQ(jones::determinant(jones::jones_diagram(d)), 9);
  // 1/0 middle tangle: connected sum of K and its mirror
  const auto v = jones::jones_plat(rational::fourplat_braid({5, 2}));
  EXPECT_EQ(jones::jones_diagram(rational::montesinos_diagram({5, 2, 0})), v * jones::mirror(v));
}

TEST(KhFormula, Extrema) {
  const auto v91 = su::doubled_jones({9, 1});
  const auto v94 = su::doubled_jones({9, 4});
  EXPECT_EQ(rational::kh_formula({9, 1, 0}, v91).q_max(), 19);
  EXPECT_EQ(rational::kh_formula({9, 1, 2}, v91).q_max(), 23);
  EXPECT_EQ(rational::kh_formula({9, 1, -2}, v91).q_min(), -23);
  EXPECT_EQ(rational::kh_formula({9, 4, 0}, v94).q_max(), 13);
  EXPECT_EQ(rational::kh_formula({9, 4, 2}, v94).q_max(), 17);
  EXPECT_EQ(rational::kh_formula({1, 0, 5}, algebra::LaurentPoly(1)).ranks().size(), 2u);
}

TEST(KhFormula, CoefficientSymmetry) {
  std::mt19937 rng(41);
  for (int it = 0; it < 100; ++it) {
    std::vector<algebra::LaurentPoly::Term> t;
    const int m = 1 + static_cast<int>(rng() % 8);
    for (int i = -m; i <= m; ++i) t.emplace_back(2 * i, static_cast<int>(rng() % 9) - 4);
    t.emplace_back(2 * m, 7);
    const auto b = rational::lemma_coefficients(algebra::LaurentPoly::from_terms(t));
    for (const auto& [k, bk] : b) EXPECT_EQ(bk, b.at(-k - 1));
  }
}

TEST(KhFormula, Errors) {
  EXPECT_THROW(rational::kh_formula({3, 1, 0}, algebra::LaurentPoly::from_terms({{1, 1}})), Error);
  EXPECT_THROW(rational::kh_formula({3, 1, 0}, algebra::LaurentPoly(1)), Error);
}

TEST(KhFormula, MatchesCubeForSmallP) {
  for (int p : {3, 5})
    for (int q = 1; q < p; ++q)
      for (int n = -2; n <= 2; ++n) {
        const MontesinosSpec m{p, q, n};
        const auto formula = rational::kh_formula(m, su::doubled_jones(m.two_bridge()));
        const auto cube = khovanov::kh_ranks(rational::montesinos_diagram(m)).ranks;
        EXPECT_EQ(formula, cube) << m.to_string();
        EXPECT_EQ(rational::kh_formula({p, q, -n}, su::doubled_jones(m.two_bridge())), formula.reflected());
      }
}
