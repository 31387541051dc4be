#include <gtest/gtest.h>

#include "subraid/jones/jones.hpp"
#include "subraid/rational/two_bridge.hpp"
#include "subraid/su/knot_table.hpp"
#include "support.hpp"

using namespace subraid;
using algebra::LaurentPoly;
using braid::BraidWord;

namespace {
LaurentPoly P(std::vector<LaurentPoly::Term> t) { return LaurentPoly::from_terms(t); }
}  // namespace

TEST(Jones, Trefoil) {
  const BraidWord w(2, {1, 1, 1});
  const auto v = P({{2, 1}, {6, 1}, {8, -1}});
  EXPECT_EQ(jones::jones_closure(w), v);
  EXPECT_EQ(jones::jones_diagram(braid::standard_closure(w)), v);
  EXPECT_EQ(jones::jones_sweep(braid::standard_closure(w)), v);
  EXPECT_EQ(jones::jones_closure(w.mirrored()), v.mirrored());
  EXPECT_EQ(jones::determinant(v), 3);
}

TEST(Jones, UnknotAndUnlink) {
  EXPECT_EQ(jones::jones_closure(BraidWord(1, {})), LaurentPoly(1));
  EXPECT_EQ(jones::jones_closure(BraidWord(2, {1})), LaurentPoly(1));
  EXPECT_EQ(jones::jones_diagram(braid::PlanarDiagram{}), LaurentPoly(1));
  // two-component unlink in this normalization
  EXPECT_EQ(jones::jones_closure(BraidWord(2, {})), P({{-1, -1}, {1, -1}}));
  EXPECT_EQ(jones::determinant(jones::jones_closure(BraidWord(2, {}))), 0);
  // Hopf link
  EXPECT_EQ(jones::determinant(jones::jones_closure(BraidWord(2, {1, 1}))), 2);
}

TEST(Jones, BreadthOfDoubledTrefoil) {
  const auto v = jones::jones_closure(BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(jones::breadth(jones::connected_sum(v, jones::mirror(v))), 12);
  EXPECT_EQ(jones::breadth(LaurentPoly(1)), 0);
  EXPECT_EQ(jones::breadth(jones::mirror(v)), jones::breadth(v));
}

TEST(Jones, CensusValues) {
  const auto t = su::KnotTable::load_csv_file(testsupport::table_path());
  for (const auto& name : t.names()) {
    if (name == "unknot") continue;
    const auto& g = testsupport::golden().at(name);
    const auto v = jones::jones_closure(t.record(name).reference_braid);
    EXPECT_TRUE(v == g.jones || v == g.jones.mirrored()) << name << ": " << v.to_string();
  }
}

TEST(Jones, TemperleyLiebAgreesWithStateSum) {
  std::mt19937 rng(21);
  for (int it = 0; it < 200; ++it) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto w = testsupport::random_word(rng, n, static_cast<int>(rng() % 13));
    const auto d = braid::standard_closure(w);
    const auto v = jones::jones_closure(w);
    ASSERT_EQ(v, jones::jones_diagram(d)) << w.to_string();
    ASSERT_EQ(v, jones::jones_sweep(d)) << w.to_string();
  }
}

TEST(Jones, PlatAgreesWithStateSum) {
  std::mt19937 rng(22);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 * (1 + static_cast<int>(rng() % 3));
    const auto w = testsupport::random_word(rng, n, static_cast<int>(rng() % 12));
    ASSERT_EQ(jones::jones_plat(w), jones::jones_diagram(braid::plat_closure(w))) << w.to_string();
  }
}

TEST(Jones, ConjugationAndStabilization) {
  std::mt19937 rng(23);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto w = testsupport::random_word(rng, n, static_cast<int>(rng() % 10));
    const auto c = testsupport::random_word(rng, n, 1 + static_cast<int>(rng() % 3));
    const auto v = jones::jones_closure(w);
    EXPECT_EQ(jones::jones_closure(c * w * c.inverse()), v);
    const int sign = rng() % 2 ? 1 : -1;
    EXPECT_EQ(jones::jones_closure(w.embedded(n + 1) * braid::generator(n + 1, n, sign)), v);
  }
}

TEST(Jones, MirrorIsSignFlip) {
  std::mt19937 rng(24);
  for (int it = 0; it < 100; ++it) {
    const auto w = testsupport::random_word(rng, 2 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 12));
    EXPECT_EQ(jones::jones_closure(w.mirrored()), jones::mirror(jones::jones_closure(w)));
  }
}

TEST(Jones, ConnectedSumDiagram) {
  std::mt19937 rng(25);
  int done = 0;
  while (done < 40) {
    const auto a = testsupport::random_word(rng, 2 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 5));
    const auto b = testsupport::random_word(rng, 2 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 5));
    if (braid::closure_components(a) != 1 || braid::closure_components(b) != 1) continue;
    ++done;
    const auto d = braid::connected_sum(braid::standard_closure(a), braid::standard_closure(b));
    EXPECT_EQ(jones::jones_diagram(d), jones::connected_sum(jones::jones_closure(a), jones::jones_closure(b)));
  }
}

TEST(Jones, AlternatingTwoBridgeBreadth) {
  // regular continued fractions give reduced alternating 4-plats
  for (int p = 3; p <= 25; p += 2)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto a = rational::continued_fraction(p, q);
      int c = 0;
      for (int x : a) c += x;
      const auto v = jones::jones_plat(rational::fourplat_braid({p, q}));
      EXPECT_EQ(jones::breadth(v), 2 * c) << p << "/" << q;
    }
}

TEST(Jones, StateSumCap) {
  const auto d = braid::standard_closure(BraidWord(2, std::vector<int>(20, 1)));
  EXPECT_THROW(jones::jones_diagram(d), CapExceeded);
  EXPECT_EQ(jones::jones_sweep(d), jones::jones_closure(BraidWord(2, std::vector<int>(20, 1))));
}

TEST(Jones, DeterminantNeedsOneParity) {
  EXPECT_THROW(jones::determinant(P({{0, 1}, {1, 1}})), Error);
}
