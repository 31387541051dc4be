#include <gtest/gtest.h>

#include "subraid/jones/jones.hpp"
#include "subraid/khovanov/khovanov.hpp"
#include "subraid/su/knot_table.hpp"
#include "support.hpp"

using namespace subraid;
using algebra::KhPolynomial;
using algebra::LaurentPoly;
using braid::BraidWord;

namespace {

KhPolynomial kh(const BraidWord& w) { return khovanov::kh_ranks(w).ranks; }

LaurentPoly euler_target(const BraidWord& w) { return jones::unnormalized_jones(jones::jones_closure(w)); }

}  // namespace

TEST(Khovanov, Unknot) {
  KhPolynomial u;
  u.add(0, -1, 1);
  u.add(0, 1, 1);
  EXPECT_EQ(khovanov::kh_ranks(braid::PlanarDiagram{}).ranks, u);
  EXPECT_EQ(kh(BraidWord(1, {})), u);
  EXPECT_EQ(khovanov::kh_ranks(braid::standard_closure(BraidWord(2, {1}))).ranks, u);
  EXPECT_EQ(khovanov::kh_ranks(braid::standard_closure(BraidWord(2, {-1}))).ranks, u);
  const auto [qmax, qmin] = khovanov::kh_extrema(khovanov::kh_ranks(BraidWord(1, {})));
  EXPECT_EQ(qmax, 1);
  EXPECT_EQ(qmin, -1);
}

TEST(Khovanov, Trefoil) {
  const BraidWord w(2, {1, 1, 1});
  const auto r = khovanov::kh_ranks(braid::standard_closure(w));
  EXPECT_EQ(r.ranks.ranks().size(), 4u);
  EXPECT_EQ(r.ranks.euler_characteristic(), euler_target(w));
  EXPECT_TRUE(r.knot_flag);
  EXPECT_EQ(r.diagram_crossings, 3);
}

TEST(Khovanov, FigureEight) {
  const auto k = kh(BraidWord(3, {1, -2, 1, -2}));
  EXPECT_EQ(k.q_max() + k.q_min(), 0);
  EXPECT_EQ(k, k.reflected());
}

TEST(Khovanov, CensusRanks) {
  const auto t = su::KnotTable::load_csv_file(testsupport::table_path());
  int checked = 0;
  for (const auto& name : t.names()) {
    if (name == "unknot") continue;
    const auto& w = t.record(name).reference_braid;
    if (braid::simplify(w).length() > 11) continue;
    const auto k = kh(w);
    const auto& g = testsupport::golden().at(name).kh;
    EXPECT_TRUE(k == g || k == g.reflected()) << name << ": " << k.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(Khovanov, EulerCharacteristicAndMirror) {
  std::mt19937 rng(31);
  for (int it = 0; it < 150; ++it) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto w = testsupport::random_word(rng, n, static_cast<int>(rng() % 9));
    const auto k = kh(w);
    ASSERT_EQ(k.euler_characteristic(), euler_target(w)) << w.to_string();
    ASSERT_EQ(kh(w.mirrored()), k.reflected()) << w.to_string();
  }
}

TEST(Khovanov, KnotGradingsAreOdd) {
  std::mt19937 rng(32);
  int knots = 0;
  while (knots < 50) {
    const auto w = testsupport::random_word(rng, 3, 3 + static_cast<int>(rng() % 7));
    if (braid::closure_components(w) != 1) continue;
    ++knots;
    const auto k = kh(w);
    for (const auto& [ij, r] : k.ranks()) {
      EXPECT_NE(ij.second % 2, 0);
      EXPECT_GT(r, 0);
    }
  }
}

TEST(Khovanov, DiagramIndependence) {
  std::mt19937 rng(33);
  for (int it = 0; it < 30; ++it) {
    const auto w = testsupport::random_word(rng, 3, 2 + static_cast<int>(rng() % 7));
    const auto c = testsupport::random_word(rng, 3, 2);
    // conjugate and stabilize, then compute without simplification
    const auto other = (c * w * c.inverse()).embedded(4) * braid::generator(4, 3, rng() % 2 ? 1 : -1);
    const auto direct = khovanov::kh_ranks(braid::standard_closure(other)).ranks;
    EXPECT_EQ(direct, khovanov::kh_ranks(braid::standard_closure(w)).ranks) << w.to_string();
  }
}

TEST(Khovanov, Stevedore) {
  const auto k = kh(braid::parse_braid_word("2 -1 2 3 -2 1 -2 1 -3"));
  EXPECT_EQ(k.q_max() + k.q_min(), 4);
}

TEST(Khovanov, CapIsEnforced) {
  const auto d = braid::standard_closure(BraidWord(2, std::vector<int>(9, 1)));
  EXPECT_THROW(khovanov::kh_ranks(d, 8), CapExceeded);
  const auto big = braid::standard_closure(BraidWord(2, std::vector<int>(khovanov::hard_kh_limit + 1, 1)));
  EXPECT_THROW(khovanov::kh_ranks(big, 30), CapExceeded);
  try {
    khovanov::kh_ranks(d, 8);
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.crossings(), 9);
    EXPECT_NE(std::string(e.what()).find("9 crossings"), std::string::npos);
  }
  EXPECT_THROW(khovanov::kh_extrema(khovanov::KhovanovResult{}), Error);
}
