#pragma once

/**
 * @file family.hpp
 * @brief The two braided families of finite-order 3-braid knots.
 *
 * Family A words are gamma sigma_2^{e_1} gamma^-1 sigma_2^{e_2}; family B
 * words are alternating with a cyclically matching string (strings.hpp).
 */

#include <optional>

#include "subraid/braid/burau.hpp"
#include "subraid/threebraid/strings.hpp"

namespace subraid::threebraid {

struct FamilyAWord {
  braid::BraidWord word;
  bool quasipositive = false;
};

inline FamilyAWord family_A_construct(const braid::BraidWord& gamma, int eps1, int eps2) {
  if (gamma.strands() != 3) throw Error("family A needs gamma in B_3");
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1)) throw Error("signs must be +1 or -1");
  braid::BraidWord w = gamma * braid::generator(3, 2, eps1) * gamma.inverse() * braid::generator(3, 2, eps2);
  return {w, eps1 == 1 && eps2 == 1};
}

/// sigma_1 <-> sigma_2
inline braid::BraidWord bar(const braid::BraidWord& w) {
  if (w.strands() != 3) throw Error("bar map is defined on B_3");
  return w.flipped();
}

/// Delta = sigma_1 sigma_2 sigma_1
inline braid::BraidWord garside3() { return {3, {1, 2, 1}}; }

/**
 * Checks Delta^-2 s1 bar(z) s1^2 z^-1 s1 == s2^-1 g s2^-1 g^-1 in B_3 with
 * g = s1^-1 z s1^-1.
 */
inline bool verify_family1_rewrite(const braid::BraidWord& zeta) {
  if (zeta.strands() != 3) throw Error("verify_family1_rewrite needs zeta in B_3");
  const braid::BraidWord s1 = braid::generator(3, 1), s2 = braid::generator(3, 2);
  const braid::BraidWord dinv = garside3().inverse();
  const braid::BraidWord lhs = dinv * dinv * s1 * bar(zeta) * s1 * s1 * zeta.inverse() * s1;
  const braid::BraidWord gamma = s1.inverse() * zeta * s1.inverse();
  const braid::BraidWord rhs = s2.inverse() * gamma * s2.inverse() * gamma.inverse();
  return braid::burau3_equal(lhs, rhs);
}

/**
 * Recognizes a B_3 word, up to cyclic rotation, as gamma s2^{e1} gamma^-1 s2^{e2}
 * letter for letter.  Returns gamma and the signs.
 */
struct FamilyAMatch {
  braid::BraidWord gamma;
  int eps1 = 1, eps2 = 1;
};

inline std::optional<FamilyAMatch> read_family_A(const braid::BraidWord& w) {
  if (w.strands() != 3) return std::nullopt;
  const auto& v = w.letters();
  const std::size_t n = v.size();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  const std::size_t g = (n - 2) / 2;
  for (std::size_t r = 0; r < n; ++r) {
    auto at = [&](std::size_t k) { return v[(k + r) % n]; };
    if (std::abs(at(g)) != 2 || std::abs(at(n - 1)) != 2) continue;
    bool ok = true;
    for (std::size_t k = 0; k < g && ok; ++k) ok = at(g + 1 + k) == -at(g - 1 - k);
    if (!ok) continue;
    std::vector<int> gamma;
    for (std::size_t k = 0; k < g; ++k) gamma.push_back(at(k));
    return FamilyAMatch{braid::BraidWord(3, gamma), at(g) > 0 ? 1 : -1, at(n - 1) > 0 ? 1 : -1};
  }
  return std::nullopt;
}

}  // namespace subraid::threebraid
