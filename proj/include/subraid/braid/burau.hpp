#pragma once

/**
 * @file burau.hpp
 * @brief Reduced Burau representation of B_3, faithful on B_3.
 *
 *   sigma_1 -> [[-t, 1], [0, 1]]      sigma_2 -> [[1, 0], [t, -t]]
 *
 * Entries are Laurent polynomials in t (stored in the q variable of
 * LaurentPoly).  Two words are equal in B_3 iff their matrices agree.
 */

#include <array>
#include <cstdlib>

#include "subraid/algebra/laurent_poly.hpp"
#include "subraid/braid/braid_word.hpp"

namespace subraid::braid {

using algebra::LaurentPoly;

struct BurauMatrix {
  std::array<std::array<LaurentPoly, 2>, 2> m{};

  static BurauMatrix identity() {
    BurauMatrix r;
    r.m[0][0] = LaurentPoly(1);
    r.m[1][1] = LaurentPoly(1);
    return r;
  }

  LaurentPoly determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
    BurauMatrix r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
  }
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

/// Image of a single letter of B_3.
inline BurauMatrix burau3_letter(int e) {
  const LaurentPoly t = LaurentPoly::monomial(1, 1), tinv = LaurentPoly::monomial(1, -1);
  BurauMatrix r;
  switch (e) {
    case 1:
      r.m = {{{-t, LaurentPoly(1)}, {LaurentPoly(), LaurentPoly(1)}}};
      break;
    case -1:  // inverse of [[-t,1],[0,1]] is [[-t^-1, t^-1],[0,1]]
      r.m = {{{-tinv, tinv}, {LaurentPoly(), LaurentPoly(1)}}};
      break;
    case 2:
      r.m = {{{LaurentPoly(1), LaurentPoly()}, {t, -t}}};
      break;
    case -2:  // inverse of [[1,0],[t,-t]] is [[1,0],[1,-t^-1]]
      r.m = {{{LaurentPoly(1), LaurentPoly()}, {LaurentPoly(1), -tinv}}};
      break;
    default:
      throw Error("letter " + std::to_string(e) + " is not a generator of B_3");
  }
  return r;
}

inline BurauMatrix burau3(const BraidWord& w) {
  if (w.strands() != 3) throw Error("reduced Burau word equality is implemented for B_3 only");
  BurauMatrix r = BurauMatrix::identity();
  for (int e : w.letters()) r = r * burau3_letter(e);
  return r;
}

/// True iff a and b are the same element of B_3.
inline bool burau3_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != 3 || b.strands() != 3) throw Error("burau3_equal needs words in B_3");
  return burau3(a) == burau3(b);
}

}  // namespace subraid::braid
