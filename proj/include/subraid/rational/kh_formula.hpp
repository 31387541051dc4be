#pragma once

/**
 * @file kh_formula.hpp
 * @brief Closed-form Khovanov polynomial of K[q/p, 1/n, -q/p].
 *
 * With V(K(p/q) # -K(p/q)) = sum_{i=-m}^{m} a_i q^{2i},
 *
 *     Kh = q^-1 (1 + q^2 + (1 + t q^4) t^n q^{2n} sum_{k=-m}^{m-1} b_k t^k q^{2k})
 *
 * where b_k = (-1)^{k+1} sum_{i=k+1}^{m} a_i for k >= 0 and b_k = b_{-k-1}.
 * For p = 1 the answer is the unknot, q^-1 + q.
 */

#include <map>
#include <vector>

#include "subraid/algebra/kh_polynomial.hpp"
#include "subraid/algebra/laurent_poly.hpp"
#include "subraid/rational/montesinos.hpp"

namespace subraid::rational {

using algebra::Integer;
using algebra::KhPolynomial;
using algebra::LaurentPoly;

/// The coefficients b_{-m}, ..., b_{m-1} as a map k -> b_k.
inline std::map<int, Integer> lemma_coefficients(const LaurentPoly& v) {
  for (const auto& [e, c] : v.terms())
    if (e % 2 != 0) throw Error("expected a knot polynomial with even exponents");
  if (v.is_zero()) throw Error("zero Jones polynomial");
  const int m = v.max_degree() / 2;
  if (m < 1) throw Error("leading exponent must be positive");
  std::map<int, Integer> b;
  Integer tail = 0;
  for (int k = m - 1; k >= 0; --k) {
    tail += v.coeff(2 * (k + 1));
    b[k] = (k % 2 == 0) ? Integer(-tail) : tail;  // (-1)^{k+1}
    b[-k - 1] = b[k];
  }
  return b;
}

inline KhPolynomial kh_formula(const MontesinosSpec& m, const LaurentPoly& v) {
  check_two_bridge(m.two_bridge());
  KhPolynomial out;
  if (m.p == 1) {
    out.add(0, -1, 1);
    out.add(0, 1, 1);
    return out;
  }
  if (v.is_zero() || v.max_degree() < 2) throw Error("kh_formula needs a polynomial with a_m != 0 for some m >= 1");
  const auto b = lemma_coefficients(v);
  std::map<std::pair<int, int>, Integer> acc;
  acc[{0, -1}] += 1;
  acc[{0, 1}] += 1;
  for (const auto& [k, bk] : b) {
    acc[{m.n + k, 2 * m.n + 2 * k - 1}] += bk;
    acc[{m.n + k + 1, 2 * m.n + 2 * k + 3}] += bk;
  }
  for (const auto& [ij, r] : acc) {
    if (r < 0) throw Error("closed formula produced a negative rank at (" + std::to_string(ij.first) + "," +
                           std::to_string(ij.second) + ")");
    if (r > 0) out.add(ij.first, ij.second, static_cast<std::int64_t>(r));
  }
  return out;
}

}  // namespace subraid::rational
