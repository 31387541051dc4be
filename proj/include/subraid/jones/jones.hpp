#pragma once

/**
 * @file jones.hpp
 * @brief Jones polynomial in q (t = q^2), determinant and breadth.
 *
 * V(L) = (-A^3)^(-w) <D> with A = q^(-1/2), so V(unknot) = 1, the
 * right-handed trefoil is q^2 + q^6 - q^8, and knots only use even powers.
 * Links with an even number of components use odd powers; the two-component
 * unlink evaluates to -q - q^-1.
 */

#include <cstdlib>

#include "subraid/braid/closures.hpp"
#include "subraid/jones/state_sum.hpp"
#include "subraid/jones/temperley_lieb.hpp"

namespace subraid::jones {

inline constexpr int default_statesum_cap = 18;

/// Writhe normalization and the substitution A -> q^(-1/2).
inline LaurentPoly bracket_to_jones(const LaurentPoly& bracket, int writhe) {
  std::vector<LaurentPoly::Term> out;
  const bool flip = (writhe % 2) != 0;
  for (const auto& [k, c] : bracket.terms()) {
    const int e = k - 3 * writhe;
    if (e % 2 != 0) throw Error("bracket exponent of unexpected parity");
    out.emplace_back(-e / 2, flip ? Integer(-c) : c);
  }
  return LaurentPoly::from_terms(out);
}

/// Jones polynomial of the standard closure, by Temperley-Lieb transfer.
inline LaurentPoly jones_closure(const braid::BraidWord& w) {
  return bracket_to_jones(bracket_closure(w), braid::writhe(w));
}

/// Jones polynomial of the plat closure, by Temperley-Lieb transfer; even index.
inline LaurentPoly jones_plat(const braid::BraidWord& w) {
  const auto d = braid::plat_closure(w);
  return bracket_to_jones(bracket_plat(w), d.writhe());
}

/// Jones polynomial of a diagram by the exhaustive state sum.
inline LaurentPoly jones_diagram(const PlanarDiagram& d, int cap = default_statesum_cap) {
  if (d.crossing_count() > cap) throw CapExceeded("state-sum Jones", d.crossing_count(), cap);
  if (d.crossing_count() == 0 && d.free_loops == 0) return LaurentPoly(1);
  return bracket_to_jones(bracket_state_sum(d), d.writhe());
}

/// Jones polynomial of a diagram by the frontier sweep; any size.
inline LaurentPoly jones_sweep(const PlanarDiagram& d) {
  return bracket_to_jones(bracket_sweep(d), d.writhe());
}

/**
 * (q + q^-1) V(-q): the graded Euler characteristic of Khovanov homology.
 * The sign change only touches links with an even number of components; it
 * sends the k-component unlink to (q + q^-1)^k.
 */
inline LaurentPoly unnormalized_jones(const LaurentPoly& v) {
  std::vector<LaurentPoly::Term> t;
  for (const auto& [e, c] : v.terms()) t.emplace_back(e, e % 2 ? Integer(-c) : c);
  return algebra::q_plus_qinv() * LaurentPoly::from_terms(t);
}

/// q -> q^-1.
inline LaurentPoly mirror(const LaurentPoly& v) { return v.mirrored(); }

inline LaurentPoly connected_sum(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// |V(q)| at q = i.  Exponents of a link polynomial share one parity, so the value is real or imaginary.
inline Integer determinant(const LaurentPoly& v) {
  Integer re = 0, im = 0;
  for (const auto& [e, c] : v.terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      default: im -= c; break;
    }
  }
  if (re != 0 && im != 0) throw Error("polynomial mixes exponent parities");
  const Integer s = re + im;
  return s < 0 ? Integer(-s) : s;
}

inline int breadth(const LaurentPoly& v) { return v.is_zero() ? 0 : v.max_degree() - v.min_degree(); }

}  // namespace subraid::jones
