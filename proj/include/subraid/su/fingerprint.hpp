#pragma once

/**
 * @file fingerprint.hpp
 * @brief Mirror-canonical identification keys built from det, Jones and,
 *        when the diagram is small enough, Khovanov ranks.
 */

#include <optional>
#include <string>

#include "subraid/jones/jones.hpp"
#include "subraid/khovanov/khovanov.hpp"

namespace subraid::su {

using algebra::Integer;
using braid::BraidWord;
using algebra::KhPolynomial;
using algebra::LaurentPoly;

struct Fingerprint {
  Integer det = 1;
  LaurentPoly jones = LaurentPoly(1);  // min of V and its mirror
  std::optional<KhPolynomial> kh;      // reflected along with the Jones choice
  int crossings = 0;                   // of the diagram actually used

  /// Same det and Jones; Kh compared only when both sides have it.
  bool matches(const Fingerprint& o) const {
    if (det != o.det || jones != o.jones) return false;
    if (kh && o.kh) return *kh == *o.kh;
    return true;
  }

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.det == b.det && a.jones == b.jones && a.kh == b.kh;
  }
};

namespace detail {

inline Fingerprint canonicalize(const LaurentPoly& v, std::optional<KhPolynomial> kh, int crossings) {
  Fingerprint f;
  f.crossings = crossings;
  f.det = jones::determinant(v);
  const LaurentPoly mv = jones::mirror(v);
  f.jones = std::min(v, mv);
  if (kh) {
    if (v == mv) kh = std::min(*kh, kh->reflected());
    else if (f.jones != v) kh = kh->reflected();
  }
  f.kh = std::move(kh);
  return f;
}

inline std::optional<KhPolynomial> kh_if_small(const braid::PlanarDiagram& d, int kh_cap) {
  if (kh_cap <= 0 || d.crossing_count() > kh_cap) return std::nullopt;
  return khovanov::kh_ranks(d, kh_cap).ranks;
}

}  // namespace detail

/// Fingerprint of any diagram; Kh attached when crossings <= kh_cap.
inline Fingerprint fingerprint(const braid::PlanarDiagram& d, int kh_cap = khovanov::default_kh_cap) {
  return detail::canonicalize(jones::jones_sweep(d), detail::kh_if_small(d, kh_cap), d.crossing_count());
}

/// Fingerprint of a braid closure; the word is simplified first.
inline Fingerprint fingerprint(const braid::BraidWord& w, int kh_cap = khovanov::default_kh_cap) {
  const braid::BraidWord s = braid::simplify(w);
  const auto d = braid::standard_closure(s);
  return detail::canonicalize(jones::jones_closure(s), detail::kh_if_small(d, kh_cap), d.crossing_count());
}

/// Det and Jones only.
inline Fingerprint jones_fingerprint(const braid::BraidWord& w) {
  const braid::BraidWord s = braid::simplify(w);
  return detail::canonicalize(jones::jones_closure(s), std::nullopt, static_cast<int>(s.length()));
}

}  // namespace subraid::su
