#pragma once

/**
 * @file dense_poly.hpp
 * @brief Fixed-window dense Laurent polynomials used as accumulators inside
 *        the bracket engines.  Exponent e lives at index e + offset.
 */

#include <cstdint>
#include <vector>

#include "subraid/algebra/integer.hpp"
#include "subraid/algebra/laurent_poly.hpp"
#include "subraid/algebra/sparse_rank.hpp"

namespace subraid::jones {

using algebra::Integer;
using algebra::LaurentPoly;

namespace detail {

template <class T>
struct Window {
  int offset = 0;  // index of exponent 0
  int size = 0;

  Window() = default;
  explicit Window(int radius) : offset(radius), size(2 * radius + 1) {}

  std::vector<T> zero() const { return std::vector<T>(static_cast<std::size_t>(size), T(0)); }
};

template <class T>
inline T checked_add(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw algebra::detail::Overflow{};
    return r;
  } else {
    return a + b;
  }
}

/// dst += src * A^shift
template <class T>
inline void add_shifted(std::vector<T>& dst, const std::vector<T>& src, int shift) {
  const int n = static_cast<int>(src.size());
  for (int k = 0; k < n; ++k) {
    const T& v = src[static_cast<std::size_t>(k)];
    if (v == 0) continue;
    auto& slot = dst.at(static_cast<std::size_t>(k + shift));
    slot = checked_add(slot, v);
  }
}

/// dst += src * delta^loops * A^shift with delta = -A^2 - A^-2.
template <class T>
inline void add_with_loops(std::vector<T>& dst, const std::vector<T>& src, int shift, int loops,
                           std::vector<T>& tmp_a, std::vector<T>& tmp_b) {
  if (loops == 0) {
    add_shifted(dst, src, shift);
    return;
  }
  tmp_a = src;
  for (int l = 0; l < loops; ++l) {
    tmp_b.assign(tmp_a.size(), T(0));
    const int n = static_cast<int>(tmp_a.size());
    for (int k = 0; k < n; ++k) {
      const T& v = tmp_a[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      auto& hi = tmp_b.at(static_cast<std::size_t>(k + 2));
      auto& lo = tmp_b.at(static_cast<std::size_t>(k - 2));
      hi = checked_add(hi, T(-v));
      lo = checked_add(lo, T(-v));
    }
    tmp_a.swap(tmp_b);
  }
  add_shifted(dst, tmp_a, shift);
}

template <class T>
inline bool all_zero(const std::vector<T>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

template <class T>
inline LaurentPoly to_laurent(const std::vector<T>& v, int offset) {
  std::vector<Integer> c(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) c[k] = Integer(v[k]);
  return LaurentPoly::from_dense(-offset, std::move(c));
}

inline LaurentPoly delta_poly() { return LaurentPoly::from_terms({{-2, -1}, {2, -1}}); }

inline LaurentPoly delta_power(int k) { return delta_poly().pow(static_cast<unsigned>(k)); }

/// Exact quotient p / delta; throws if delta does not divide p.
inline LaurentPoly divide_by_delta(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  // p = -A^-2 (A^4 + 1) r  =>  r = -A^2 p / (A^4 + 1)
  const int lo = p.min_degree(), hi = p.max_degree();
  std::vector<Integer> rem(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) rem[static_cast<std::size_t>(e - lo)] = p.coeff(e);
  std::vector<Integer> quot(rem.size(), Integer(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= 4; --k) {
    const Integer c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - 4)] = c;
    rem[static_cast<std::size_t>(k)] = 0;
    rem[static_cast<std::size_t>(k - 4)] -= c;
  }
  for (const auto& c : rem)
    if (c != 0) throw Error("bracket value not divisible by the loop factor");
  for (auto& c : quot) c = -c;
  return LaurentPoly::from_dense(lo + 2, std::move(quot));
}

/// Largest word length whose bracket coefficients provably fit 64 bits:
/// each letter at most triples the l1 norm, and the closure adds 2^strands.
inline bool fits_int64_bound(int letters, int extra_bits) {
  return letters * 1.585 + extra_bits + 2 < 62.0;
}

}  // namespace detail
}  // namespace subraid::jones
