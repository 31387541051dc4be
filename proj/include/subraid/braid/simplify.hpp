#pragma once

/**
 * @file simplify.hpp
 * @brief Closure-preserving braid word reduction: free and cyclic
 *        cancellation plus Markov destabilization.
 */

#include <cstdlib>
#include <vector>

#include "subraid/braid/braid_word.hpp"

namespace subraid::braid {

/// Cancels adjacent x x^-1 pairs.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  for (int e : w.letters()) {
    if (!out.empty() && out.back() == -e) out.pop_back();
    else out.push_back(e);
  }
  return {w.strands(), std::move(out)};
}

/// Free reduction followed by cancelling the first letter against the last.
inline BraidWord cyclic_reduce(const BraidWord& w) {
  std::vector<int> v = free_reduce(w).letters();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
    ++lo;
    --hi;
  }
  return {w.strands(), std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(lo),
                                        v.begin() + static_cast<std::ptrdiff_t>(hi))};
}

namespace detail {

inline int count_generator(const std::vector<int>& v, int g) {
  int n = 0;
  for (int e : v) n += std::abs(e) == g;
  return n;
}

/// Rotates v so that the single occurrence of generator g comes last, then drops it.
inline std::vector<int> drop_single(const std::vector<int>& v, int g) {
  std::size_t at = 0;
  while (std::abs(v[at]) != g) ++at;
  std::vector<int> out(v.begin() + static_cast<std::ptrdiff_t>(at) + 1, v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(at));
  return out;
}

}  // namespace detail

/**
 * Reduces until no rule applies: cyclic free reduction, and removal of
 * sigma_{n-1}^{+-1} (or sigma_1^{+-1}, shifting indices down) when it occurs
 * exactly once.  The closure's isotopy type is unchanged.
 */
inline BraidWord simplify(const BraidWord& w) {
  BraidWord cur = cyclic_reduce(w);
  for (;;) {
    const int n = cur.strands();
    if (n < 2) return cur;
    const auto& v = cur.letters();
    if (detail::count_generator(v, n - 1) == 1) {
      cur = cyclic_reduce(BraidWord(n - 1, detail::drop_single(v, n - 1)));
      continue;
    }
    if (n >= 3 && detail::count_generator(v, 1) == 1) {
      std::vector<int> rest = detail::drop_single(v, 1);
      for (int& e : rest) e = e > 0 ? e - 1 : e + 1;
      cur = cyclic_reduce(BraidWord(n - 1, std::move(rest)));
      continue;
    }
    return cur;
  }
}

}  // namespace subraid::braid
