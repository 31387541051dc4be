#pragma once

/**
 * @file two_bridge.hpp
 * @brief Continued fractions, two-bridge knots K(p/q) and their 4-plat braids.
 *
 * An expansion [a_1, ..., a_k] stands for a_1 + 1/(a_2 + 1/(... + 1/a_k)).
 * The 4-plat braid of [a_1, ..., a_k] is
 *
 *     sigma_2^{a_1} sigma_1^{-a_2} sigma_2^{a_3} sigma_1^{-a_4} ...
 *
 * whose plat closure is K(p/q); e.g. [1,1,1] = 3/2 gives the trefoil.
 */

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "subraid/braid/braid_word.hpp"
#include "subraid/error.hpp"

namespace subraid::rational {

struct TwoBridge {
  int p = 1;
  int q = 0;

  std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
  bool is_unknot() const noexcept { return p == 1; }

  friend bool operator==(const TwoBridge&, const TwoBridge&) = default;
  friend auto operator<=>(const TwoBridge&, const TwoBridge&) = default;
};

/// Parses "p/q".
inline TwoBridge parse_two_bridge(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw Error("two-bridge knot must be written p/q: " + text);
  TwoBridge t;
  try {
    t.p = std::stoi(text.substr(0, slash));
    t.q = std::stoi(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw Error("cannot parse two-bridge knot: " + text);
  }
  return t;
}

inline void check_two_bridge(const TwoBridge& t) {
  if (t.p == 1 && t.q == 0) return;
  if (t.p < 1 || t.p % 2 == 0) throw Error("two-bridge knot needs odd p >= 1, got " + t.to_string());
  if (t.q <= 0 || t.q >= t.p) throw Error("two-bridge knot needs 0 < q < p, got " + t.to_string());
  if (std::gcd(t.p, t.q) != 1) throw Error("gcd(p, q) != 1 for " + t.to_string());
}

/// Regular expansion with every a_i >= 1; (1,0) gives the empty expansion.
inline std::vector<int> continued_fraction(int p, int q) {
  if (p == 1 && q == 0) return {};
  if (q <= 0 || p <= 0) throw Error("continued fraction needs 0 < q < p");
  if (std::gcd(p, q) != 1) throw Error("continued fraction needs gcd(p, q) = 1");
  std::vector<int> out;
  long long a = p, b = q;
  while (b != 0) {
    out.push_back(static_cast<int>(a / b));
    const long long r = a % b;
    a = b;
    b = r;
  }
  return out;
}

/// Folds an expansion back into (numerator, denominator) with denominator >= 0.
inline std::pair<long long, long long> fold_continued_fraction(const std::vector<int>& a) {
  if (a.empty()) return {1, 0};
  long long num = a.back(), den = 1;
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    // a_k + den/num
    const long long n2 = static_cast<long long>(a[k]) * num + den;
    den = num;
    num = n2;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

/**
 * Every expansion of p/q with nonzero integer entries of length at most
 * max_len, obtained by rounding each partial quotient down or up.  The
 * regular expansion is among them.  Output is sorted and duplicate free.
 */
inline std::vector<std::vector<int>> mixed_continued_fractions(int p, int q, std::size_t max_len) {
  std::set<std::vector<int>> found;
  std::vector<int> cur;
  auto floor_div = [](long long a, long long b) {
    long long d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
  };
  // x = num/den with den > 0
  auto rec = [&](auto&& self, long long num, long long den) -> void {
    if (cur.size() >= max_len) return;
    if (num % den == 0) {
      const long long v = num / den;
      if (v != 0) {
        cur.push_back(static_cast<int>(v));
        found.insert(cur);
        cur.pop_back();
      }
      return;
    }
    const long long fl = floor_div(num, den);
    for (long long a : {fl, fl + 1}) {
      if (a == 0) continue;
      // x - a = (num - a*den)/den ; next = den/(num - a*den)
      long long n2 = den, d2 = num - a * den;
      if (d2 < 0) {
        n2 = -n2;
        d2 = -d2;
      }
      cur.push_back(static_cast<int>(a));
      self(self, n2, d2);
      cur.pop_back();
    }
  };
  if (p == 1 && q == 0) return {{}};
  rec(rec, p, q);
  return {found.begin(), found.end()};
}

/// Inverse of q modulo p (p > 1, gcd 1).
inline int inverse_mod(int q, int p) {
  long long t = 0, nt = 1, r = p, nr = ((q % p) + p) % p;
  while (nr != 0) {
    const long long k = r / nr;
    t -= k * nt;
    std::swap(t, nt);
    r -= k * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw Error("no inverse of " + std::to_string(q) + " mod " + std::to_string(p));
  return static_cast<int>(((t % p) + p) % p);
}

/// Equivalence class of q: {q, q^-1} mod p, plus {-q, -q^-1} when mirrors are identified.
inline std::vector<int> two_bridge_class(const TwoBridge& t, bool up_to_mirror) {
  check_two_bridge(t);
  if (t.is_unknot()) return {0};
  const int qi = inverse_mod(t.q, t.p);
  std::set<int> s{t.q, qi};
  if (up_to_mirror) {
    s.insert(t.p - t.q);
    s.insert(t.p - qi);
  }
  return {s.begin(), s.end()};
}

/// Smallest member of the class.
inline TwoBridge canonical(const TwoBridge& t, bool up_to_mirror) {
  return {t.p, two_bridge_class(t, up_to_mirror).front()};
}

inline bool same_knot(const TwoBridge& a, const TwoBridge& b, bool up_to_mirror) {
  return a.p == b.p && canonical(a, up_to_mirror) == canonical(b, up_to_mirror);
}

struct CandidateSet {
  std::vector<TwoBridge> knots;  // canonical up to mirror, sorted
  bool square = true;
  std::string diagnostic;
};

/**
 * Two-bridge knots K with det(K)^2 = det: all classes p/q with p = sqrt(det),
 * up to q ~ q^-1 and mirror.  A non-square determinant gives an empty set
 * with a diagnostic.
 */
inline CandidateSet partial_knot_candidates(long long det) {
  CandidateSet out;
  if (det < 1) throw Error("determinant must be positive");
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(det))));
  while (r * r > det) --r;
  while ((r + 1) * (r + 1) <= det) ++r;
  if (r * r != det) {
    out.square = false;
    out.diagnostic = std::to_string(det) + " is not a perfect square";
    return out;
  }
  if (r % 2 == 0) {
    out.square = false;
    out.diagnostic = "square root " + std::to_string(r) + " is even, so no knot has this determinant";
    return out;
  }
  const int p = static_cast<int>(r);
  if (p == 1) {
    out.knots.push_back({1, 0});
    return out;
  }
  std::set<TwoBridge> s;
  for (int q = 1; q < p; ++q)
    if (std::gcd(p, q) == 1) s.insert(canonical({p, q}, true));
  out.knots.assign(s.begin(), s.end());
  return out;
}

/**
 * Same value, odd length: [.., a] -> [.., a - 1, 1] (or [.., a + 1, -1]),
 * folding a zero entry into its neighbour.  A sigma_1 block next to the top
 * caps would be undone by Reidemeister I, so 4-plats use odd lengths.
 */
inline std::vector<int> odd_length_expansion(std::vector<int> a) {
  if (a.size() % 2 == 1 || a.empty()) return a;
  const int last = a.back();
  const int unit = last > 0 ? 1 : -1;
  if (last - unit != 0) {
    a.back() = last - unit;
    a.push_back(unit);
  } else {
    // [.., b, unit] -> [.., b + unit]
    a.pop_back();
    a.back() += unit;
  }
  return a;
}

/// 4-plat braid from an expansion (entries may have either sign).
inline braid::BraidWord fourplat_from_expansion(const std::vector<int>& expansion) {
  const std::vector<int> a = odd_length_expansion(expansion);
  std::vector<int> letters;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int gen = k % 2 == 0 ? 2 : 1;
    const int sign = (k % 2 == 0 ? 1 : -1) * (a[k] > 0 ? 1 : -1);
    for (int r = 0; r < std::abs(a[k]); ++r) letters.push_back(sign * gen);
  }
  return {4, std::move(letters)};
}

/// gamma in B_4 whose plat closure is K(p/q).
inline braid::BraidWord fourplat_braid(const TwoBridge& t) {
  check_two_bridge(t);
  if (t.is_unknot()) return {4, {2}};
  return fourplat_from_expansion(continued_fraction(t.p, t.q));
}

}  // namespace subraid::rational
