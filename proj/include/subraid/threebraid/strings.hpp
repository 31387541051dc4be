#pragma once

/**
 * @file strings.hpp
 * @brief Integer strings attached to alternating 3-braids, linear duals and
 *        the cyclic pattern test for the amphichiral family.
 *
 * The alternating form
 *
 *     (sigma_1 sigma_2)^{3t} sigma_1^{x_1} sigma_2^{-y_1} ... sigma_1^{x_n} sigma_2^{-y_n}
 *
 * has string (2^[x_1 - 1], y_1 + 2, ..., 2^[x_n - 1], y_n + 2), where 2^[m]
 * is the entry 2 repeated m times.
 */

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subraid/braid/braid_word.hpp"
#include "subraid/error.hpp"

namespace subraid::threebraid {

using IntString = std::vector<int>;

struct AlternatingForm {
  int t = 0;
  std::vector<int> x;
  std::vector<int> y;

  friend bool operator==(const AlternatingForm&, const AlternatingForm&) = default;
};

inline void check_form(const AlternatingForm& f) {
  if (f.x.empty() || f.x.size() != f.y.size()) throw Error("alternating form needs equal, nonempty x and y");
  for (std::size_t k = 0; k < f.x.size(); ++k)
    if (f.x[k] < 1 || f.y[k] < 1) throw Error("alternating form exponents must be positive");
}

inline IntString associated_string(const AlternatingForm& f) {
  check_form(f);
  IntString s;
  for (std::size_t k = 0; k < f.x.size(); ++k) {
    s.insert(s.end(), static_cast<std::size_t>(f.x[k] - 1), 2);
    s.push_back(f.y[k] + 2);
  }
  return s;
}

/// Inverse of associated_string for a given t; nullopt if s is not such a string.
inline std::optional<AlternatingForm> decode_string(const IntString& s, int t = 0) {
  AlternatingForm f;
  f.t = t;
  int twos = 0;
  for (int e : s) {
    if (e < 2) return std::nullopt;
    if (e == 2) {
      ++twos;
    } else {
      f.x.push_back(twos + 1);
      f.y.push_back(e - 2);
      twos = 0;
    }
  }
  if (twos != 0 || f.x.empty()) return std::nullopt;
  return f;
}

inline braid::BraidWord alternating_word(const AlternatingForm& f) {
  check_form(f);
  std::vector<int> w;
  const int reps = 3 * std::abs(f.t);
  for (int r = 0; r < reps; ++r) {
    if (f.t > 0) {
      w.push_back(1);
      w.push_back(2);
    } else {
      w.push_back(-2);
      w.push_back(-1);
    }
  }
  for (std::size_t k = 0; k < f.x.size(); ++k) {
    w.insert(w.end(), static_cast<std::size_t>(f.x[k]), 1);
    w.insert(w.end(), static_cast<std::size_t>(f.y[k]), -2);
  }
  return {3, std::move(w)};
}

/// Reads a B_3 word, up to cyclic rotation, as sigma_1^{x_1} sigma_2^{-y_1} ... (t = 0).
inline std::optional<AlternatingForm> read_alternating(const braid::BraidWord& w) {
  if (w.strands() != 3) return std::nullopt;
  const auto& v = w.letters();
  const std::size_t n = v.size();
  for (int e : v)
    if (e != 1 && e != -2) return std::nullopt;
  if (n == 0) return std::nullopt;
  // rotate so the word starts with a sigma_1 that follows a sigma_2^-1
  std::size_t start = n;
  for (std::size_t k = 0; k < n; ++k)
    if (v[k] == 1 && v[(k + n - 1) % n] == -2) {
      start = k;
      break;
    }
  if (start == n) return std::nullopt;
  AlternatingForm f;
  std::size_t k = 0;
  while (k < n) {
    int x = 0, y = 0;
    while (k < n && v[(start + k) % n] == 1) {
      ++x;
      ++k;
    }
    while (k < n && v[(start + k) % n] == -2) {
      ++y;
      ++k;
    }
    f.x.push_back(x);
    f.y.push_back(y);
  }
  return f;
}

inline IntString parse_int_string(const std::string& text) {
  IntString s;
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream is(cleaned);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      s.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw Error("");
    } catch (const std::exception&) {
      throw Error("cannot parse string entry '" + tok + "'");
    }
  }
  return s;
}

inline std::string to_string(const IntString& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out;
}

/**
 * Linear dual.  (2^[m]) -> (m + 1); otherwise with
 * b = (2^[m_1], 3 + n_1, ..., 2^[m_{l-1}], 3 + n_{l-1}, 2^[m_l], 2 + n_l)
 * the dual is (2 + m_1, 2^[n_1], 3 + m_2, 2^[n_2], ..., 3 + m_l, 2^[n_l]).
 */
inline IntString linear_dual(const IntString& b) {
  if (b.empty()) throw Error("linear dual of an empty string");
  for (int e : b)
    if (e < 2) throw Error("linear dual needs entries >= 2, got " + std::to_string(e));
  const bool all_twos = std::all_of(b.begin(), b.end(), [](int e) { return e == 2; });
  if (all_twos) return {static_cast<int>(b.size()) + 1};
  std::vector<int> m, n;
  int twos = 0;
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    if (b[k] == 2) {
      ++twos;
    } else {
      m.push_back(twos);
      n.push_back(b[k] - 3);
      twos = 0;
    }
  }
  m.push_back(twos);
  n.push_back(b.back() - 2);
  IntString c;
  for (std::size_t i = 0; i < m.size(); ++i) {
    c.push_back((i == 0 ? 2 : 3) + m[i]);
    c.insert(c.end(), static_cast<std::size_t>(n[i]), 2);
  }
  return c;
}

enum class Verdict { yes, no, ambiguous };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "ambiguous";
  }
}

struct FamilyBResult {
  Verdict verdict = Verdict::no;
  IntString b, c;        // witness duals when verdict is yes (or the ambiguous reading)
  IntString arrangement;  // rotation/reflection of the input that matched
};

/**
 * Does some cyclic rotation or reflection of s read as
 * (b_1 + 1, b_2, ..., b_{k-1}, b_k + 1, c_1, ..., c_l) with b, c linear duals?
 * A single-entry b (k = 1) leaves it open whether that entry carries +1 or
 * +2; such matches are reported as ambiguous unless a k >= 2 match exists.
 */
inline FamilyBResult is_family_B(const IntString& s) {
  if (s.size() > 64) throw Error("string too long for the exhaustive search");
  FamilyBResult res;
  if (s.size() < 2) return res;
  auto valid = [](const IntString& v) { return std::all_of(v.begin(), v.end(), [](int e) { return e >= 2; }); };
  std::optional<FamilyBResult> ambiguous;
  const std::size_t n = s.size();
  for (int refl = 0; refl < 2; ++refl) {
    IntString base = s;
    if (refl) std::reverse(base.begin(), base.end());
    for (std::size_t r = 0; r < n; ++r) {
      IntString rot(n);
      for (std::size_t k = 0; k < n; ++k) rot[k] = base[(k + r) % n];
      for (std::size_t k = 1; k < n; ++k) {
        IntString c(rot.begin() + static_cast<std::ptrdiff_t>(k), rot.end());
        if (!valid(c)) continue;
        if (k >= 2) {
          IntString b(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(k));
          b.front() -= 1;
          b.back() -= 1;
          if (valid(b) && linear_dual(b) == c) {
            res.verdict = Verdict::yes;
            res.b = b;
            res.c = c;
            res.arrangement = rot;
            return res;
          }
        } else if (!ambiguous) {
          for (int add : {1, 2}) {
            IntString b{rot[0] - add};
            if (valid(b) && linear_dual(b) == c) {
              ambiguous = FamilyBResult{Verdict::ambiguous, b, c, rot};
              break;
            }
          }
        }
      }
    }
  }
  if (ambiguous) return *ambiguous;
  return res;
}

}  // namespace subraid::threebraid
