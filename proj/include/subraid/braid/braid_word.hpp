#pragma once

/**
 * @file braid_word.hpp
 * @brief Words in the braid group B_n.
 *
 * A letter e > 0 is the generator sigma_e (a positive crossing), e < 0 its
 * inverse.  Strands are numbered 1..n from the left.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subraid/error.hpp"

namespace subraid::braid {

class BraidWord {
 public:
  BraidWord() = default;

  /// Throws if some |letter| is zero or >= strands.
  BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw Error("braid index must be at least 1");
    for (int e : letters_)
      if (e == 0 || std::abs(e) >= strands_)
        throw Error("letter " + std::to_string(e) + " out of range for B_" + std::to_string(strands_));
  }

  /// Strand count inferred as max|letter| + 1.
  static BraidWord inferred(std::vector<int> letters) {
    int n = 1;
    for (int e : letters) n = std::max(n, std::abs(e) + 1);
    return BraidWord(n, std::move(letters));
  }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& e : out) e = -e;
    return {strands_, std::move(out)};
  }

  /// Every crossing switched; the closure is the mirror image.
  BraidWord mirrored() const {
    std::vector<int> out = letters_;
    for (int& e : out) e = -e;
    return {strands_, std::move(out)};
  }

  /// Same word viewed in B_n for a larger n.
  BraidWord embedded(int strands) const {
    if (strands < strands_) throw Error("cannot embed B_" + std::to_string(strands_) +
                                        " into B_" + std::to_string(strands));
    return {strands, letters_};
  }

  /// Indices shifted by k (sigma_i -> sigma_{i+k}) in B_{n+k}.
  BraidWord shifted(int k) const {
    std::vector<int> out = letters_;
    for (int& e : out) e = e > 0 ? e + k : e - k;
    return {strands_ + k, std::move(out)};
  }

  /// Generator swap sigma_i <-> sigma_{n-i}.
  BraidWord flipped() const {
    std::vector<int> out = letters_;
    for (int& e : out) e = e > 0 ? strands_ - e : -(strands_ + e);
    return {strands_, std::move(out)};
  }

  BraidWord& operator*=(const BraidWord& o) {
    if (o.strands_ != strands_) throw Error("concatenating braids of different index");
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

  /// Whitespace-separated signed integers, e.g. "2 -1 2".
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < letters_.size(); ++k) os << (k ? " " : "") << letters_[k];
    return os.str();
  }

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Generator letter sigma_i^sign as a one-letter word.
inline BraidWord generator(int strands, int i, int sign = 1) {
  return BraidWord(strands, {sign > 0 ? i : -i});
}

/**
 * Parse a braid word.  Signed integers separated by whitespace or commas,
 * optionally bracketed ("[1,-2,1]").  With `compact` set, every digit is one
 * letter and '-' inverts the digit after it, so "111-21" is the table
 * notation 1 1 1 -2 1.  The strand count defaults to max|letter| + 1.
 */
inline BraidWord parse_braid_word(const std::string& text, std::optional<int> strands = std::nullopt,
                                  bool compact = false) {
  std::vector<int> letters;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ',' || ch == '[' || ch == ']' || ch == '{' || ch == '}') ? ' ' : ch;
  std::istringstream is(cleaned);
  std::string tok;
  while (is >> tok) {
    if (compact) {
      int sign = 1;
      for (char c : tok) {
        if (c == '-') {
          sign = -sign;
        } else if (std::isdigit(static_cast<unsigned char>(c)) && c != '0') {
          letters.push_back(sign * (c - '0'));
          sign = 1;
        } else {
          throw Error("cannot parse compact braid token '" + tok + "'");
        }
      }
      continue;
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error("cannot parse braid token '" + tok + "'");
    }
    if (used != tok.size()) throw Error("cannot parse braid token '" + tok + "'");
    if (v == 0) throw Error("braid letter 0 is not a generator");
    letters.push_back(v);
  }
  if (strands) return BraidWord(*strands, std::move(letters));
  return BraidWord::inferred(std::move(letters));
}

/// A permutation of {0..n-1}: perm[k] is where the strand starting at position k ends.
using Permutation = std::vector<int>;

/// Underlying permutation of the braid, strands tracked bottom to top.
inline Permutation permutation(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> at(static_cast<std::size_t>(n));  // at[pos] = starting strand there
  std::iota(at.begin(), at.end(), 0);
  for (int e : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(e) - 1);
    std::swap(at[i], at[i + 1]);
  }
  Permutation perm(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) perm[static_cast<std::size_t>(at[static_cast<std::size_t>(pos)])] = pos;
  return perm;
}

/// "p then q": the permutation of a concatenated braid a*b is compose(perm(a), perm(b)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = q[static_cast<std::size_t>(p[k])];
  return r;
}

inline int cycle_count(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (std::size_t x = k; !seen[x]; x = static_cast<std::size_t>(p[x])) seen[x] = 1;
  }
  return cycles;
}

/// Number of components of the standard closure.
inline int closure_components(const BraidWord& w) { return cycle_count(permutation(w)); }

inline int writhe(const BraidWord& w) {
  int s = 0;
  for (int e : w.letters()) s += e > 0 ? 1 : -1;
  return s;
}

}  // namespace subraid::braid
