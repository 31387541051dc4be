#pragma once

/**
 * @file kh_polynomial.hpp
 * @brief Bigraded rank tables (i, j) -> rank, written as sum rank t^i q^j.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "subraid/algebra/laurent_poly.hpp"
#include "subraid/error.hpp"

namespace subraid::algebra {

class KhPolynomial {
 public:
  using Key = std::pair<int, int>;  // (homological i, quantum j)

  KhPolynomial() = default;

  /// Adds to the rank at (i, j); the result must stay nonnegative.
  void add(int i, int j, std::int64_t r) {
    if (r == 0) return;
    auto& slot = ranks_[{i, j}];
    slot += r;
    if (slot < 0) throw Error("negative rank at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (slot == 0) ranks_.erase({i, j});
  }

  std::int64_t rank(int i, int j) const {
    auto it = ranks_.find({i, j});
    return it == ranks_.end() ? 0 : it->second;
  }

  bool empty() const noexcept { return ranks_.empty(); }
  const std::map<Key, std::int64_t>& ranks() const noexcept { return ranks_; }

  int q_max() const {
    if (empty()) throw Error("q_max of an empty rank table");
    int m = ranks_.begin()->first.second;
    for (const auto& [k, r] : ranks_) m = std::max(m, k.second);
    return m;
  }
  int q_min() const {
    if (empty()) throw Error("q_min of an empty rank table");
    int m = ranks_.begin()->first.second;
    for (const auto& [k, r] : ranks_) m = std::min(m, k.second);
    return m;
  }

  std::int64_t total_rank() const {
    std::int64_t s = 0;
    for (const auto& [k, r] : ranks_) s += r;
    return s;
  }

  /// (i, j) -> (-i, -j); the table of the mirror knot.
  KhPolynomial reflected() const {
    KhPolynomial out;
    for (const auto& [k, r] : ranks_) out.ranks_[{-k.first, -k.second}] = r;
    return out;
  }

  /// Graded Euler characteristic sum (-1)^i rank q^j.
  LaurentPoly euler_characteristic() const {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [k, r] : ranks_)
      terms.emplace_back(k.second, Integer(k.first % 2 == 0 ? r : -r));
    return LaurentPoly::from_terms(terms);
  }

  /// Rows "i j rank" sorted lexicographically, one per line.
  std::string to_rows() const {
    std::ostringstream os;
    for (const auto& [k, r] : ranks_) os << k.first << ' ' << k.second << ' ' << r << '\n';
    return os.str();
  }

  /// Human form "t^i q^j" terms, e.g. "q^-1 + q^1" for the unknot.
  std::string to_string() const {
    if (empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, r] : ranks_) {
      if (!first) os << " + ";
      first = false;
      if (r != 1) os << r << ' ';
      if (k.first != 0) os << "t^" << k.first << ' ';
      os << "q^" << k.second;
    }
    return os.str();
  }

  friend bool operator==(const KhPolynomial&, const KhPolynomial&) = default;
  friend auto operator<=>(const KhPolynomial& a, const KhPolynomial& b) {
    return a.ranks_ <=> b.ranks_;
  }

 private:
  std::map<Key, std::int64_t> ranks_;
};

}  // namespace subraid::algebra
