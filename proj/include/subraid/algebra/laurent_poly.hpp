#pragma once

/**
 * @file laurent_poly.hpp
 * @brief Exact integer Laurent polynomials in one variable q.
 *
 * Coefficients are stored densely between the lowest and highest nonzero
 * exponent; both end coefficients are always nonzero, and the zero
 * polynomial has no storage at all.  Every operation is exact.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subraid/algebra/integer.hpp"
#include "subraid/error.hpp"

namespace subraid::algebra {

class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(const Integer& c) {  // NOLINT: implicit constant polynomial
    if (c != 0) coeffs_.push_back(c);
  }
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT

  static LaurentPoly monomial(const Integer& c, int exponent) {
    LaurentPoly p(c);
    p.low_ = p.coeffs_.empty() ? 0 : exponent;
    return p;
  }

  /// Build from (exponent, coefficient) terms; repeated exponents are summed.
  static LaurentPoly from_terms(const std::vector<Term>& terms) {
    std::map<int, Integer> m;
    for (const auto& [e, c] : terms) m[e] += c;
    LaurentPoly p;
    if (m.empty()) return p;
    p.low_ = m.begin()->first;
    p.coeffs_.assign(static_cast<std::size_t>(m.rbegin()->first - p.low_ + 1), Integer(0));
    for (const auto& [e, c] : m) p.coeffs_[static_cast<std::size_t>(e - p.low_)] = c;
    p.normalize();
    return p;
  }

  /// Dense constructor: coefficient of q^(low + k) is coeffs[k].
  static LaurentPoly from_dense(int low, std::vector<Integer> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  int min_degree() const {
    if (is_zero()) throw Error("min_degree of the zero polynomial");
    return low_;
  }
  int max_degree() const {
    if (is_zero()) throw Error("max_degree of the zero polynomial");
    return low_ + static_cast<int>(coeffs_.size()) - 1;
  }

  Integer coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > max_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }

  /// Nonzero terms in increasing exponent order.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
  }

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  /// Substitute q -> q^-1.
  LaurentPoly mirrored() const {
    if (is_zero()) return {};
    LaurentPoly p;
    p.low_ = -max_degree();
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, -1); }

  LaurentPoly& operator*=(const Integer& c) {
    if (c == 0) {
      coeffs_.clear();
      low_ = 0;
    } else {
      for (auto& x : coeffs_) x *= c;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Integer(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (b.coeffs_[j] != 0) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.normalize();
    return p;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly result(1), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Total order: lexicographic on the increasing list of (exponent, coefficient).
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    const auto ta = a.terms(), tb = b.terms();
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (ta[k].first != tb[k].first) return ta[k].first <=> tb[k].first;
      if (ta[k].second != tb[k].second)
        return ta[k].second < tb[k].second ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    return ta.size() <=> tb.size();
  }

  /// Text form "c q^e + c q^e - c q^e" in increasing exponent order; "0" for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms()) {
      const bool neg = c < 0;
      const Integer mag = neg ? Integer(-c) : c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      out += mag.str() + " q^" + std::to_string(e);
      first = false;
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(low_);
    for (const auto& c : coeffs_)
      h = h * 1000003u ^ std::hash<std::string>{}(c.str());
    return h;
  }

 private:
  LaurentPoly& accumulate(const LaurentPoly& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      if (sign < 0) *this *= Integer(-1);
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(max_degree(), o.max_degree());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      c[static_cast<std::size_t>(low_ - lo) + k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      auto& slot = c[static_cast<std::size_t>(o.low_ - lo) + k];
      if (sign > 0) slot += o.coeffs_[k];
      else slot -= o.coeffs_[k];
    }
    low_ = lo;
    coeffs_ = std::move(c);
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
      coeffs_ = std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                     coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    }
    low_ += static_cast<int>(first);
  }

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Exact product; a thin name for the ring multiplication.
inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// The polynomial q + q^-1.
inline LaurentPoly q_plus_qinv() { return LaurentPoly::from_terms({{-1, 1}, {1, 1}}); }

/// Parse the text form produced by LaurentPoly::to_string.
inline LaurentPoly parse_laurent(const std::string& text) {
  std::vector<LaurentPoly::Term> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "0") return {};
  int sign = 1;
  while (pos < text.size()) {
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw Error("malformed polynomial: " + text);
    Integer c(text.substr(start, pos - start));
    skip_ws();
    if (text.compare(pos, 2, "q^") != 0) throw Error("malformed polynomial: " + text);
    pos += 2;
    start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    terms.emplace_back(std::stoi(text.substr(start, pos - start)), sign * c);
    sign = 1;
    skip_ws();
  }
  return LaurentPoly::from_terms(terms);
}

}  // namespace subraid::algebra
