#pragma once

/**
 * @file su_braid.hpp
 * @brief Symmetric union braids gamma C_1 gamma^-1 C_2.
 *
 * The axis crossings C_1, C_2 follow fixed templates depending on the
 * index n:
 *
 *   n = 1        C_1, C_2 trivial
 *   n = 2        C_1 trivial, C_2 = s1^e
 *   n odd >= 3   C_1, C_2 use s2, s4, ..., s_{n-1}
 *   n even >= 4  C_1 uses s3, s5, ..., s_{n-1};  C_2 uses s1, s3, ..., s_{n-1}
 *
 * each generator exactly once with a sign.  The partial knot is the plat
 * closure of gamma; for odd n an extra strand is added on the left so the
 * caps line up with the axis crossings.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "subraid/braid/closures.hpp"
#include "subraid/braid/simplify.hpp"

namespace subraid::su {

using braid::BraidWord;
using braid::PlanarDiagram;

/// Generators used by C_1 (which = 1) or C_2 (which = 2) in B_n.
inline std::vector<int> template_generators(int n, int which) {
  if (n < 1) throw Error("SU braid index must be at least 1");
  std::vector<int> g;
  if (n == 1) return g;
  if (n == 2) {
    if (which == 2) g.push_back(1);
    return g;
  }
  const int first = n % 2 == 1 ? 2 : (which == 1 ? 3 : 1);
  for (int k = first; k <= n - 1; k += 2) g.push_back(k);
  return g;
}

/// Word with the template generators and the given signs.
inline BraidWord template_word(int n, int which, const std::vector<int>& signs) {
  const auto g = template_generators(n, which);
  if (signs.size() != g.size())
    throw Error("C_" + std::to_string(which) + " in B_" + std::to_string(n) + " needs " + std::to_string(g.size()) +
                " signs, got " + std::to_string(signs.size()));
  std::vector<int> w;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (signs[k] != 1 && signs[k] != -1) throw Error("signs must be +1 or -1");
    w.push_back(signs[k] * g[k]);
  }
  return {n, std::move(w)};
}

/// Signs of c if it fits the template (generators in any order), else throws.
inline std::vector<int> template_signs(int n, int which, const BraidWord& c) {
  const auto g = template_generators(n, which);
  std::vector<int> signs(g.size(), 0);
  const std::string label = "C_" + std::to_string(which);
  if (c.strands() != n) throw Error(label + " must lie in B_" + std::to_string(n));
  for (int e : c.letters()) {
    auto it = std::find(g.begin(), g.end(), std::abs(e));
    if (it == g.end())
      throw Error(label + " may not use sigma_" + std::to_string(std::abs(e)) + " in B_" + std::to_string(n));
    auto& s = signs[static_cast<std::size_t>(it - g.begin())];
    if (s != 0) throw Error(label + " uses sigma_" + std::to_string(std::abs(e)) + " twice");
    s = e > 0 ? 1 : -1;
  }
  for (std::size_t k = 0; k < g.size(); ++k)
    if (signs[k] == 0) throw Error(label + " is missing sigma_" + std::to_string(g[k]));
  return signs;
}

class SUBraid {
 public:
  SUBraid(int n, BraidWord gamma, std::vector<int> signs1, std::vector<int> signs2)
      : n_(n), gamma_(std::move(gamma)) {
    if (gamma_.strands() != n_)
      throw Error("gamma has " + std::to_string(gamma_.strands()) + " strands, expected " + std::to_string(n_));
    c1_ = template_word(n_, 1, signs1);
    c2_ = template_word(n_, 2, signs2);
    signs1_ = std::move(signs1);
    signs2_ = std::move(signs2);
    components_ = braid::closure_components(word());
  }

  int n() const noexcept { return n_; }
  const BraidWord& gamma() const noexcept { return gamma_; }
  const BraidWord& c1() const noexcept { return c1_; }
  const BraidWord& c2() const noexcept { return c2_; }
  const std::vector<int>& signs1() const noexcept { return signs1_; }
  const std::vector<int>& signs2() const noexcept { return signs2_; }

  BraidWord word() const { return gamma_ * c1_ * gamma_.inverse() * c2_; }
  int components() const noexcept { return components_; }
  bool is_knot() const noexcept { return components_ == 1; }

  PlanarDiagram closure() const { return braid::standard_closure(word()); }

  /// gamma as a braid on an even number of strands, ready for plat closure.
  BraidWord plat_gamma() const { return n_ % 2 == 0 ? gamma_ : gamma_.shifted(1); }

  std::string to_string() const {
    return "n=" + std::to_string(n_) + " gamma=" + gamma_.to_string() + " C1=" + c1_.to_string() +
           " C2=" + c2_.to_string();
  }

  friend bool operator==(const SUBraid& a, const SUBraid& b) {
    return a.n_ == b.n_ && a.gamma_ == b.gamma_ && a.c1_ == b.c1_ && a.c2_ == b.c2_;
  }
  /// (n, gamma length, gamma letters, C_1, C_2)
  friend bool operator<(const SUBraid& a, const SUBraid& b) {
    auto key = [](const SUBraid& s) {
      return std::make_tuple(s.n_, s.gamma_.length(), s.gamma_.letters(), s.c1_.letters(), s.c2_.letters());
    };
    return key(a) < key(b);
  }

 private:
  int n_;
  BraidWord gamma_, c1_, c2_;
  std::vector<int> signs1_, signs2_;
  int components_ = 0;
};

inline SUBraid make_su_braid(int n, const BraidWord& gamma, const std::vector<int>& signs1,
                             const std::vector<int>& signs2) {
  return {n, gamma, signs1, signs2};
}

/// From explicit C_1, C_2 words, validated against the templates.
inline SUBraid make_su_braid(int n, const BraidWord& gamma, const BraidWord& c1, const BraidWord& c2) {
  return {n, gamma, template_signs(n, 1, c1), template_signs(n, 2, c2)};
}

/// Plat closure of gamma; the SU closure must be a knot.
inline PlanarDiagram partial_knot(const SUBraid& b) {
  if (!b.is_knot())
    throw Error("closure has " + std::to_string(b.components()) + " components (mu != 1); no partial knot");
  return braid::plat_closure(b.plat_gamma());
}

}  // namespace subraid::su
