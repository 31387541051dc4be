#pragma once

/**
 * @file temperley_lieb.hpp
 * @brief Temperley-Lieb algebra TL_n over Z[A, A^-1] and bracket evaluation
 *        of braid closures.
 *
 * A basis diagram is a non-crossing perfect matching of 2n boundary points:
 * 0..n-1 along the bottom and n..2n-1 along the top, both left to right.
 * Products stack the right factor on top.  The Kauffman bracket sends
 *
 *     sigma_i    ->  A * 1 + A^-1 * e_i
 *     sigma_i^-1 ->  A^-1 * 1 + A * e_i
 *
 * and every closed loop to delta = -A^2 - A^-2.  The basis and the table of
 * right multiplications by e_i are built once per n and cached.
 */

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "subraid/braid/braid_word.hpp"
#include "subraid/jones/dense_poly.hpp"

namespace subraid::jones {

using Matching = std::vector<int>;  // size 2n, involution without fixed points

/// Stacks e on top of d; returns the product matching and the closed loop count.
inline std::pair<Matching, int> tl_compose(const Matching& d, const Matching& e) {
  const int n = static_cast<int>(d.size()) / 2;
  Matching out(d.size(), -1);
  // middle point k (d's top k == e's bottom k) visited flags
  std::vector<char> mid(static_cast<std::size_t>(n), 0);
  // walk from an outer point until another outer point is reached
  auto walk = [&](bool in_d, int p) {
    for (;;) {
      if (in_d) {
        const int q = d[static_cast<std::size_t>(p)];
        if (q < n) return q;  // d's bottom: outer
        mid[static_cast<std::size_t>(q - n)] = 1;
        in_d = false;
        p = q - n;  // e's bottom
      } else {
        const int q = e[static_cast<std::size_t>(p)];
        if (q >= n) return q;  // e's top: outer
        mid[static_cast<std::size_t>(q)] = 1;
        in_d = true;
        p = q + n;  // d's top
      }
    }
  };
  for (int p = 0; p < n; ++p)
    if (out[static_cast<std::size_t>(p)] < 0) {
      const int q = walk(true, p);
      out[static_cast<std::size_t>(p)] = q;
      out[static_cast<std::size_t>(q)] = p;
    }
  for (int p = n; p < 2 * n; ++p)
    if (out[static_cast<std::size_t>(p)] < 0) {
      const int q = walk(false, p);
      out[static_cast<std::size_t>(p)] = q;
      out[static_cast<std::size_t>(q)] = p;
    }
  int loops = 0;
  for (int k = 0; k < n; ++k) {
    if (mid[static_cast<std::size_t>(k)]) continue;
    ++loops;
    // trace the closed loop through the middle line
    int p = k;
    bool in_e = true;
    do {
      mid[static_cast<std::size_t>(p)] = 1;
      if (in_e) {
        p = e[static_cast<std::size_t>(p)];  // stays in e's bottom
      } else {
        p = d[static_cast<std::size_t>(p + n)] - n;
      }
      in_e = !in_e;
    } while (!(p == k && in_e));
  }
  return {out, loops};
}

inline Matching tl_identity(int n) {
  Matching m(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    m[static_cast<std::size_t>(k)] = n + k;
    m[static_cast<std::size_t>(n + k)] = k;
  }
  return m;
}

/// Generator e_i, 1 <= i < n.
inline Matching tl_generator(int n, int i) {
  Matching m = tl_identity(n);
  const int a = i - 1, b = i;
  m[static_cast<std::size_t>(a)] = b;
  m[static_cast<std::size_t>(b)] = a;
  m[static_cast<std::size_t>(n + a)] = n + b;
  m[static_cast<std::size_t>(n + b)] = n + a;
  return m;
}

/// Number of loops after adding the extra pairing `closing` (also an involution on 2n points).
inline int closed_loops(const Matching& d, const Matching& closing) {
  const std::size_t m = d.size();
  std::vector<char> seen(m, 0);
  int loops = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    ++loops;
    std::size_t p = s;
    do {
      seen[p] = 1;
      const auto q = static_cast<std::size_t>(d[p]);
      seen[q] = 1;
      p = static_cast<std::size_t>(closing[q]);
    } while (p != s);
  }
  return loops;
}

/// Trace closure: top k joined to bottom k.
inline Matching trace_closing(int n) { return tl_identity(n); }

/// Plat closure: (2k, 2k+1) capped at the bottom and at the top.
inline Matching plat_closing(int n) {
  if (n % 2 != 0) throw Error("plat closure needs even index");
  Matching m(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < 2 * n; k += 2) {
    m[static_cast<std::size_t>(k)] = k + 1;
    m[static_cast<std::size_t>(k + 1)] = k;
  }
  return m;
}

/// Cached basis of TL_n with right multiplication tables.
class TLBasis {
 public:
  struct Step {
    int index;
    int loops;
  };

  static const TLBasis& get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<TLBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot.reset(new TLBasis(n));
    return *slot;
  }

  int strands() const noexcept { return n_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const Matching& element(std::size_t k) const { return elems_.at(k); }
  int index_of(const Matching& m) const { return index_.at(m); }

  /// Basis element k times e_i (1 <= i < n).
  Step times_generator(std::size_t k, int i) const {
    return next_[k * static_cast<std::size_t>(n_ - 1) + static_cast<std::size_t>(i - 1)];
  }

  /// Loops of each basis element under a closing pairing.
  std::vector<int> closure_loops(const Matching& closing) const {
    std::vector<int> out(elems_.size());
    for (std::size_t k = 0; k < elems_.size(); ++k) out[k] = closed_loops(elems_[k], closing);
    return out;
  }

 private:
  explicit TLBasis(int n) : n_(n) {
    if (n < 1) throw Error("TL algebra needs n >= 1");
    elems_.push_back(tl_identity(n));
    index_[elems_[0]] = 0;
    std::vector<Matching> gens;
    for (int i = 1; i < n; ++i) gens.push_back(tl_generator(n, i));
    // breadth-first closure under right multiplication, filling the table as we go
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      for (int i = 1; i < n; ++i) {
        auto [prod, loops] = tl_compose(elems_[k], gens[static_cast<std::size_t>(i - 1)]);
        auto it = index_.find(prod);
        int idx;
        if (it == index_.end()) {
          idx = static_cast<int>(elems_.size());
          index_.emplace(prod, idx);
          elems_.push_back(std::move(prod));
        } else {
          idx = it->second;
        }
        next_.push_back({idx, loops});
      }
    }
  }

  int n_;
  std::vector<Matching> elems_;
  std::map<Matching, int> index_;
  std::vector<Step> next_;
};

/// An element of TL_n: one dense A-polynomial per basis diagram.
template <class T>
struct TLElement {
  const TLBasis* basis = nullptr;
  detail::Window<T> window;
  std::vector<std::vector<T>> coeff;  // empty vector = zero coefficient

  TLElement(const TLBasis& b, int radius) : basis(&b), window(radius), coeff(b.size()) {
    coeff[0] = window.zero();
    coeff[0][static_cast<std::size_t>(window.offset)] = T(1);
  }

  /// Right multiplication by the bracket image of sigma_i^{+-1}.
  void apply(int letter) {
    const int i = std::abs(letter);
    const int a_one = letter > 0 ? 1 : -1;  // exponent of A on the identity term
    std::vector<std::vector<T>> out(coeff.size());
    std::vector<T> tmp_a, tmp_b;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      const auto& c = coeff[k];
      if (c.empty()) continue;
      if (out[k].empty()) out[k] = window.zero();
      detail::add_shifted(out[k], c, a_one);
      const auto step = basis->times_generator(k, i);
      auto& dst = out[static_cast<std::size_t>(step.index)];
      if (dst.empty()) dst = window.zero();
      detail::add_with_loops(dst, c, -a_one, step.loops, tmp_a, tmp_b);
    }
    for (auto& c : out)
      if (!c.empty() && detail::all_zero(c)) c.clear();
    coeff.swap(out);
  }

  /// Linear functional sum_k c_k * delta^(loops_k - 1).
  std::vector<T> evaluate(const std::vector<int>& loops) const {
    std::vector<T> acc = window.zero(), tmp_a, tmp_b;
    for (std::size_t k = 0; k < coeff.size(); ++k)
      if (!coeff[k].empty()) detail::add_with_loops(acc, coeff[k], 0, loops[k] - 1, tmp_a, tmp_b);
    return acc;
  }
};

namespace detail {

template <class T>
LaurentPoly bracket_with(const braid::BraidWord& w, const Matching& closing) {
  const TLBasis& basis = TLBasis::get(w.strands());
  const int radius = 3 * static_cast<int>(w.length()) + 2 * w.strands() + 4;
  TLElement<T> x(basis, radius);
  for (int e : w.letters()) x.apply(e);
  return to_laurent(x.evaluate(basis.closure_loops(closing)), radius);
}

inline LaurentPoly bracket_dispatch(const braid::BraidWord& w, const Matching& closing) {
  if (fits_int64_bound(static_cast<int>(w.length()), w.strands())) {
    try {
      return bracket_with<std::int64_t>(w, closing);
    } catch (const algebra::detail::Overflow&) {
    }
  }
  return bracket_with<Integer>(w, closing);
}

}  // namespace detail

/// Kauffman bracket (variable A, unknot = 1) of the standard closure.
inline LaurentPoly bracket_closure(const braid::BraidWord& w) {
  return detail::bracket_dispatch(w, trace_closing(w.strands()));
}

/// Kauffman bracket of the plat closure; needs an even index.
inline LaurentPoly bracket_plat(const braid::BraidWord& w) {
  return detail::bracket_dispatch(w, plat_closing(w.strands()));
}

}  // namespace subraid::jones
