#pragma once

/**
 * @file khovanov.hpp
 * @brief Rational Khovanov homology by the cube of resolutions.
 *
 * State s is a bitmask over crossings; bit k set means crossing k takes its
 * 1-resolution (the B-smoothing).  A generator of the state's space is the
 * set of circles labelled x; circles labelled 1 have degree +1 and x
 * degree -1.  Gradings:
 *
 *     i = |s| - n_-        j = deg + |s| + n_+ - 2 n_-
 *
 * so the unknot sits at (0, -1) and (0, 1).  The edge s -> s + e_k carries
 * the sign (-1)^(number of set bits of s below k).
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "subraid/algebra/kh_polynomial.hpp"
#include "subraid/algebra/sparse_rank.hpp"
#include "subraid/braid/closures.hpp"
#include "subraid/braid/planar_diagram.hpp"
#include "subraid/braid/simplify.hpp"

namespace subraid::khovanov {

using algebra::KhPolynomial;
using braid::PlanarDiagram;

inline constexpr int default_kh_cap = 16;
inline constexpr int hard_kh_limit = 20;

struct KhovanovResult {
  KhPolynomial ranks;
  int diagram_crossings = 0;
  bool knot_flag = false;
};

namespace detail {

struct Binomials {
  std::array<std::array<std::int64_t, 64>, 64> c{};
  Binomials() {
    for (int n = 0; n < 64; ++n) {
      c[static_cast<std::size_t>(n)][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
            (k < n ? c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] : 0);
    }
  }
  std::int64_t operator()(int n, int k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
};

inline const Binomials& binomials() {
  static const Binomials b;
  return b;
}

/// Colex rank of a subset among subsets of the same size.
inline std::int64_t subset_rank(std::uint32_t mask) {
  const auto& binom = binomials();
  std::int64_t r = 0;
  int t = 1;
  while (mask) {
    const int p = std::countr_zero(mask);
    r += binom(p, t++);
    mask &= mask - 1;
  }
  return r;
}

/// Next integer with the same popcount (Gosper).
inline std::uint32_t next_subset(std::uint32_t v) {
  const std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

/// Circle structure of every state of the cube.
class Cube {
 public:
  explicit Cube(const PlanarDiagram& d) : d_(d), c_(d.crossing_count()), arcs_(d.arc_count()) {
    const std::size_t states = std::size_t{1} << c_;
    circles_.resize(states);
    arc_circle_.resize(states * static_cast<std::size_t>(arcs_));
    std::vector<int> parent(static_cast<std::size_t>(arcs_));
    std::vector<int> label(static_cast<std::size_t>(arcs_));
    for (std::size_t s = 0; s < states; ++s) {
      for (int a = 0; a < arcs_; ++a) parent[static_cast<std::size_t>(a)] = a;
      for (int k = 0; k < c_; ++k) {
        const auto& x = d.crossings[static_cast<std::size_t>(k)].arcs;
        if (((s >> k) & 1u) == 0) {
          unite(parent, x[0], x[1]);
          unite(parent, x[2], x[3]);
        } else {
          unite(parent, x[0], x[3]);
          unite(parent, x[1], x[2]);
        }
      }
      std::fill(label.begin(), label.end(), -1);
      int next = 0;
      std::uint8_t* row = &arc_circle_[s * static_cast<std::size_t>(arcs_)];
      for (int a = 0; a < arcs_; ++a) {
        const int r = braid::detail::find_root(parent, a);
        if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
        row[a] = static_cast<std::uint8_t>(label[static_cast<std::size_t>(r)]);
      }
      if (next > 31) throw Error("too many circles in a resolution");
      circles_[s] = static_cast<std::uint8_t>(next);
    }
  }

  int crossings() const noexcept { return c_; }
  std::size_t states() const noexcept { return circles_.size(); }
  int circles(std::size_t s) const noexcept { return circles_[s]; }
  int circle_of(std::size_t s, int arc) const noexcept {
    return arc_circle_[s * static_cast<std::size_t>(arcs_) + static_cast<std::size_t>(arc)];
  }
  const PlanarDiagram& diagram() const noexcept { return d_; }

 private:
  static void unite(std::vector<int>& parent, int a, int b) {
    a = braid::detail::find_root(parent, a);
    b = braid::detail::find_root(parent, b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

  const PlanarDiagram& d_;
  int c_;
  int arcs_;
  std::vector<std::uint8_t> circles_;
  std::vector<std::uint8_t> arc_circle_;
};

/// Edge s -> s | bit k: either two circles merge or one splits.
struct Edge {
  bool merge = false;
  int a = 0, b = 0;                  // merge: the two source circles; split: source circle in a
  int c1 = 0, c2 = 0;                // merge: target circle in c1; split: the two target circles
  std::array<std::uint8_t, 32> map{};  // source circle -> target circle (untouched circles)
  int sign = 1;
  std::size_t target = 0;
};

inline Edge make_edge(const Cube& cube, std::size_t s, int k) {
  const std::size_t t = s | (std::size_t{1} << k);
  const auto& x = cube.diagram().crossings[static_cast<std::size_t>(k)].arcs;
  Edge e;
  e.target = t;
  e.sign = (std::popcount(s & ((std::size_t{1} << k) - 1)) % 2) ? -1 : 1;
  const int ks = cube.circles(s);
  // representative arc for every source circle
  std::array<int, 32> rep{};
  rep.fill(-1);
  const int arcs = cube.diagram().arc_count();
  for (int a = 0; a < arcs; ++a) {
    const int cc = cube.circle_of(s, a);
    if (rep[static_cast<std::size_t>(cc)] < 0) rep[static_cast<std::size_t>(cc)] = a;
  }
  for (int cc = 0; cc < ks; ++cc)
    e.map[static_cast<std::size_t>(cc)] = static_cast<std::uint8_t>(cube.circle_of(t, rep[static_cast<std::size_t>(cc)]));
  const int sa = cube.circle_of(s, x[0]), sc = cube.circle_of(s, x[2]);
  if (sa != sc) {
    e.merge = true;
    e.a = sa;
    e.b = sc;
    e.c1 = cube.circle_of(t, x[0]);
  } else {
    e.merge = false;
    e.a = sa;
    e.c1 = cube.circle_of(t, x[0]);
    e.c2 = cube.circle_of(t, x[1]);
  }
  return e;
}

inline std::uint32_t map_mask(const Edge& e, std::uint32_t mask) {
  std::uint32_t out = 0;
  while (mask) {
    const int p = std::countr_zero(mask);
    out |= std::uint32_t{1} << e.map[static_cast<std::size_t>(p)];
    mask &= mask - 1;
  }
  return out;
}

}  // namespace detail

/**
 * Unreduced rational Khovanov homology of a diagram.  Throws CapExceeded
 * above `cap` crossings (and never accepts more than the hard limit).
 */
inline KhovanovResult kh_ranks(const PlanarDiagram& d, int cap = default_kh_cap) {
  const int c = d.crossing_count();
  if (cap > hard_kh_limit) cap = hard_kh_limit;
  if (c > cap) throw CapExceeded("Khovanov cube", c, cap);
  KhovanovResult res;
  res.diagram_crossings = c;
  res.knot_flag = d.components == 1;

  // homology of the crossing part, then tensor with (q + q^-1) per free loop
  std::map<std::pair<int, int>, std::int64_t> core;
  if (c == 0) {
    core[{0, 0}] = 1;
  } else {
    const detail::Cube cube(d);
    const auto& binom = detail::binomials();
    const int np = d.positive_crossings(), nm = d.negative_crossings();
    const int shift = np - 2 * nm;
    const std::size_t states = cube.states();

    auto j_of = [&](std::size_t s, int xs) {
      return cube.circles(s) - 2 * xs + std::popcount(s) + shift;
    };
    int jlo = 1 << 30, jhi = -(1 << 30);
    for (std::size_t s = 0; s < states; ++s) {
      jlo = std::min(jlo, j_of(s, cube.circles(s)));
      jhi = std::max(jhi, j_of(s, 0));
    }
    std::vector<std::int64_t> base(states);
    std::vector<int> xcount(states);
    for (int j = jlo; j <= jhi; j += 2) {
      // dims and offsets of C^{i,j}, per homological degree h = |s|
      std::vector<std::int64_t> dim(static_cast<std::size_t>(c + 2), 0);
      for (std::size_t s = 0; s < states; ++s) {
        const int h = std::popcount(s);
        const int num = cube.circles(s) + h + shift - j;
        int xs = -1;
        if (num >= 0 && num % 2 == 0 && num / 2 <= cube.circles(s)) xs = num / 2;
        xcount[s] = xs;
        base[s] = dim[static_cast<std::size_t>(h)];
        if (xs >= 0) dim[static_cast<std::size_t>(h)] += binom(cube.circles(s), xs);
      }
      std::vector<std::int64_t> rank(static_cast<std::size_t>(c + 1), 0);  // rank of d^h
      for (int h = 0; h < c; ++h) {
        if (dim[static_cast<std::size_t>(h)] == 0 || dim[static_cast<std::size_t>(h + 1)] == 0) continue;
        algebra::SparseIntMatrix m(0, static_cast<int>(dim[static_cast<std::size_t>(h + 1)]));
        std::vector<detail::Edge> edges;
        algebra::SparseIntMatrix::Row row;
        for (std::size_t s = 0; s < states; ++s) {
          if (std::popcount(s) != h || xcount[s] < 0) continue;
          edges.clear();
          for (int k = 0; k < c; ++k)
            if (((s >> k) & 1u) == 0) edges.push_back(detail::make_edge(cube, s, k));
          const int ks = cube.circles(s), xs = xcount[s];
          const std::uint32_t limit = std::uint32_t{1} << ks;
          std::uint32_t mask = xs == 0 ? 0u : (std::uint32_t{1} << xs) - 1;
          for (;;) {
            row.clear();
            for (const auto& e : edges) {
              const std::int64_t tb = base[e.target];
              if (e.merge) {
                const bool xa = (mask >> e.a) & 1u, xb = (mask >> e.b) & 1u;
                if (xa && xb) continue;
                const std::uint32_t rest = mask & ~((std::uint32_t{1} << e.a) | (std::uint32_t{1} << e.b));
                std::uint32_t img = detail::map_mask(e, rest);
                if (xa || xb) img |= std::uint32_t{1} << e.c1;
                row.emplace_back(static_cast<int>(tb + detail::subset_rank(img)), e.sign);
              } else {
                const bool xa = (mask >> e.a) & 1u;
                const std::uint32_t rest = mask & ~(std::uint32_t{1} << e.a);
                const std::uint32_t img = detail::map_mask(e, rest);
                if (xa) {
                  const std::uint32_t t2 = img | (std::uint32_t{1} << e.c1) | (std::uint32_t{1} << e.c2);
                  row.emplace_back(static_cast<int>(tb + detail::subset_rank(t2)), e.sign);
                } else {
                  row.emplace_back(static_cast<int>(tb + detail::subset_rank(img | (std::uint32_t{1} << e.c1))), e.sign);
                  row.emplace_back(static_cast<int>(tb + detail::subset_rank(img | (std::uint32_t{1} << e.c2))), e.sign);
                }
              }
            }
            std::sort(row.begin(), row.end());
            m.push_row(row);
            if (xs == 0 || xs == ks) break;
            mask = detail::next_subset(mask);
            if (mask >= limit) break;
          }
        }
        rank[static_cast<std::size_t>(h)] = static_cast<std::int64_t>(algebra::rank_over_rationals(m));
      }
      for (int h = 0; h <= c; ++h) {
        const std::int64_t r = dim[static_cast<std::size_t>(h)] - rank[static_cast<std::size_t>(h)] -
                               (h > 0 ? rank[static_cast<std::size_t>(h - 1)] : 0);
        if (r < 0) throw Error("negative Khovanov rank");
        if (r > 0) core[{h - nm, j}] = r;
      }
    }
  }
  // free loops: tensor with q + q^-1
  for (int l = 0; l < d.free_loops; ++l) {
    std::map<std::pair<int, int>, std::int64_t> next;
    for (const auto& [ij, r] : core) {
      next[{ij.first, ij.second - 1}] += r;
      next[{ij.first, ij.second + 1}] += r;
    }
    core.swap(next);
  }
  if (c == 0 && d.free_loops == 0) core = {{{0, -1}, 1}, {{0, 1}, 1}};  // empty diagram read as the unknot
  for (const auto& [ij, r] : core) res.ranks.add(ij.first, ij.second, r);
  return res;
}

/// Khovanov homology of a braid closure, simplified first.
inline KhovanovResult kh_ranks(const braid::BraidWord& w, int cap = default_kh_cap) {
  return kh_ranks(braid::standard_closure(braid::simplify(w)), cap);
}

/// (q_max, q_min) of a nonempty table.
inline std::pair<int, int> kh_extrema(const KhovanovResult& r) {
  if (r.ranks.empty()) throw Error("extrema of an empty Khovanov table");
  return {r.ranks.q_max(), r.ranks.q_min()};
}

}  // namespace subraid::khovanov
