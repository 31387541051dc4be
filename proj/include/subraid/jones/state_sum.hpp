#pragma once

/**
 * @file state_sum.hpp
 * @brief Kauffman bracket of a planar diagram, by the full state sum over
 *        all 2^c smoothings and by a frontier sweep.
 *
 * For a crossing X[a,b,c,d] (counterclockwise from the incoming
 * under-strand) the A-smoothing joins (a,b),(c,d) and the B-smoothing joins
 * (a,d),(b,c).  Result variable is A, normalized so that the unknot is 1.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "subraid/braid/planar_diagram.hpp"
#include "subraid/jones/dense_poly.hpp"

namespace subraid::jones {

using braid::PlanarDiagram;

/// Exhaustive state sum; the caller is responsible for keeping c reasonable.
inline LaurentPoly bracket_state_sum(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  const int arcs = d.arc_count();
  if (c > 30) throw Error("state sum over " + std::to_string(c) + " crossings is not supported");
  // count[a - b + c][loops]
  std::vector<std::vector<std::int64_t>> count(static_cast<std::size_t>(2 * c + 1),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(arcs + d.free_loops + 2), 0));
  std::vector<int> parent(static_cast<std::size_t>(arcs));
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t s = 0; s < states; ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = arcs;
    auto unite = [&](int x, int y) {
      x = braid::detail::find_root(parent, x);
      y = braid::detail::find_root(parent, y);
      if (x != y) {
        parent[static_cast<std::size_t>(x)] = y;
        --comps;
      }
    };
    int a_count = 0;
    for (int k = 0; k < c; ++k) {
      const auto& x = d.crossings[static_cast<std::size_t>(k)].arcs;
      if (((s >> k) & 1u) == 0) {
        ++a_count;
        unite(x[0], x[1]);
        unite(x[2], x[3]);
      } else {
        unite(x[0], x[3]);
        unite(x[1], x[2]);
      }
    }
    const int loops = (c == 0 ? 0 : comps) + d.free_loops;
    ++count[static_cast<std::size_t>(2 * a_count - c + c)][static_cast<std::size_t>(loops)];
  }
  // sum count * A^(a-b) * delta^(loops-1)
  LaurentPoly delta = LaurentPoly::from_terms({{-2, -1}, {2, -1}});
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  LaurentPoly total;
  for (std::size_t e = 0; e < count.size(); ++e)
    for (std::size_t l = 0; l < count[e].size(); ++l) {
      if (count[e][l] == 0) continue;
      if (l == 0) throw Error("state with no loops");
      while (delta_pow.size() < l) delta_pow.push_back(delta_pow.back() * delta);
      total += LaurentPoly::monomial(Integer(count[e][l]), static_cast<int>(e) - c) * delta_pow[l - 1];
    }
  return total;
}

namespace detail {

/// Orders crossings so that each next one shares as many arcs as possible with the frontier.
inline std::vector<int> sweep_order(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  std::vector<std::vector<int>> at_arc(static_cast<std::size_t>(d.arc_count()));
  for (int k = 0; k < c; ++k)
    for (int a : d.crossings[static_cast<std::size_t>(k)].arcs) at_arc[static_cast<std::size_t>(a)].push_back(k);
  std::vector<int> order;
  std::vector<char> done(static_cast<std::size_t>(c), 0);
  std::vector<int> open_count(static_cast<std::size_t>(d.arc_count()), 0);
  for (int step = 0; step < c; ++step) {
    int best = -1, best_score = -1000;
    for (int k = 0; k < c; ++k) {
      if (done[static_cast<std::size_t>(k)]) continue;
      int score = 0;
      for (int a : d.crossings[static_cast<std::size_t>(k)].arcs)
        score += open_count[static_cast<std::size_t>(a)] == 1 ? 2 : -1;
      if (score > best_score) {
        best_score = score;
        best = k;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (int a : d.crossings[static_cast<std::size_t>(best)].arcs) ++open_count[static_cast<std::size_t>(a)];
  }
  return order;
}

template <class T>
LaurentPoly bracket_sweep_impl(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  const int radius = 5 * c + 2 * d.free_loops + 6;
  Window<T> window(radius);
  const std::vector<int> order = sweep_order(d);

  // State: partner[arc] for arcs whose path through processed crossings is open; key is the
  // vector of partners indexed by position in the current frontier list.
  using Key = std::vector<int>;
  std::map<Key, std::vector<T>> states;
  std::vector<int> frontier;  // sorted arc ids that are currently open
  {
    auto v = window.zero();
    v[static_cast<std::size_t>(window.offset)] = T(1);
    states.emplace(Key{}, std::move(v));
  }
  std::vector<int> touched(static_cast<std::size_t>(d.arc_count()), 0);
  std::vector<T> tmp_a, tmp_b;
  for (int k : order) {
    const auto& x = d.crossings[static_cast<std::size_t>(k)].arcs;
    // frontier after this crossing
    std::vector<int> next_touched = touched;
    for (int a : x) ++next_touched[static_cast<std::size_t>(a)];
    std::vector<int> next_frontier;
    for (std::size_t a = 0; a < next_touched.size(); ++a)
      if (next_touched[a] == 1) next_frontier.push_back(static_cast<int>(a));
    std::vector<int> pos(static_cast<std::size_t>(d.arc_count()), -1);
    for (std::size_t p = 0; p < next_frontier.size(); ++p) pos[static_cast<std::size_t>(next_frontier[p])] = static_cast<int>(p);

    std::map<Key, std::vector<T>> next;
    for (const auto& [key, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        // partner map on arc ids
        std::map<int, int> partner;
        for (std::size_t p = 0; p < frontier.size(); ++p)
          partner[frontier[p]] = frontier[static_cast<std::size_t>(key[p])];
        int loops = 0;
        auto connect = [&](int u, int v) {
          if (u == v) {  // both ends of one arc at this crossing, joined to itself
            ++loops;
            return;
          }
          auto end_of = [&](int a) -> int {
            auto it = partner.find(a);
            if (it != partner.end()) {
              const int far = it->second;
              partner.erase(it);
              return far;  // the arc closes here; its path continues from far
            }
            return a;  // new arc: it becomes an open end
          };
          const bool u_open = partner.count(u) > 0, v_open = partner.count(v) > 0;
          if (u_open && v_open && partner[u] == v) {
            partner.erase(u);
            partner.erase(v);
            ++loops;
            return;
          }
          const int eu = end_of(u), ev = end_of(v);
          partner[eu] = ev;
          partner[ev] = eu;
        };
        if (smoothing == 0) {
          connect(x[0], x[1]);
          connect(x[2], x[3]);
        } else {
          connect(x[0], x[3]);
          connect(x[1], x[2]);
        }
        Key nk(next_frontier.size());
        for (std::size_t p = 0; p < next_frontier.size(); ++p)
          nk[p] = pos[static_cast<std::size_t>(partner.at(next_frontier[p]))];
        auto& dst = next[nk];
        if (dst.empty()) dst = window.zero();
        add_with_loops(dst, poly, smoothing == 0 ? 1 : -1, loops, tmp_a, tmp_b);
      }
    }
    states.swap(next);
    frontier.swap(next_frontier);
    touched.swap(next_touched);
  }
  if (!frontier.empty()) throw Error("diagram sweep ended with open arcs");
  auto it = states.find(Key{});
  LaurentPoly raw = it == states.end() ? LaurentPoly() : to_laurent(it->second, radius);
  // raw counts every loop; the normalization wants one delta fewer
  return divide_by_delta(raw) * delta_power(d.free_loops);
}

}  // namespace detail

/// Bracket by a frontier sweep over the crossings; no crossing cap.
inline LaurentPoly bracket_sweep(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) {
    if (d.free_loops == 0) return LaurentPoly(1);
    return detail::delta_power(d.free_loops - 1);
  }
  if (detail::fits_int64_bound(d.crossing_count(), 2)) {
    try {
      return detail::bracket_sweep_impl<std::int64_t>(d);
    } catch (const algebra::detail::Overflow&) {
    }
  }
  return detail::bracket_sweep_impl<Integer>(d);
}

}  // namespace subraid::jones
