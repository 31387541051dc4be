#pragma once

/**
 * @file closures.hpp
 * @brief Standard and plat closures of braid words.
 *
 * Braids are drawn bottom to top.  For sigma_i the strand at position i
 * moves to position i+1 and passes over (a positive crossing when all
 * strands point up); sigma_i^-1 has the other strand on top.
 *
 * Plat closure on 2m strands caps positions (1,2), (3,4), ... both below and
 * above the braid:
 *
 *      __    __
 *     |  |  |  |        top caps
 *     [  gamma  ]
 *     |__|  |__|        bottom caps
 *      1 2  3 4
 */

#include <cstdlib>
#include <vector>

#include "subraid/braid/braid_word.hpp"
#include "subraid/braid/planar_diagram.hpp"

namespace subraid::braid {

namespace detail {

/// Lays the crossings of w into the builder; returns (bottom, top) segment per position.
inline std::pair<std::vector<int>, std::vector<int>> lay_braid(DiagramBuilder& b, const BraidWord& w,
                                                               bool orient_upward) {
  const auto n = static_cast<std::size_t>(w.strands());
  std::vector<int> bottom(n), current(n);
  for (std::size_t k = 0; k < n; ++k) bottom[k] = current[k] = b.new_segment();
  for (int e : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(e) - 1);
    const int sw = current[i], se = current[i + 1];
    const int nw = b.new_segment(), ne = b.new_segment();
    if (e > 0) {
      // under-strand SE -> NW, over-strand SW -> NE
      b.add_crossing({se, ne, nw, sw}, orient_upward ? std::array<bool, 4>{true, false, false, true}
                                                     : std::array<bool, 4>{});
    } else {
      // under-strand SW -> NE, over-strand SE -> NW
      b.add_crossing({sw, se, ne, nw}, orient_upward ? std::array<bool, 4>{true, true, false, false}
                                                     : std::array<bool, 4>{});
    }
    current[i] = nw;
    current[i + 1] = ne;
  }
  return {bottom, current};
}

}  // namespace detail

/// Closure joining each top endpoint to the bottom endpoint below it.
inline PlanarDiagram standard_closure(const BraidWord& w) {
  DiagramBuilder b;
  auto [bottom, top] = detail::lay_braid(b, w, true);
  for (std::size_t k = 0; k < bottom.size(); ++k) b.join(top[k], bottom[k]);
  return b.finish();
}

/// Closure capping strand pairs (2k-1, 2k) at both ends; needs an even index.
inline PlanarDiagram plat_closure(const BraidWord& w) {
  if (w.strands() % 2 != 0) throw Error("plat closure needs even index");
  DiagramBuilder b;
  auto [bottom, top] = detail::lay_braid(b, w, false);
  for (std::size_t k = 0; k + 1 < bottom.size(); k += 2) {
    b.join(bottom[k], bottom[k + 1]);
    b.join(top[k], top[k + 1]);
  }
  return b.finish();
}

}  // namespace subraid::braid
