#pragma once

/**
 * @file planar_diagram.hpp
 * @brief Oriented planar diagrams in PD form, and a builder that assembles
 *        them from unoriented local pictures.
 *
 * A crossing stores its four incident arcs counterclockwise, starting from
 * the incoming under-strand: arcs[0] -> arcs[2] is the under-strand.  The
 * sign is +1 when the over-strand runs arcs[3] -> arcs[1].
 *
 *          arcs[2]
 *             |
 *   arcs[3] --|--> arcs[1]      (positive crossing)
 *             |
 *          arcs[0]
 *
 * Components with no crossings are counted in `free_loops`.
 */

#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "subraid/error.hpp"

namespace subraid::braid {

struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  /// Slot through which the over-strand enters.
  int over_in_slot() const noexcept { return sign > 0 ? 3 : 1; }
  int over_out_slot() const noexcept { return sign > 0 ? 1 : 3; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;
  int components = 0;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  int arc_count() const noexcept { return 2 * crossing_count(); }
  bool is_knot() const noexcept { return components == 1; }

  int writhe() const noexcept {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
  }
  int positive_crossings() const noexcept {
    int n = 0;
    for (const auto& c : crossings) n += c.sign > 0;
    return n;
  }
  int negative_crossings() const noexcept { return crossing_count() - positive_crossings(); }

  std::string to_string() const {
    std::string out;
    for (const auto& c : crossings) {
      out += "X[" + std::to_string(c.arcs[0]) + "," + std::to_string(c.arcs[1]) + "," +
             std::to_string(c.arcs[2]) + "," + std::to_string(c.arcs[3]) + "]" +
             (c.sign > 0 ? "+" : "-") + " ";
    }
    out += "loops=" + std::to_string(free_loops);
    return out;
  }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

namespace detail {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto& px = parent[static_cast<std::size_t>(x)];
    px = parent[static_cast<std::size_t>(px)];
    x = px;
  }
  return x;
}

/// Component count induced by the arc pairing (under and over strands).
inline int arc_cycles(const PlanarDiagram& d) {
  const int n = d.arc_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  int cycles = n;
  auto unite = [&](int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --cycles;
    }
  };
  for (const auto& c : d.crossings) {
    unite(c.arcs[0], c.arcs[2]);
    unite(c.arcs[1], c.arcs[3]);
  }
  return cycles;
}

}  // namespace detail

/// Checks the PD invariants; throws with a description on failure.
inline void validate(const PlanarDiagram& d) {
  const int n = d.arc_count();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& c : d.crossings) {
    if (c.sign != 1 && c.sign != -1) throw Error("crossing sign must be +1 or -1");
    for (int a : c.arcs) {
      if (a < 0 || a >= n) throw Error("arc id " + std::to_string(a) + " out of range");
      ++seen[static_cast<std::size_t>(a)];
    }
  }
  for (int k = 0; k < n; ++k)
    if (seen[static_cast<std::size_t>(k)] != 2)
      throw Error("arc " + std::to_string(k) + " occurs " + std::to_string(seen[static_cast<std::size_t>(k)]) +
                  " times");
  if (d.components != detail::arc_cycles(d) + d.free_loops) throw Error("component count mismatch");
}

/// Mirror image: every crossing switched.
inline PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram out = d;
  for (auto& c : out.crossings) {
    const auto a = c.arcs;
    if (c.sign > 0) c.arcs = {a[3], a[0], a[1], a[2]};
    else c.arcs = {a[1], a[2], a[3], a[0]};
    c.sign = -c.sign;
  }
  return out;
}

/**
 * Assembles a diagram from segments and unoriented crossings.
 *
 * Crossings are given by the four segments meeting them in counterclockwise
 * order with slots 0 and 2 on the under-strand.  Segments are glued with
 * join().  finish() orients every component by traversal (starting, when
 * possible, at a slot flagged as incoming) and labels arcs in traversal order.
 */
class DiagramBuilder {
 public:
  int new_segment() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  void join(int a, int b) {
    a = detail::find_root(parent_, a);
    b = detail::find_root(parent_, b);
    if (a != b) parent_[static_cast<std::size_t>(a)] = b;
  }

  /// `incoming` marks slots that are entry points for the preferred orientation.
  void add_crossing(std::array<int, 4> segments, std::array<bool, 4> incoming = {false, false, false, false}) {
    slots_.push_back(segments);
    incoming_.push_back(incoming);
  }

  int crossing_count() const noexcept { return static_cast<int>(slots_.size()); }

  PlanarDiagram finish() {
    const std::size_t nc = slots_.size();
    // segment class -> its two (crossing, slot) occurrences
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (std::size_t c = 0; c < nc; ++c)
      for (int s = 0; s < 4; ++s) occ[root(slots_[c][static_cast<std::size_t>(s)])].emplace_back(static_cast<int>(c), s);
    std::vector<char> used_class(parent_.size(), 0);
    for (const auto& [cls, list] : occ) {
      if (list.size() != 2)
        throw Error("diagram segment meets " + std::to_string(list.size()) + " crossing slots");
      used_class[static_cast<std::size_t>(cls)] = 1;
    }

    PlanarDiagram d;
    d.crossings.resize(nc);
    for (std::size_t k = 0; k < parent_.size(); ++k)
      if (parent_[k] == static_cast<int>(k) && !used_class[k]) ++d.free_loops;

    std::vector<std::array<int, 4>> label(nc, {-1, -1, -1, -1});
    std::vector<std::array<char, 4>> entered(nc, {0, 0, 0, 0});  // slot is an entry
    std::vector<std::array<char, 4>> visited(nc, {0, 0, 0, 0});
    int next_arc = 0;
    int cycles = 0;

    auto partner = [&](int c, int s) {
      const auto& list = occ.at(root(slots_[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]));
      return list[0] == std::pair<int, int>{c, s} ? list[1] : list[0];
    };
    auto traverse = [&](int c0, int s0) {
      ++cycles;
      int c = c0, s = s0;
      do {
        const int out = (s + 2) % 4;
        visited[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = 1;
        visited[static_cast<std::size_t>(c)][static_cast<std::size_t>(out)] = 1;
        entered[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = 1;
        const int arc = next_arc++;
        label[static_cast<std::size_t>(c)][static_cast<std::size_t>(out)] = arc;
        const auto [nc2, ns] = partner(c, out);
        label[static_cast<std::size_t>(nc2)][static_cast<std::size_t>(ns)] = arc;
        c = nc2;
        s = ns;
      } while (!(c == c0 && s == s0));
    };
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t c = 0; c < nc; ++c)
        for (int s = 0; s < 4; ++s)
          if (!visited[c][static_cast<std::size_t>(s)] && (pass == 1 || incoming_[c][static_cast<std::size_t>(s)]))
            traverse(static_cast<int>(c), s);

    for (std::size_t c = 0; c < nc; ++c) {
      const int u = entered[c][0] ? 0 : 2;
      const auto& l = label[c];
      Crossing x;
      for (int k = 0; k < 4; ++k) x.arcs[static_cast<std::size_t>(k)] = l[static_cast<std::size_t>((u + k) % 4)];
      const int over_entry_slot = entered[c][1] ? 1 : 3;
      x.sign = ((over_entry_slot - u + 4) % 4 == 3) ? 1 : -1;
      d.crossings[c] = x;
    }
    d.components = cycles + d.free_loops;
    return d;
  }

 private:
  int root(int x) { return detail::find_root(parent_, x); }

  std::vector<int> parent_;
  std::vector<std::array<int, 4>> slots_;
  std::vector<std::array<bool, 4>> incoming_;
};

/// Connected sum of two knot diagrams, cut open at their last arcs.
inline PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (a.crossing_count() == 0) {
    PlanarDiagram out = b;
    out.free_loops += a.free_loops - 1;
    out.components += a.components - 1;
    return out;
  }
  if (b.crossing_count() == 0) return connected_sum(b, a);
  const int shift = a.arc_count();
  PlanarDiagram out;
  out.crossings = a.crossings;
  for (auto c : b.crossings) {
    for (int& x : c.arcs) x += shift;
    out.crossings.push_back(c);
  }
  // arc x of a and arc y of b: redirect their heads to each other
  const int x = a.arc_count() - 1, y = shift + b.arc_count() - 1;
  auto is_entry = [](const Crossing& c, int slot) { return slot == 0 || slot == c.over_in_slot(); };
  for (auto& c : out.crossings)
    for (int s = 0; s < 4; ++s) {
      auto& arc = c.arcs[static_cast<std::size_t>(s)];
      if (arc == x && is_entry(c, s)) arc = -2;
      else if (arc == y && is_entry(c, s)) arc = -3;
    }
  for (auto& c : out.crossings)
    for (int& arc : c.arcs) {
      if (arc == -2) arc = y;
      else if (arc == -3) arc = x;
    }
  out.free_loops = a.free_loops + b.free_loops;
  out.components = a.components + b.components - 1;
  return out;
}

}  // namespace subraid::braid
