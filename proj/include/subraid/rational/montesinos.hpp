#pragma once

/**
 * @file montesinos.hpp
 * @brief Rational tangles and the Montesinos knots K[q/p, 1/n, -q/p].
 *
 * A tangle has four ends NW, NE, SW, SE.  The 0 tangle is two horizontal
 * arcs, the infinity tangle two vertical ones.  Twisting the two east ends
 * once adds 1 to the fraction; twisting the two south ends once sends F to
 * 1/(1/F + 1).  Both twists use the crossing whose NW-SE strand is on top:
 *
 *     NW   NE
 *       \ /
 *        /        [+1]
 *       / \
 *     SW   SE
 *
 * K[q/p, 1/n, -q/p] is the numerator closure (NW joined to NE, SW to SE) of
 * the horizontal sum of the three tangles.
 */

#include <cstdlib>
#include <sstream>
#include <string>

#include "subraid/braid/planar_diagram.hpp"
#include "subraid/rational/two_bridge.hpp"

namespace subraid::rational {

struct MontesinosSpec {
  int p = 1;
  int q = 0;
  int n = 0;  // 0 encodes the 1/0 tangle

  TwoBridge two_bridge() const { return {p, q}; }
  std::string to_string() const {
    return std::to_string(q) + "/" + std::to_string(p) + ",1/" + std::to_string(n) + ",-" + std::to_string(q) +
           "/" + std::to_string(p);
  }
  friend bool operator==(const MontesinosSpec&, const MontesinosSpec&) = default;
};

/// Parses "q/p,1/n,-q/p".
inline MontesinosSpec parse_montesinos(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  std::stringstream ss(s);
  std::string a, b, c;
  if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ','))
    throw Error("Montesinos spec must look like q/p,1/n,-q/p: " + text);
  auto frac = [&](const std::string& f) {
    const auto slash = f.find('/');
    if (slash == std::string::npos) throw Error("bad tangle fraction '" + f + "'");
    try {
      return std::pair<int, int>(std::stoi(f.substr(0, slash)), std::stoi(f.substr(slash + 1)));
    } catch (const std::exception&) {
      throw Error("bad tangle fraction '" + f + "'");
    }
  };
  const auto [q1, p1] = frac(a);
  const auto [one, n] = frac(b);
  const auto [q2, p2] = frac(c);
  if (one != 1) throw Error("middle tangle must be 1/n: " + text);
  if (p1 != p2 || q2 != -q1) throw Error("outer tangles must be q/p and -q/p: " + text);
  MontesinosSpec m{p1, q1, n};
  check_two_bridge(m.two_bridge());
  return m;
}

/// A tangle under construction inside a DiagramBuilder.
class Tangle {
 public:
  int nw, ne, sw, se;

  static Tangle zero(braid::DiagramBuilder& b) {
    const int top = b.new_segment(), bottom = b.new_segment();
    return {top, top, bottom, bottom};
  }
  static Tangle infinity(braid::DiagramBuilder& b) {
    const int left = b.new_segment(), right = b.new_segment();
    return {left, right, left, right};
  }

  /// One crossing with the given corner segments; sign +1 has NW-SE on top.
  static void crossing(braid::DiagramBuilder& b, int nw, int ne, int sw, int se, int sign) {
    if (sign > 0) b.add_crossing({sw, se, ne, nw});
    else b.add_crossing({se, ne, nw, sw});
  }

  /// F -> F + k
  void twist_east(braid::DiagramBuilder& b, int k) {
    for (int r = 0; r < std::abs(k); ++r) {
      const int cnw = b.new_segment(), csw = b.new_segment(), cne = b.new_segment(), cse = b.new_segment();
      crossing(b, cnw, cne, csw, cse, k > 0 ? 1 : -1);
      b.join(cnw, ne);
      b.join(csw, se);
      ne = cne;
      se = cse;
    }
  }

  /// F -> 1/(1/F + k)
  void twist_south(braid::DiagramBuilder& b, int k) {
    for (int r = 0; r < std::abs(k); ++r) {
      const int cnw = b.new_segment(), csw = b.new_segment(), cne = b.new_segment(), cse = b.new_segment();
      crossing(b, cnw, cne, csw, cse, k > 0 ? 1 : -1);
      b.join(cnw, sw);
      b.join(cne, se);
      sw = csw;
      se = cse;
    }
  }

  /// Horizontal sum: this tangle to the left of o.
  Tangle plus(braid::DiagramBuilder& b, const Tangle& o) const {
    b.join(ne, o.nw);
    b.join(se, o.sw);
    return {nw, o.ne, sw, o.se};
  }

  void numerator_close(braid::DiagramBuilder& b) const {
    b.join(nw, ne);
    b.join(sw, se);
  }
};

/**
 * Tangle of fraction 1/[a_1, ..., a_k], i.e. q/p when [a_1..a_k] expands p/q.
 * Built inside out: from infinity (k odd) or 0 (k even), alternating south
 * and east twists and ending with a south twist by a_1.
 */
inline Tangle rational_tangle(braid::DiagramBuilder& b, const std::vector<int>& a) {
  const std::size_t k = a.size();
  Tangle t = (k % 2 == 1) ? Tangle::infinity(b) : Tangle::zero(b);
  for (std::size_t r = k; r-- > 0;) {
    // a_1 (r = 0) is a south twist, then alternate
    if (r % 2 == 0) t.twist_south(b, a[r]);
    else t.twist_east(b, a[r]);
  }
  return t;
}

/// Diagram of K[q/p, 1/n, -q/p]; n = 0 gives K(p/q) # -K(p/q).
inline braid::PlanarDiagram montesinos_diagram(const MontesinosSpec& m) {
  check_two_bridge(m.two_bridge());
  const std::vector<int> a = continued_fraction(m.p, m.q);
  std::vector<int> neg = a;
  for (int& x : neg) x = -x;
  braid::DiagramBuilder b;
  const Tangle left = rational_tangle(b, a);
  Tangle middle = Tangle::infinity(b);
  middle.twist_south(b, m.n);
  const Tangle right = rational_tangle(b, neg);
  left.plus(b, middle).plus(b, right).numerator_close(b);
  return b.finish();
}

}  // namespace subraid::rational
