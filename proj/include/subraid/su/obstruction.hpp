#pragma once

/**
 * @file obstruction.hpp
 * @brief Khovanov obstructions to symmetric 3-braid presentations.
 *
 * A knot with an SU braid of index 3 has the Khovanov homology of
 * K[q/p, 1/n, -q/p] for n in {0, 2, -2} and some two-bridge K_{p,q} with
 * p^2 = det.  Such knots also satisfy q_max + q_min in {0, 8, -8}.
 */

#include <string>
#include <vector>

#include "subraid/rational/kh_formula.hpp"
#include "subraid/rational/montesinos.hpp"
#include "subraid/rational/two_bridge.hpp"
#include "subraid/su/fingerprint.hpp"

namespace subraid::su {

struct CandidateComparison {
  rational::TwoBridge partial;
  int n = 0;
  KhPolynomial table;
  bool match = false;
};

struct Bs3Verdict {
  bool possible = false;
  std::string reason;
  std::vector<CandidateComparison> compared;
};

/// V(K_{p,q} # -K_{p,q}).
inline LaurentPoly doubled_jones(const rational::TwoBridge& t) {
  if (t.is_unknot()) return LaurentPoly(1);
  const LaurentPoly v = jones::jones_plat(rational::fourplat_braid(t));
  return v * jones::mirror(v);
}

inline Bs3Verdict obstruct_bs3(const Fingerprint& k) {
  if (!k.kh) throw Error("obstruct_bs3 needs Khovanov ranks in the fingerprint");
  Bs3Verdict out;
  const auto cands = k.det > 0 ? rational::partial_knot_candidates(static_cast<long long>(k.det))
                               : rational::CandidateSet{{}, false, "determinant 0"};
  if (!cands.square) {
    out.reason = "det " + k.det.str() + " is not the square of an odd integer (" + cands.diagnostic + ")";
    return out;
  }
  for (const auto& t : cands.knots) {
    const LaurentPoly v = doubled_jones(t);
    for (int n : {0, 2, -2}) {
      CandidateComparison c;
      c.partial = t;
      c.n = n;
      c.table = rational::kh_formula({t.p, t.q, n}, v);
      c.match = c.table == *k.kh;
      out.possible = out.possible || c.match;
      out.compared.push_back(std::move(c));
    }
  }
  if (!out.possible) {
    out.reason = "Khovanov table matches none of the " + std::to_string(out.compared.size()) +
                 " candidate Montesinos tables";
  } else {
    for (const auto& c : out.compared)
      if (c.match) {
        out.reason = "matches K[" + rational::MontesinosSpec{c.partial.p, c.partial.q, c.n}.to_string() + "]";
        break;
      }
  }
  return out;
}

struct QsumVerdict {
  int sum = 0;
  std::string verdict;  // "0", "+8", "-8" or "none"
};

/// Sign of a nonzero sum depends on the mirror chosen by the fingerprint.
inline QsumVerdict qsum_obstruction(const Fingerprint& k) {
  if (!k.kh) throw Error("qsum_obstruction needs Khovanov ranks in the fingerprint");
  QsumVerdict v;
  v.sum = k.kh->q_max() + k.kh->q_min();
  if (v.sum == 0) v.verdict = "0";
  else if (v.sum == 8) v.verdict = "+8";
  else if (v.sum == -8) v.verdict = "-8";
  else v.verdict = "none";
  return v;
}

struct Det1Verdict {
  bool applies = false;
  int slice_braid_index_bound = 0;  // lower bound for b(K) when K is slice, 0 if none
  std::string conclusion;
};

inline Det1Verdict chiral_det1_obstruction(const Integer& det, bool chiral) {
  Det1Verdict v;
  if (det != 1) {
    v.conclusion = "no conclusion: det != 1";
  } else if (!chiral) {
    v.conclusion = "no conclusion: knot is not chiral";
  } else {
    v.applies = true;
    v.slice_braid_index_bound = 4;
    v.conclusion = "if b(K) <= 3 then K has infinite concordance order; any slice such K has b(K) >= 4";
  }
  return v;
}

}  // namespace subraid::su
