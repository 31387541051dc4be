#pragma once

/**
 * @file search.hpp
 * @brief Enumeration of SU braids whose closure matches a target knot.
 *
 * gamma runs over free-reduced words by length, then lexicographically.
 * Words ending in a C_1 generator or starting with a C_2 generator are
 * skipped: those letters commute with C_1 (resp. C_2) and only conjugate the
 * result.  Optionally, index-4 candidates are seeded by 4-plat words of
 * mixed-sign continued fractions of the possible partial knots.
 */

#include <algorithm>
#include <set>
#include <thread>
#include <vector>

#include "subraid/rational/two_bridge.hpp"
#include "subraid/su/knot_table.hpp"
#include "subraid/su/su_braid.hpp"

namespace subraid::su {

struct SearchOptions {
  int n_min = 1;
  int n_max = 4;
  int gamma_max_len = 6;
  int workers = 1;
  int kh_cap = khovanov::default_kh_cap;
  bool cf_seeding = false;
  int cf_max_len = 6;  // expansion length for seeding
  std::size_t max_results = 0;  // 0 keeps everything
};

inline constexpr int search_hard_max_index = 8;
inline constexpr int search_hard_max_length = 14;

/// Free-reduced words in B_n of length exactly len, in lexicographic order.
inline std::vector<BraidWord> enumerate_words(int n, int len) {
  std::vector<int> alphabet;
  for (int e = -(n - 1); e <= n - 1; ++e)
    if (e != 0) alphabet.push_back(e);
  std::vector<BraidWord> out;
  if (len == 0) {
    out.emplace_back(n, std::vector<int>{});
    return out;
  }
  if (alphabet.empty()) return out;
  std::vector<int> w;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == len) {
      out.emplace_back(n, w);
      return;
    }
    for (int e : alphabet) {
      if (!w.empty() && w.back() == -e) continue;
      w.push_back(e);
      self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace detail {

inline bool redundant_gamma(const BraidWord& g, int n) {
  if (g.empty()) return false;
  const auto c1 = template_generators(n, 1), c2 = template_generators(n, 2);
  const int last = std::abs(g.letters().back()), first = std::abs(g.letters().front());
  return std::find(c1.begin(), c1.end(), last) != c1.end() || std::find(c2.begin(), c2.end(), first) != c2.end();
}

inline std::vector<std::vector<int>> all_signs(std::size_t k) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> s(k);
    for (std::size_t b = 0; b < k; ++b) s[b] = (mask >> b) & 1u ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

struct Candidate {
  int n;
  BraidWord gamma;
};

/// Tests every sign choice for one gamma against the target.
inline void test_candidate(const Candidate& c, const Fingerprint& target, const Fingerprint& target_jones,
                           int kh_cap, std::vector<SUBraid>& hits) {
  const auto s1 = all_signs(template_generators(c.n, 1).size());
  const auto s2 = all_signs(template_generators(c.n, 2).size());
  for (const auto& a : s1)
    for (const auto& b : s2) {
      SUBraid cand(c.n, c.gamma, a, b);
      if (!cand.is_knot()) continue;
      const BraidWord w = cand.word();
      if (!jones_fingerprint(w).matches(target_jones)) continue;
      if (target.kh) {
        const BraidWord s = braid::simplify(w);
        if (static_cast<int>(s.length()) <= kh_cap && !fingerprint(s, kh_cap).matches(target)) continue;
      }
      hits.push_back(std::move(cand));
    }
}

}  // namespace detail

inline std::vector<SUBraid> search_su_braids(const KnotTable& table, const std::string& target_name,
                                             const SearchOptions& opt) {
  if (opt.n_min < 1 || opt.n_max < opt.n_min || opt.n_max > search_hard_max_index)
    throw Error("index range must satisfy 1 <= n_min <= n_max <= " + std::to_string(search_hard_max_index));
  if (opt.gamma_max_len < 0 || opt.gamma_max_len > search_hard_max_length)
    throw Error("gamma length must lie in [0, " + std::to_string(search_hard_max_length) + "]");
  const Fingerprint& target_jones = table.jones_fingerprint_of(target_name);
  const Fingerprint& target = table.fingerprint_of(target_name);

  std::vector<detail::Candidate> cands;
  std::set<std::pair<int, BraidWord>> seen;
  auto push = [&](int n, const BraidWord& g) {
    if (detail::redundant_gamma(g, n)) return;
    if (seen.emplace(n, g).second) cands.push_back({n, g});
  };
  for (int n = opt.n_min; n <= opt.n_max; ++n)
    for (int len = 0; len <= opt.gamma_max_len; ++len)
      for (const auto& g : enumerate_words(n, len)) push(n, g);
  if (opt.cf_seeding && opt.n_min <= 4 && 4 <= opt.n_max && target.det > 0) {
    const auto parts = rational::partial_knot_candidates(static_cast<long long>(target.det));
    for (const auto& t : parts.knots) {
      if (t.is_unknot()) continue;
      for (int q : rational::two_bridge_class(t, true))
        for (const auto& e : rational::mixed_continued_fractions(t.p, q, static_cast<std::size_t>(opt.cf_max_len)))
          push(4, braid::free_reduce(rational::fourplat_from_expansion(e)));
    }
  }

  const int workers = std::max(1, opt.workers);
  std::vector<std::vector<SUBraid>> shard_hits(static_cast<std::size_t>(workers));
  auto run = [&](int shard) {
    for (std::size_t k = static_cast<std::size_t>(shard); k < cands.size(); k += static_cast<std::size_t>(workers))
      detail::test_candidate(cands[k], target, target_jones, opt.kh_cap, shard_hits[static_cast<std::size_t>(shard)]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < workers; ++s) pool.emplace_back(run, s);
    for (auto& t : pool) t.join();
  }
  std::vector<SUBraid> hits;
  for (auto& h : shard_hits) hits.insert(hits.end(), h.begin(), h.end());
  std::sort(hits.begin(), hits.end());
  if (opt.max_results && hits.size() > opt.max_results) hits.erase(hits.begin() + static_cast<std::ptrdiff_t>(opt.max_results), hits.end());
  return hits;
}

}  // namespace subraid::su
