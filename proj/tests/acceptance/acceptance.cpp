// End-to-end acceptance checks.  One PASS/FAIL line per criterion, details
// indented below it; exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "subraid/cli/app.hpp"

using namespace subraid;
using algebra::KhPolynomial;
using algebra::LaurentPoly;
using braid::BraidWord;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "ok    " : "FAIL  ") + what);
  }
  void note(const std::string& s) { notes.push_back("      " + s); }
};

const su::KnotTable& table() {
  static const su::KnotTable t = su::KnotTable::load_csv_file(std::string(SUBRAID_DATA_DIR) + "/knot_table.csv");
  return t;
}

su::SUBraid table_row(const std::string& name) {
  static const auto rows = su::load_su_rows_file(std::string(SUBRAID_DATA_DIR) + "/table1_su_braids.csv");
  for (const auto& r : rows)
    if (r.name == name) return r.braid;
  throw Error("no SU row " + name);
}

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::vector<int> w;
  std::uniform_int_distribution<int> gen(1, std::max(1, n - 1));
  for (int k = 0; k < len && n > 1; ++k) w.push_back(rng() % 2 ? gen(rng) : -gen(rng));
  return {n, w};
}

std::string str(const std::pair<int, int>& p) {
  return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

KhPolynomial unknot_kh() {
  KhPolynomial u;
  u.add(0, -1, 1);
  u.add(0, 1, 1);
  return u;
}

// ---------------------------------------------------------------------------

Outcome unknot_baseline() {
  Outcome o;
  const BraidWord e(1, {});
  o.check(khovanov::kh_ranks(e).ranks == unknot_kh(), "Kh of the empty closure is q^-1 + q");
  o.check(khovanov::kh_ranks(braid::PlanarDiagram{}).ranks == unknot_kh(), "Kh of the empty diagram is q^-1 + q");
  o.check(rational::kh_formula({1, 0, 3}, LaurentPoly(1)) == unknot_kh(), "closed formula for p = 1");
  const auto v = jones::jones_closure(e);
  o.check(v == LaurentPoly(1), "V = 1");
  o.check(jones::determinant(v) == 1, "det = 1");
  return o;
}

Outcome doubled_nine_one() {
  Outcome o;
  const LaurentPoly v91 = jones::jones_closure(table().record("9_1").reference_braid);
  const LaurentPoly got = jones::connected_sum(v91, jones::mirror(v91));
  // reference coefficients of q^-18, q^-16, ..., q^18
  const std::vector<int> ref{1, 1, -2, 3, -4, 5, -6, 7, -7, 9, -7, 7, -6, 5, -4, 3, -2, 1, -1};
  std::vector<LaurentPoly::Term> t;
  for (std::size_t k = 0; k < ref.size(); ++k) t.emplace_back(-18 + 2 * static_cast<int>(k), ref[k]);
  const LaurentPoly expected = LaurentPoly::from_terms(t);
  o.note("computed  " + got.to_string());
  o.note("reference " + expected.to_string());
  int differ = 0;
  for (int e = -18; e <= 18; e += 2)
    if (got.coeff(e) != expected.coeff(e)) {
      ++differ;
      o.note("q^" + std::to_string(e) + ": computed " + got.coeff(e).str() + ", reference " + expected.coeff(e).str());
    }
  o.check(got.term_count() == 19, "19 terms");
  o.check(got == jones::mirror(got), "computed polynomial is symmetric under q -> 1/q");
  o.check(differ == 0, "coefficient-for-coefficient agreement with the reference (" + std::to_string(differ) +
                           " differ)");
  return o;
}

Outcome extrema() {
  Outcome o;
  const auto v91 = su::doubled_jones({9, 1});
  const auto v94 = su::doubled_jones({9, 4});
  const std::vector<std::tuple<int, int, int, int>> want{{9, 1, 0, 19}, {9, 1, 2, 23}, {9, 4, 0, 13}, {9, 4, 2, 17}};
  for (const auto& [p, q, n, qmax] : want) {
    const auto k = rational::kh_formula({p, q, n}, q == 1 ? v91 : v94);
    o.check(k.q_max() == qmax, "q_max K[" + rational::MontesinosSpec{p, q, n}.to_string() + "] = " +
                                   std::to_string(k.q_max()) + " (want " + std::to_string(qmax) + ")");
  }
  const auto b = table_row("10_99");
  const auto t0 = std::chrono::steady_clock::now();
  const auto f = su::fingerprint(b.word());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(f.kh.has_value() && f.crossings == 16, "10_99 SU braid closure has 16 crossings, Kh computed");
  if (f.kh) {
    const auto e = std::pair<int, int>(f.kh->q_max(), f.kh->q_min());
    o.check(e == std::pair<int, int>(11, -11), "10_99 (q_max, q_min) = " + str(e));
    o.check(secs <= 120.0, "Kh of the 16-crossing closure in " + std::to_string(secs) + " s (limit 120)");
    o.check(!su::obstruct_bs3(f).possible, "obstruct_bs3(10_99) obstructed");
  }
  const auto& g = table().fingerprint_of("10_123");
  o.check(!su::obstruct_bs3(g).possible, "obstruct_bs3(10_123) obstructed");
  return o;
}

Outcome candidate_sets() {
  Outcome o;
  auto same = [](const std::vector<rational::TwoBridge>& got, const std::vector<rational::TwoBridge>& want) {
    if (got.size() != want.size()) return false;
    for (const auto& w : want)
      if (std::none_of(got.begin(), got.end(), [&](const auto& x) { return rational::same_knot(x, w, true); }))
        return false;
    return true;
  };
  auto show = [](const std::vector<rational::TwoBridge>& v) {
    std::string s;
    for (const auto& t : v) s += " " + t.to_string();
    return s;
  };
  const auto c81 = rational::partial_knot_candidates(81).knots;
  const auto c121 = rational::partial_knot_candidates(121).knots;
  const auto c1 = rational::partial_knot_candidates(1).knots;
  o.check(same(c81, {{9, 1}, {9, 4}}), "det 81 gives the classes of 9/1, 9/4; canonical:" + show(c81));
  o.check(same(c121, {{11, 1}, {11, 3}, {11, 5}}),
          "det 121 gives the classes of 11/1, 11/3, 11/5; canonical:" + show(c121));
  o.check(c1.size() == 1 && c1[0].is_unknot(), "det 1 gives the unknot only");
  return o;
}

Outcome table_rows() {
  Outcome o;
  const std::vector<std::string> names{"6_1",  "8_8",    "8_9",    "8_20", "9_27", "9_46",
                                       "10_48", "10_129", "10_155", "10_99", "11n50", "11n132"};
  for (const auto& n : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = su::verify_row(table(), {n, table_row(n)});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << std::left << std::setw(7) << n << " " << std::setw(2) << r.crossings << " crossings, "
       << (r.kh_computed ? "det+Jones+Kh" : "det+Jones") << ", " << std::fixed << std::setprecision(1) << secs
       << " s";
    if (!r.error.empty()) os << " " << r.error;
    o.check(r.match, os.str());
  }
  return o;
}

Outcome search_reproduction() {
  Outcome o;
  auto search = [&](const std::string& target, const std::string& n, const std::string& expect) {
    const std::vector<std::string> args{"sukh", "--n", n, "--gamma-max", "3", "search", target};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    const bool found = out.str().find(expect) != std::string::npos;
    std::istringstream is(out.str());
    std::string first;
    std::getline(is, first);
    o.check(code == 0 && found, target + ": found \"" + expect + "\" (first hit " + first + ")");
  };
  search("8_20", "3", "n=3 γ=1 1 1, C1=2, C2=2");
  search("6_1", "4", "n=4 γ=2 -1 2, C1=3, C2=1 -3");
  return o;
}

Outcome qsum_suite() {
  Outcome o;
  const auto s = su::qsum_obstruction(su::fingerprint(table_row("6_1").word()));
  o.check(std::abs(s.sum) == 4 && s.verdict == "none", "6_1: sum " + std::to_string(s.sum) + " -> " + s.verdict);
  const auto e = su::qsum_obstruction(su::fingerprint(BraidWord(3, {1, -2, 1, -2})));
  o.check(e.sum == 0, "figure-eight: sum " + std::to_string(e.sum));
  int knots = 0, bad = 0;
  std::map<int, int> seen;
  for (int len = 0; len <= 4; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    const int alphabet[] = {-2, -1, 1, 2};
    for (;;) {
      std::vector<int> g;
      for (int i : idx) g.push_back(alphabet[i]);
      for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
          const auto w = threebraid::family_A_construct(BraidWord(3, g), e1, e2).word;
          if (braid::closure_components(w) != 1) continue;
          ++knots;
          const auto k = khovanov::kh_ranks(w).ranks;
          const int sum = k.q_max() + k.q_min();
          ++seen[sum];
          if (sum != 0 && sum != 8 && sum != -8) {
            ++bad;
            if (bad <= 5) o.note("sum " + std::to_string(sum) + " for gamma = " + BraidWord(3, g).to_string());
          }
        }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == 4) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  std::string dist;
  for (const auto& [sum, c] : seen) dist += " " + std::to_string(sum) + ":" + std::to_string(c);
  o.note("sums over " + std::to_string(knots) + " knots:" + dist);
  o.check(knots > 0 && bad == 0, "every gamma s2^e gamma^-1 s2^e' knot with |gamma| <= 4 has sum in {0, 8, -8}");
  return o;
}

Outcome formula_vs_cube() {
  Outcome o;
  int cases = 0, bad = 0;
  for (int p : {3, 5})
    for (int q = 1; q < p; ++q)
      for (int n = -2; n <= 2; ++n) {
        const rational::MontesinosSpec m{p, q, n};
        const auto f = rational::kh_formula(m, su::doubled_jones(m.two_bridge()));
        const auto c = khovanov::kh_ranks(rational::montesinos_diagram(m)).ranks;
        ++cases;
        if (f != c) {
          ++bad;
          o.note("differs for " + m.to_string());
        }
      }
  o.check(bad == 0, std::to_string(cases) + " Montesinos specs, full rank tables equal");
  return o;
}

Outcome properties() {
  Outcome o;
  constexpr int cases = 1000;
  {
    std::mt19937 rng(101);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
      threebraid::IntString s(1 + rng() % 12);
      for (int& e : s) e = 2 + static_cast<int>(rng() % 5);
      bad += threebraid::linear_dual(threebraid::linear_dual(s)) != s;
    }
    o.check(bad == 0, "linear dual involution, " + std::to_string(cases) + " strings (seed 101)");
  }
  {
    std::mt19937 rng(102);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
      const auto w = random_word(rng, 2 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 11));
      const auto k = khovanov::kh_ranks(w).ranks;
      bad += k.euler_characteristic() != jones::unnormalized_jones(jones::jones_closure(w));
    }
    o.check(bad == 0, "Euler characteristic of Kh equals (q + 1/q) V(-q), " + std::to_string(cases) +
                          " closures (seed 102)");
  }
  {
    std::mt19937 rng(103);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
      const auto w = random_word(rng, 2 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 15));
      bad += jones::jones_closure(w) != jones::jones_diagram(braid::standard_closure(w));
    }
    o.check(bad == 0, "Temperley-Lieb Jones equals the state sum, " + std::to_string(cases) +
                          " closures up to 14 crossings (seed 103)");
  }
  {
    std::mt19937 rng(104);
    int bad = 0, done = 0;
    while (done < cases) {
      const int n = 1 + static_cast<int>(rng() % 4);
      std::vector<int> s1(su::template_generators(n, 1).size()), s2(su::template_generators(n, 2).size());
      for (int& x : s1) x = rng() % 2 ? 1 : -1;
      for (int& x : s2) x = rng() % 2 ? 1 : -1;
      const su::SUBraid b(n, random_word(rng, n, static_cast<int>(rng() % 7)), s1, s2);
      if (!b.is_knot()) continue;
      ++done;
      const auto d = jones::determinant(jones::jones_closure(b.word()));
      const auto p = jones::determinant(jones::jones_plat(b.plat_gamma()));
      bad += d != p * p;
    }
    o.check(bad == 0, "det(SU closure) = det(partial knot)^2, " + std::to_string(cases) + " knots (seed 104)");
  }
  {
    std::mt19937 rng(105);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
      const auto w = random_word(rng, 2 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 10));
      bad += khovanov::kh_ranks(w.mirrored()).ranks != khovanov::kh_ranks(w).ranks.reflected();
    }
    o.check(bad == 0, "mirror reflects the Kh table, " + std::to_string(cases) + " closures (seed 105)");
  }
  {
    std::mt19937 rng(106);
    int bad = 0;
    for (int it = 0; it < cases; ++it)
      bad += !threebraid::verify_family1_rewrite(random_word(rng, 3, static_cast<int>(rng() % 9)));
    o.check(bad == 0, "family 1 rewrite holds in B_3, " + std::to_string(cases) + " words (seed 106)");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, double, std::function<Outcome()>>> criteria{
      {1, "unknot baseline", 1, unknot_baseline},
      {2, "Jones polynomial of 9_1 # -9_1", 1, doubled_nine_one},
      {3, "Khovanov extrema and 3-braid obstructions for 10_99, 10_123", 180, extrema},
      {4, "partial knot candidate sets", 1, candidate_sets},
      {5, "SU braid table rows match their knots", 600, table_rows},
      {6, "search rediscovers SU braids for 8_20 and 6_1", 300, search_reproduction},
      {7, "q_max + q_min on 3-braid SU knots", 600, qsum_suite},
      {8, "closed Khovanov formula against the cube", 600, formula_vs_cube},
      {9, "randomized property suites", 900, properties},
  };
  int failed = 0;
  for (const auto& [id, title, budget, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget) o.check(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(budget) + " s");
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
    failed += !o.ok;
  }
  std::cout << (9 - failed) << "/9 criteria passed\n";
  return failed ? 1 : 0;
}
