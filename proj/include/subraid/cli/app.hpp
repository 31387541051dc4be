#pragma once

/**
 * @file app.hpp
 * @brief The sukh command line: argument handling, configuration and reports.
 *
 * Exit codes: 0 success, 1 a mismatch or obstruction was found, 2 usage or
 * input error.  Every flag can also be set through an environment variable
 * SUKH_<FLAG>, e.g. SUKH_KH_CAP=14.  Output is aligned text, or JSON lines
 * with --json.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subraid/rational/montesinos.hpp"
#include "subraid/su/obstruction.hpp"
#include "subraid/su/search.hpp"
#include "subraid/su/verify.hpp"
#include "subraid/threebraid/family.hpp"

#ifndef SUBRAID_DATA_DIR
#define SUBRAID_DATA_DIR "data"
#endif

namespace subraid::cli {

using json = nlohmann::ordered_json;

struct Config {
  int kh_crossing_cap = khovanov::default_kh_cap;
  int jones_statesum_cap = jones::default_statesum_cap;
  int n_min = 1;
  int n_max = 4;
  int gamma_max_len = 6;
  int workers = 1;
  std::string table_path = std::string(SUBRAID_DATA_DIR) + "/knot_table.csv";
  bool json_output = false;

  void validate() const {
    if (kh_crossing_cap < 1 || kh_crossing_cap > khovanov::hard_kh_limit)
      throw Error("--kh-cap must lie in [1, " + std::to_string(khovanov::hard_kh_limit) + "]");
    if (jones_statesum_cap < 1 || jones_statesum_cap > 30) throw Error("state-sum cap must lie in [1, 30]");
    if (n_min < 1 || n_max < n_min || n_max > su::search_hard_max_index)
      throw Error("--n must be an index or range within [1, " + std::to_string(su::search_hard_max_index) + "]");
    if (gamma_max_len < 0 || gamma_max_len > su::search_hard_max_length)
      throw Error("--gamma-max must lie in [0, " + std::to_string(su::search_hard_max_length) + "]");
    if (workers < 1 || workers > 256) throw Error("--workers must lie in [1, 256]");
  }
};

/// "3" or "2-4" or "2..4".
inline std::pair<int, int> parse_index_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw Error("bad index range '" + text + "'");
    }
    if (used != s.size()) throw Error("bad index range '" + text + "'");
    return v;
  };
  for (const std::string sep : {"..", "-"}) {
    auto pos = text.find(sep, 1);
    if (pos != std::string::npos) return {to_int(text.substr(0, pos)), to_int(text.substr(pos + sep.size()))};
  }
  const int v = to_int(text);
  return {v, v};
}

namespace detail {

inline json kh_json(const algebra::KhPolynomial& k) {
  json rows = json::array();
  for (const auto& [ij, r] : k.ranks()) rows.push_back({ij.first, ij.second, r});
  return rows;
}

/// Rank grid: one line per quantum degree j (descending), one column per i.
inline std::string kh_grid(const algebra::KhPolynomial& k) {
  if (k.empty()) return "  (empty)\n";
  int imin = 0, imax = 0;
  bool first = true;
  for (const auto& [ij, r] : k.ranks()) {
    imin = first ? ij.first : std::min(imin, ij.first);
    imax = first ? ij.first : std::max(imax, ij.first);
    first = false;
  }
  std::ostringstream os;
  os << "  j\\i";
  for (int i = imin; i <= imax; ++i) os << std::setw(4) << i;
  os << '\n';
  const int step = (k.q_max() - k.q_min()) % 2 == 0 ? 2 : 1;
  for (int j = k.q_max(); j >= k.q_min(); j -= step) {
    os << std::setw(5) << j;
    for (int i = imin; i <= imax; ++i) {
      const auto r = k.rank(i, j);
      if (r) os << std::setw(4) << r;
      else os << std::setw(4) << '.';
    }
    os << '\n';
  }
  return os.str();
}

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

inline void kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(14) << key << value << '\n';
}

inline std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

}  // namespace detail

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Symmetric union braids, Jones and Khovanov invariants", "sukh"};
    app.require_subcommand(1);
    std::string n_text;
    app.add_option("--kh-cap", cfg_.kh_crossing_cap, "Khovanov crossing cap")->envname("SUKH_KH_CAP");
    app.add_option("--statesum-cap", cfg_.jones_statesum_cap, "state-sum Jones crossing cap")
        ->envname("SUKH_STATESUM_CAP");
    app.add_option("--n", n_text, "braid index or range, e.g. 4 or 2-4")->envname("SUKH_N");
    app.add_option("--gamma-max", cfg_.gamma_max_len, "maximal length of gamma")->envname("SUKH_GAMMA_MAX");
    app.add_option("--workers", cfg_.workers, "worker threads for search")->envname("SUKH_WORKERS");
    app.add_option("--table", cfg_.table_path, "reference knot table (CSV)")->envname("SUKH_TABLE");
    app.add_flag("--json", cfg_.json_output, "JSON lines output")->envname("SUKH_JSON");

    std::string braid_text, target, spec, su_path, rows_sel, classify_input;
    std::optional<int> strands;
    bool compact = false, cube = false, cf_seed = false, as_string = false, as_braid = false;
    std::size_t max_results = 0;

    auto* inv = app.add_subcommand("invariants", "det, Jones, breadth and Khovanov ranks of a braid closure");
    inv->add_option("braid", braid_text, "braid word, e.g. \"1 -2 1\"");
    inv->add_option("--strands", strands, "braid index (default max|letter| + 1)");
    inv->add_flag("--compact", compact, "one digit per letter, '-' inverts the next digit");

    auto* obs = app.add_subcommand("obstruct", "Khovanov obstructions to a symmetric 3-braid");
    obs->add_option("knot", target, "table name or braid word")->required();

    auto* sea = app.add_subcommand("search", "search SU braids closing to a table knot");
    sea->add_option("target", target, "table name")->required();
    sea->add_flag("--cf-seed", cf_seed, "seed index-4 gamma by continued fractions");
    sea->add_option("--max-results", max_results, "keep only the first results (0 keeps all)");

    auto* ver = app.add_subcommand("verify-table", "recheck SU braids against the reference table");
    su_path = std::string(SUBRAID_DATA_DIR) + "/table1_su_braids.csv";
    ver->add_option("path", su_path, "CSV with columns name,n,gamma,c1,c2");
    rows_sel = "all";
    ver->add_option("--rows", rows_sel, "all, small (closure within the Kh cap) or a comma list of names");

    auto* mon = app.add_subcommand("montesinos", "closed Khovanov polynomial of K[q/p,1/n,-q/p]");
    mon->add_option("spec", spec, "q/p,1/n,-q/p")->required();
    mon->add_flag("--cube", cube, "also compute the cube of resolutions and compare");

    auto* cls = app.add_subcommand("classify3", "3-braid families from a braid word or a string");
    cls->add_option("input", classify_input, "braid word in B_3, or comma separated string")->required();
    cls->add_flag("--string", as_string, "read the input as a string");
    cls->add_flag("--braid", as_braid, "read the input as a braid word");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      return app.exit(e, out_, err_) == 0 ? 0 : 2;
    }

    try {
      if (!n_text.empty()) std::tie(cfg_.n_min, cfg_.n_max) = parse_index_range(n_text);
      cfg_.validate();
      if (*inv) return cmd_invariants(braid_text, strands, compact);
      if (*obs) return cmd_obstruct(target);
      if (*sea) return cmd_search(target, cf_seed, max_results);
      if (*ver) return cmd_verify_table(su_path, rows_sel);
      if (*mon) return cmd_montesinos(spec, cube);
      if (*cls) return cmd_classify3(classify_input, as_string, as_braid);
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return 2;
    }
    return 2;
  }

  const Config& config() const noexcept { return cfg_; }

 private:
  const su::KnotTable& table() {
    if (!table_) table_ = std::make_unique<su::KnotTable>(su::KnotTable::load_csv_file(cfg_.table_path, cfg_.kh_crossing_cap));
    return *table_;
  }

  int cmd_invariants(const std::string& text, std::optional<int> strands, bool compact) {
    const braid::BraidWord w = braid::parse_braid_word(text, strands, compact);
    const braid::BraidWord s = braid::simplify(w);
    const auto d = braid::standard_closure(s);
    const auto v = jones::jones_closure(s);
    json j;
    j["braid"] = w.to_string();
    j["strands"] = w.strands();
    j["components"] = braid::closure_components(w);
    j["simplified_crossings"] = d.crossing_count();
    j["det"] = jones::determinant(v).str();
    j["jones"] = v.to_string();
    j["breadth"] = jones::breadth(v);
    std::string warning;
    try {
      const auto kh = khovanov::kh_ranks(d, cfg_.kh_crossing_cap);
      const auto [qmax, qmin] = khovanov::kh_extrema(kh);
      j["q_max"] = qmax;
      j["q_min"] = qmin;
      j["kh"] = detail::kh_json(kh.ranks);
      kh_ = kh.ranks;
    } catch (const CapExceeded& e) {
      warning = e.what();
      j["warning"] = warning;
      kh_.reset();
    }
    if (cfg_.json_output) {
      detail::emit(out_, j);
    } else {
      detail::kv(out_, "braid", w.to_string().empty() ? "(empty)" : w.to_string());
      detail::kv(out_, "strands", std::to_string(w.strands()));
      detail::kv(out_, "components", std::to_string(j["components"].get<int>()));
      detail::kv(out_, "crossings", std::to_string(d.crossing_count()) + " after simplification");
      detail::kv(out_, "det", j["det"].get<std::string>());
      detail::kv(out_, "jones", v.to_string());
      detail::kv(out_, "breadth", std::to_string(jones::breadth(v)));
      if (kh_) {
        detail::kv(out_, "q_max", std::to_string(kh_->q_max()));
        detail::kv(out_, "q_min", std::to_string(kh_->q_min()));
        out_ << "khovanov\n" << detail::kh_grid(*kh_);
      } else {
        detail::kv(out_, "warning", warning);
      }
    }
    return 0;
  }

  int cmd_obstruct(const std::string& target) {
    std::string name;
    braid::BraidWord w;
    std::optional<bool> chiral;
    const auto& t = table();
    if (t.contains(target)) {
      name = target;
      w = t.record(target).reference_braid;
      chiral = t.record(target).chiral;
    } else {
      try {
        w = braid::parse_braid_word(target);
      } catch (const Error&) {
        throw Error("unknown knot '" + target + "' (not in the table and not a braid word)");
      }
    }
    if (braid::closure_components(w) != 1) throw Error("closure of " + w.to_string() + " is not a knot");
    const su::Fingerprint f = su::fingerprint(w, cfg_.kh_crossing_cap);
    if (!f.kh)
      throw Error("simplified closure has " + std::to_string(f.crossings) + " crossings, above the Kh cap " +
                  std::to_string(cfg_.kh_crossing_cap));
    const auto bs3 = su::obstruct_bs3(f);
    const auto qs = su::qsum_obstruction(f);
    json j;
    j["knot"] = name.empty() ? w.to_string() : name;
    j["det"] = f.det.str();
    j["q_max"] = f.kh->q_max();
    j["q_min"] = f.kh->q_min();
    j["bs3"] = bs3.possible ? "possible" : "obstructed";
    j["reason"] = bs3.reason;
    json cands = json::array();
    for (const auto& c : bs3.compared)
      cands.push_back({{"partial", c.partial.to_string()},
                       {"n", c.n},
                       {"q_max", c.table.q_max()},
                       {"q_min", c.table.q_min()},
                       {"match", c.match}});
    j["candidates"] = cands;
    j["qsum"] = qs.sum;
    j["qsum_verdict"] = qs.verdict;
    if (chiral) {
      const auto d1 = su::chiral_det1_obstruction(f.det, *chiral);
      j["chiral"] = *chiral;
      j["det1"] = d1.conclusion;
    }
    if (cfg_.json_output) {
      detail::emit(out_, j);
    } else {
      detail::kv(out_, "knot", j["knot"].get<std::string>());
      detail::kv(out_, "det", f.det.str());
      detail::kv(out_, "q_max/q_min", std::to_string(f.kh->q_max()) + " / " + std::to_string(f.kh->q_min()));
      detail::kv(out_, "b_s <= 3", std::string(bs3.possible ? "possible" : "obstructed") + ": " + bs3.reason);
      for (const auto& c : bs3.compared)
        out_ << "  partial " << std::setw(6) << c.partial.to_string() << "  n=" << std::setw(2) << c.n
             << "  q_max " << std::setw(3) << c.table.q_max() << "  q_min " << std::setw(3) << c.table.q_min()
             << (c.match ? "  match" : "") << '\n';
      detail::kv(out_, "qsum", std::to_string(qs.sum) + " -> " + qs.verdict);
      if (chiral) detail::kv(out_, "det 1 test", j["det1"].get<std::string>());
    }
    return bs3.possible ? 0 : 1;
  }

  int cmd_search(const std::string& target, bool cf_seed, std::size_t max_results) {
    su::SearchOptions opt;
    opt.n_min = cfg_.n_min;
    opt.n_max = cfg_.n_max;
    opt.gamma_max_len = cfg_.gamma_max_len;
    opt.workers = cfg_.workers;
    opt.kh_cap = cfg_.kh_crossing_cap;
    opt.cf_seeding = cf_seed;
    opt.max_results = max_results;
    const auto hits = su::search_su_braids(table(), target, opt);
    for (const auto& h : hits) {
      if (cfg_.json_output) {
        detail::emit(out_, {{"target", target},
                            {"n", h.n()},
                            {"gamma", h.gamma().to_string()},
                            {"c1", h.c1().to_string()},
                            {"c2", h.c2().to_string()},
                            {"word", h.word().to_string()}});
      } else {
        out_ << "n=" << h.n() << " γ=" << h.gamma().to_string() << ", C1=" << h.c1().to_string()
             << ", C2=" << h.c2().to_string() << '\n';
      }
    }
    if (cfg_.json_output) detail::emit(out_, {{"target", target}, {"hits", hits.size()}});
    else out_ << hits.size() << " hit(s) for " << target << '\n';
    return hits.empty() ? 1 : 0;
  }

  int cmd_verify_table(const std::string& path, const std::string& rows_sel) {
    auto rows = su::load_su_rows_file(path);
    const auto& t = table();
    if (rows_sel == "small") {
      std::erase_if(rows, [&](const su::TableRow& r) {
        return static_cast<int>(braid::simplify(r.braid.word()).length()) > cfg_.kh_crossing_cap;
      });
    } else if (rows_sel != "all") {
      std::vector<std::string> names;
      std::istringstream is(rows_sel);
      for (std::string n; std::getline(is, n, ',');)
        if (!n.empty()) names.push_back(n);
      for (const auto& n : names)
        if (std::none_of(rows.begin(), rows.end(), [&](const su::TableRow& r) { return r.name == n; }))
          throw Error("no row named '" + n + "' in " + path);
      std::erase_if(rows, [&](const su::TableRow& r) {
        return std::find(names.begin(), names.end(), r.name) == names.end();
      });
    }
    int mismatches = 0;
    for (const auto& row : rows) {
      const auto r = su::verify_row(t, row);
      if (!r.match) ++mismatches;
      if (cfg_.json_output) {
        json j{{"name", r.name},     {"braid", r.braid},           {"crossings", r.crossings},
               {"kh", r.kh_computed}, {"match", r.match},          {"det", r.det.str()},
               {"reference_det", r.reference_det.str()}};
        if (r.partial_det) j["partial_det"] = r.partial_det->str();
        if (r.det_square_check) j["det_square"] = *r.det_square_check;
        if (!r.error.empty()) j["error"] = r.error;
        detail::emit(out_, j);
      } else {
        out_ << std::left << std::setw(8) << r.name << std::right << std::setw(4) << r.crossings << "  "
             << (r.kh_computed ? "kh+jones" : "jones   ") << "  " << (r.match ? "match   " : "MISMATCH");
        if (r.partial_det)
          out_ << "  det " << r.det.str() << " = " << r.partial_det->str() << "^2 "
               << (*r.det_square_check ? "ok" : "FAILS");
        if (!r.error.empty()) out_ << "  " << r.error;
        out_ << '\n';
      }
    }
    if (cfg_.json_output)
      detail::emit(out_, {{"rows", rows.size()}, {"mismatches", mismatches}});
    else
      out_ << rows.size() << " rows, " << mismatches << " mismatch(es)\n";
    return mismatches ? 1 : 0;
  }

  int cmd_montesinos(const std::string& text, bool cube) {
    const auto m = rational::parse_montesinos(text);
    const auto v = su::doubled_jones(m.two_bridge());
    const auto k = rational::kh_formula(m, v);
    json j{{"spec", m.to_string()}, {"q_max", k.q_max()}, {"q_min", k.q_min()}, {"kh", detail::kh_json(k)}};
    int code = 0;
    if (cube) {
      const auto d = rational::montesinos_diagram(m);
      const auto r = khovanov::kh_ranks(d, cfg_.kh_crossing_cap);
      j["cube_crossings"] = d.crossing_count();
      j["cube_match"] = r.ranks == k;
      if (r.ranks != k) code = 1;
    }
    if (cfg_.json_output) {
      detail::emit(out_, j);
    } else {
      detail::kv(out_, "montesinos", m.to_string());
      detail::kv(out_, "q_max", std::to_string(k.q_max()));
      detail::kv(out_, "q_min", std::to_string(k.q_min()));
      out_ << "khovanov\n" << detail::kh_grid(k);
      if (cube)
        detail::kv(out_, "cube", std::string(j["cube_match"].get<bool>() ? "agrees" : "DIFFERS") + " (" +
                                     std::to_string(j["cube_crossings"].get<int>()) + " crossings)");
    }
    return code;
  }

  int cmd_classify3(const std::string& input, bool as_string, bool as_braid) {
    if (as_string && as_braid) throw Error("--string and --braid are exclusive");
    const bool is_string = as_string || (!as_braid && input.find(',') != std::string::npos);
    json j;
    std::optional<threebraid::IntString> s;
    std::optional<braid::BraidWord> w;
    if (is_string) {
      s = threebraid::parse_int_string(input);
      const auto f = threebraid::decode_string(*s);
      if (!f) throw Error("string " + threebraid::to_string(*s) + " is not the string of an alternating 3-braid");
      w = threebraid::alternating_word(*f);
    } else {
      w = braid::parse_braid_word(input, 3);
      if (const auto f = threebraid::read_alternating(*w)) s = threebraid::associated_string(*f);
    }
    j["braid"] = w->to_string();
    j["components"] = braid::closure_components(*w);
    const auto v = jones::jones_closure(*w);
    j["jones"] = v.to_string();
    j["jones_symmetric"] = v == jones::mirror(v);
    if (s) {
      const auto b = threebraid::is_family_B(*s);
      j["string"] = threebraid::to_string(*s);
      j["family_B"] = threebraid::to_string(b.verdict);
      if (b.verdict != threebraid::Verdict::no) {
        j["b"] = threebraid::to_string(b.b);
        j["c"] = threebraid::to_string(b.c);
      }
    }
    if (const auto a = threebraid::read_family_A(*w)) {
      j["family_A"] = true;
      j["gamma"] = a->gamma.to_string();
      j["eps"] = {a->eps1, a->eps2};
      j["quasipositive"] = a->eps1 == 1 && a->eps2 == 1;
    } else {
      j["family_A"] = false;
    }
    if (cfg_.json_output) {
      detail::emit(out_, j);
    } else {
      detail::kv(out_, "braid", j["braid"].get<std::string>());
      detail::kv(out_, "components", std::to_string(j["components"].get<int>()));
      detail::kv(out_, "jones", v.to_string());
      if (s) {
        detail::kv(out_, "string", j["string"].get<std::string>());
        std::string fb = j["family_B"].get<std::string>();
        if (j.contains("b")) fb += "  b=(" + j["b"].get<std::string>() + ")  c=(" + j["c"].get<std::string>() + ")";
        detail::kv(out_, "family B", fb);
      } else {
        detail::kv(out_, "string", "n/a (not alternating up to rotation)");
      }
      if (j["family_A"].get<bool>())
        detail::kv(out_, "family A", "gamma=" + j["gamma"].get<std::string>() + " eps=" +
                                         std::to_string(j["eps"][0].get<int>()) + "," +
                                         std::to_string(j["eps"][1].get<int>()) +
                                         (j["quasipositive"].get<bool>() ? " (quasipositive)" : ""));
      else
        detail::kv(out_, "family A", "no (as written, up to rotation)");
      detail::kv(out_, "V = mirror V", j["jones_symmetric"].get<bool>() ? "yes" : "no");
    }
    return 0;
  }

  std::ostream& out_;
  std::ostream& err_;
  Config cfg_;
  std::unique_ptr<su::KnotTable> table_;
  std::optional<algebra::KhPolynomial> kh_;
};

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  App app(out, err);
  return app.run(argc, argv);
}

}  // namespace subraid::cli
