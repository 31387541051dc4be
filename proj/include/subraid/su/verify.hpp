#pragma once

/**
 * @file verify.hpp
 * @brief Re-check a table of SU braids against reference knots.
 */

#include <fstream>
#include <string>
#include <vector>

#include "subraid/su/knot_table.hpp"
#include "subraid/su/su_braid.hpp"

namespace subraid::su {

struct TableRow {
  std::string name;
  SUBraid braid;
};

struct RowReport {
  std::string name;
  std::string braid;
  int crossings = 0;       // simplified closure
  bool kh_computed = false;
  bool match = false;
  Integer det = 0;
  Integer reference_det = 0;
  std::optional<Integer> partial_det;  // when the closure is a knot and n <= 4
  std::optional<bool> det_square_check;
  std::vector<std::string> identified;  // every table knot sharing the fingerprint
  std::string error;
};

/// name,n,gamma,c1,c2 rows with space separated signed letters.
inline std::vector<TableRow> load_su_rows(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  if (!std::getline(in, line)) throw Error("SU table is empty");
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto c = detail::split_csv_line(line);
    if (c.size() < 5) throw Error("SU table line " + std::to_string(lineno) + " needs 5 columns");
    const int n = std::stoi(c[1]);
    rows.push_back({c[0], make_su_braid(n, braid::parse_braid_word(c[2], n), braid::parse_braid_word(c[3], n),
                                        braid::parse_braid_word(c[4], n))});
  }
  return rows;
}

inline std::vector<TableRow> load_su_rows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open SU table " + path);
  return load_su_rows(in);
}

inline RowReport verify_row(const KnotTable& table, const TableRow& row, bool identify = false) {
  RowReport r;
  r.name = row.name;
  r.braid = row.braid.to_string();
  try {
    const BraidWord w = braid::simplify(row.braid.word());
    r.crossings = static_cast<int>(w.length());
    const bool small = r.crossings <= table.kh_cap();
    const Fingerprint f = small ? fingerprint(w, table.kh_cap()) : jones_fingerprint(w);
    r.kh_computed = f.kh.has_value();
    r.det = f.det;
    const Fingerprint& ref = r.kh_computed ? table.fingerprint_of(row.name) : table.jones_fingerprint_of(row.name);
    r.reference_det = ref.det;
    r.match = row.braid.is_knot() && f.matches(ref);
    if (row.braid.is_knot() && row.braid.n() <= 4) {
      const Integer pd = jones::determinant(jones::jones_plat(row.braid.plat_gamma()));
      r.partial_det = pd;
      r.det_square_check = pd * pd == f.det;
    }
    if (identify) r.identified = table.identify(f);
  } catch (const Error& e) {
    r.error = e.what();
    r.match = false;
  }
  return r;
}

inline std::vector<RowReport> verify_table(const KnotTable& table, const std::vector<TableRow>& rows,
                                           bool identify = false) {
  std::vector<RowReport> out;
  for (const auto& row : rows) out.push_back(verify_row(table, row, identify));
  return out;
}

}  // namespace subraid::su
