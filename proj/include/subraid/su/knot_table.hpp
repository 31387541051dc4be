#pragma once

/**
 * @file knot_table.hpp
 * @brief Reference knots given by braid words, loaded from CSV.
 *
 * Columns: name,braid_word,strands,det[,chiral].  Every row is checked at
 * load time: the determinant recomputed from the braid must equal the
 * declared one.  Fingerprints (with Kh when the braid is small enough) are
 * computed lazily and cached; lookups are thread safe.
 */

#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "subraid/su/fingerprint.hpp"

namespace subraid::su {

struct KnotRecord {
  std::string name;
  BraidWord reference_braid;
  Integer declared_det = 1;
  std::optional<int> declared_braid_index;
  std::optional<bool> chiral;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace detail

class KnotTable {
 public:
  explicit KnotTable(int kh_cap = khovanov::default_kh_cap) : kh_cap_(kh_cap) {}

  /// Adds a record after checking its determinant.
  void add(KnotRecord r) {
    const Integer det = jones_fingerprint(r.reference_braid).det;
    if (det != r.declared_det)
      throw Error("knot " + r.name + ": braid has det " + det.str() + ", table says " + r.declared_det.str());
    if (index_.count(r.name)) throw Error("duplicate knot name " + r.name);
    index_[r.name] = entries_.size();
    auto e = std::make_unique<Entry>();
    e->record = std::move(r);
    entries_.push_back(std::move(e));
  }

  static KnotTable load_csv(std::istream& in, int kh_cap = khovanov::default_kh_cap) {
    KnotTable t(kh_cap);
    std::string line;
    if (!std::getline(in, line)) throw Error("knot table is empty");
    const auto header = detail::split_csv_line(line);
    auto column = [&](const std::string& name, bool required) -> int {
      for (std::size_t k = 0; k < header.size(); ++k)
        if (header[k] == name) return static_cast<int>(k);
      if (required) throw Error("knot table lacks column '" + name + "'");
      return -1;
    };
    const int cn = column("name", true), cb = column("braid_word", true), cs = column("strands", true),
              cd = column("det", true), cc = column("chiral", false);
    int lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line == "\r") continue;
      const auto cells = detail::split_csv_line(line);
      auto cell = [&](int k) -> std::string {
        if (k < 0 || static_cast<std::size_t>(k) >= cells.size())
          throw Error("knot table line " + std::to_string(lineno) + " is short");
        return cells[static_cast<std::size_t>(k)];
      };
      KnotRecord r;
      r.name = cell(cn);
      const int strands = std::stoi(cell(cs));
      r.reference_braid = braid::parse_braid_word(cell(cb), strands);
      r.declared_det = Integer(cell(cd));
      r.declared_braid_index = strands;
      if (cc >= 0 && static_cast<std::size_t>(cc) < cells.size() && !cells[static_cast<std::size_t>(cc)].empty())
        r.chiral = cell(cc) == "1";
      t.add(std::move(r));
    }
    return t;
  }

  static KnotTable load_csv_file(const std::string& path, int kh_cap = khovanov::default_kh_cap) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open knot table " + path);
    return load_csv(in, kh_cap);
  }

  int kh_cap() const noexcept { return kh_cap_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  const KnotRecord& record(const std::string& name) const { return entry(name).record; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e->record.name);
    return out;
  }

  /// Det and Jones of the reference braid, cached.
  const Fingerprint& jones_fingerprint_of(const std::string& name) const {
    Entry& e = entry(name);
    std::call_once(e.jones_once, [&] { e.jones_fp = su::jones_fingerprint(e.record.reference_braid); });
    return e.jones_fp;
  }

  /// Full fingerprint of the reference braid (Kh when under the cap), cached.
  const Fingerprint& fingerprint_of(const std::string& name) const {
    Entry& e = entry(name);
    std::call_once(e.full_once, [&] { e.full_fp = su::fingerprint(e.record.reference_braid, kh_cap_); });
    return e.full_fp;
  }

  /// Names whose reference fingerprint matches f; Kh is computed only for det/Jones hits.
  std::vector<std::string> identify(const Fingerprint& f) const {
    std::vector<std::string> out;
    for (const auto& e : entries_) {
      const auto& name = e->record.name;
      if (!jones_fingerprint_of(name).matches(f)) continue;
      if (f.kh && !fingerprint_of(name).matches(f)) continue;
      out.push_back(name);
    }
    return out;
  }

 private:
  struct Entry {
    KnotRecord record;
    std::once_flag jones_once, full_once;
    Fingerprint jones_fp, full_fp;
  };

  Entry& entry(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown knot '" + name + "'");
    return *entries_[it->second];
  }

  int kh_cap_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::unique_ptr<Entry>> entries_;
};

}  // namespace subraid::su
