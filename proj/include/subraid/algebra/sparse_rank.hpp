#pragma once

/**
 * @file sparse_rank.hpp
 * @brief Rank over Q of sparse integer matrices by fraction-free elimination.
 *
 * Rows are eliminated with a Markowitz-style choice: the shortest live row
 * supplies the pivot, and within it the column with the fewest live entries
 * (unit entries preferred).  Unit pivots keep the arithmetic integral without
 * scaling; other pivots use r <- p*r - a*pivot_row followed by division by
 * the row content.  The fast path runs in 64-bit arithmetic and restarts in
 * arbitrary precision on overflow, so the result is always exact.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "subraid/algebra/integer.hpp"
#include "subraid/error.hpp"

namespace subraid::algebra {

class SparseIntMatrix {
 public:
  using Row = std::vector<std::pair<int, std::int64_t>>;  // sorted by column, no zeros

  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }

  int rows() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }

  /// Adds v to entry (r, c); entries that cancel to zero are dropped.
  void add(int r, int c, std::int64_t v) {
    if (r < 0 || r >= rows() || c < 0 || c >= cols_) throw Error("matrix index out of range");
    if (v == 0) return;
    auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (it->second == 0) row.erase(it);
    } else {
      row.insert(it, {c, v});
    }
  }

  /// Appends a whole row; entries must be sorted by column with no zeros.
  void push_row(Row row) { rows_.push_back(std::move(row)); }

  std::int64_t at(int r, int c) const {
    const auto& row = rows_.at(static_cast<std::size_t>(r));
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : 0;
  }

  const std::vector<Row>& row_data() const noexcept { return rows_; }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

 private:
  int cols_ = 0;
  std::vector<Row> rows_;
};

namespace detail {

struct Overflow {};

template <class T>
struct ExactOps;

template <>
struct ExactOps<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
  static bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
};

template <>
struct ExactOps<Integer> {
  static Integer mul(const Integer& a, const Integer& b) { return a * b; }
  static Integer sub(const Integer& a, const Integer& b) { return a - b; }
  static Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
  }
  static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
};

template <class T>
std::size_t eliminate(std::vector<std::vector<std::pair<int, T>>> rows, int cols) {
  using Ops = ExactOps<T>;
  using Row = std::vector<std::pair<int, T>>;
  const std::size_t nrows = rows.size();
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) col_rows[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));

  std::vector<char> alive(nrows, 1);
  using Item = std::pair<std::size_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t r = 0; r < nrows; ++r) heap.emplace(rows[r].size(), static_cast<int>(r));

  auto find = [](const Row& row, int c) {
    return std::lower_bound(row.begin(), row.end(), c,
                            [](const auto& e, int col) { return e.first < col; });
  };

  std::size_t rank = 0;
  Row scratch;
  std::vector<int> new_cols;
  while (!heap.empty()) {
    const auto [len, pr] = heap.top();
    heap.pop();
    const auto p = static_cast<std::size_t>(pr);
    if (!alive[p] || rows[p].size() != len) continue;
    if (len == 0) {
      alive[p] = 0;
      continue;
    }
    // pivot column: fewest live rows, unit entries first
    const Row& prow = rows[p];
    std::size_t best = 0;
    auto cost = [&](std::size_t k) {
      const std::size_t cnt = col_rows[static_cast<std::size_t>(prow[k].first)].size();
      return std::pair<int, std::size_t>(Ops::is_unit(prow[k].second) ? 0 : 1, cnt);
    };
    auto best_cost = cost(0);
    for (std::size_t k = 1; k < prow.size(); ++k) {
      auto ck = cost(k);
      if (ck < best_cost) {
        best_cost = ck;
        best = k;
      }
    }
    const int pc = prow[best].first;
    const T pv = prow[best].second;
    const bool unit = Ops::is_unit(pv);
    alive[p] = 0;
    ++rank;

    auto& targets = col_rows[static_cast<std::size_t>(pc)];
    for (const int xr : targets) {
      const auto x = static_cast<std::size_t>(xr);
      if (x == p || !alive[x]) continue;
      Row& xrow = rows[x];
      auto it = find(xrow, pc);
      if (it == xrow.end() || it->first != pc) continue;
      const T xv = it->second;
      // x <- sx * x - sp * p  with (sx, sp) = (1, xv*pv) for unit pivots
      const T sx = unit ? T(1) : pv;
      const T sp = unit ? Ops::mul(xv, pv) : xv;
      scratch.clear();
      new_cols.clear();
      std::size_t i = 0, j = 0;
      while (i < xrow.size() || j < prow.size()) {
        if (j == prow.size() || (i < xrow.size() && xrow[i].first < prow[j].first)) {
          scratch.emplace_back(xrow[i].first, unit ? xrow[i].second : Ops::mul(sx, xrow[i].second));
          ++i;
        } else if (i == xrow.size() || prow[j].first < xrow[i].first) {
          scratch.emplace_back(prow[j].first, Ops::sub(T(0), Ops::mul(sp, prow[j].second)));
          new_cols.push_back(prow[j].first);
          ++j;
        } else {
          const T a = unit ? xrow[i].second : Ops::mul(sx, xrow[i].second);
          T v = Ops::sub(a, Ops::mul(sp, prow[j].second));
          if (v != 0) scratch.emplace_back(xrow[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      if (!unit && !scratch.empty()) {
        T g = 0;
        for (const auto& e : scratch) {
          g = Ops::gcd(g, e.second);
          if (Ops::is_unit(g)) break;
        }
        if (g < 0) g = -g;
        if (g > 1)
          for (auto& e : scratch) e.second /= g;
      }
      xrow.swap(scratch);
      for (const int c : new_cols) col_rows[static_cast<std::size_t>(c)].push_back(xr);
      heap.emplace(xrow.size(), xr);
    }
    targets.clear();
    targets.shrink_to_fit();
  }
  return rank;
}

}  // namespace detail

/// Exact rank of m as a matrix over the rationals.
inline std::size_t rank_over_rationals(const SparseIntMatrix& m) {
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows(m.row_data());
  try {
    return detail::eliminate<std::int64_t>(std::move(rows), m.cols());
  } catch (const detail::Overflow&) {
    std::vector<std::vector<std::pair<int, Integer>>> big;
    big.reserve(m.row_data().size());
    for (const auto& r : m.row_data()) {
      std::vector<std::pair<int, Integer>> br;
      br.reserve(r.size());
      for (const auto& [c, v] : r) br.emplace_back(c, Integer(v));
      big.push_back(std::move(br));
    }
    return detail::eliminate<Integer>(std::move(big), m.cols());
  }
}

}  // namespace subraid::algebra
