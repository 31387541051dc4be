#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subraid/algebra/kh_polynomial.hpp"
#include "subraid/algebra/laurent_poly.hpp"
#include "subraid/braid/braid_word.hpp"

namespace testsupport {

struct Golden {
  subraid::algebra::LaurentPoly jones;
  subraid::algebra::KhPolynomial kh;
};

/// Jones and rational Khovanov ranks of the table knots, from an independent census.
inline const std::map<std::string, Golden>& golden() {
  static const std::map<std::string, Golden> g = [] {
    std::map<std::string, Golden> out;
    std::ifstream in(std::string(SUBRAID_TEST_DATA) + "/knot_golden.csv");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      const auto a = line.find(','), b = line.find(',', a + 1);
      Golden x;
      x.jones = subraid::algebra::parse_laurent(line.substr(a + 1, b - a - 1));
      std::istringstream ks(line.substr(b + 1));
      for (std::string cell; std::getline(ks, cell, ';');) {
        std::istringstream cs(cell);
        int i = 0, j = 0;
        long long r = 0;
        cs >> i >> j >> r;
        x.kh.add(i, j, r);
      }
      out[line.substr(0, a)] = x;
    }
    return out;
  }();
  return g;
}

inline std::string table_path() { return std::string(SUBRAID_DATA_DIR) + "/knot_table.csv"; }
inline std::string su_rows_path() { return std::string(SUBRAID_DATA_DIR) + "/table1_su_braids.csv"; }

/// Uniform random word in B_n of exactly len letters.
inline subraid::braid::BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::vector<int> w;
  if (n > 1) {
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
    for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  }
  return {n, std::move(w)};
}

}  // namespace testsupport
