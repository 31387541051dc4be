// Runs the 3-braid obstructions on a few table knots.
#include <iostream>

#include "subraid/su/knot_table.hpp"
#include "subraid/su/obstruction.hpp"

int main(int argc, char** argv) {
  using namespace subraid;
  const auto table = su::KnotTable::load_csv_file(std::string(SUBRAID_DATA_DIR) + "/knot_table.csv");
  std::vector<std::string> names{"4_1", "6_1", "8_20", "10_123"};
  if (argc > 1) names.assign(argv + 1, argv + argc);
  for (const auto& n : names) {
    const auto& f = table.fingerprint_of(n);
    if (!f.kh) {
      std::cout << n << ": closure too large for Khovanov homology\n";
      continue;
    }
    const auto bs3 = su::obstruct_bs3(f);
    const auto qs = su::qsum_obstruction(f);
    std::cout << n << ": det " << f.det << ", q_max + q_min = " << qs.sum << " (" << qs.verdict << "), "
              << (bs3.possible ? "possible" : "obstructed") << ": " << bs3.reason << "\n";
  }
}
