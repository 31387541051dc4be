// Builds a strongly invertible braid for 8_20, checks its closure against the
// table and prints the partial knot.
#include <iostream>

#include "subraid/su/knot_table.hpp"
#include "subraid/su/su_braid.hpp"

int main() {
  using namespace subraid;
  const auto table = su::KnotTable::load_csv_file(std::string(SUBRAID_DATA_DIR) + "/knot_table.csv");
  const su::SUBraid b(3, braid::parse_braid_word("1 1 1", 3), {1}, {1});
  std::cout << "SU braid   " << b.to_string() << "\n";
  std::cout << "word       " << b.word().to_string() << "\n";
  std::cout << "knot       " << (b.is_knot() ? "yes" : "no") << "\n";

  const auto f = su::fingerprint(b.word());
  std::cout << "det        " << f.det << "\n";
  std::cout << "identified";
  for (const auto& name : table.identify(f)) std::cout << ' ' << name;
  std::cout << "\n";

  const auto plat = b.plat_gamma();
  const auto pv = jones::jones_plat(plat);
  std::cout << "partial    plat of " << plat.to_string() << ", det " << jones::determinant(pv) << "\n";
}
