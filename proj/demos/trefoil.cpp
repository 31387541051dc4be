// Jones polynomial and Khovanov table of the right-handed trefoil and its mirror.
#include <iostream>

#include "subraid/cli/app.hpp"

int main() {
  using namespace subraid;
  const auto w = braid::parse_braid_word("1 1 1");
  for (const auto& b : {w, w.mirrored()}) {
    const auto v = jones::jones_closure(b);
    const auto k = khovanov::kh_ranks(b).ranks;
    std::cout << "braid " << b.to_string() << "\n  V   = " << v.to_string() << "\n  det = " << jones::determinant(v)
              << "\n  Kh (i j rank):\n";
    std::cout << cli::detail::kh_grid(k) << '\n';
  }
}
