// Walks through the fusion rules of H(F) and their image in the
// representation ring of k[z, z^-1] * O(SL_q(2)).
#include "cosov/freeprod/psi.hpp"
#include "cosov/fusion/fusion.hpp"

#include <iostream>

int main() {
  using namespace cosov;
  using fusion::Word;

  const Word x = Word::parse("ab"), y = Word::parse("ba");
  const auto prod = fusion::fuse(x, y);
  std::cout << "U_ab (x) U_ba = " << prod.to_string() << "\n";

  for (std::int64_t n : {2, 3}) {
    std::cout << "n = " << n << ": dim U_ab = " << fusion::dim(x, n).str()
              << ", dim of the product = " << fusion::dim(prod, n).str() << "\n";
  }

  for (const char* w : {"a", "b", "ab", "ba", "aba", "abab"}) {
    const auto r = freeprod::psi(Word::parse(w));
    std::cout << "psi(" << w << ") = " << r.to_string() << "  (dim " << freeprod::alt_dim(r).str() << ")\n";
  }
  std::cout << "psi(ab) * psi(ba) = " << (freeprod::psi(x) * freeprod::psi(y)).to_string() << "\n";
  std::cout << "psi(U_ab (x) U_ba) = " << freeprod::psi(prod).to_string() << "\n";
}
