#include "peanuts/binomial.hpp"

#include <algorithm>

namespace peanuts {

double binom(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0.0;
  b = std::min(b, a - b);
  if (b == 0) return 1.0;

  // Exact path: res * (a-b+i) / i stays integral at every step
  // (C(n,k) = C(n-1,k-1) * n / k); the conversion at the end rounds once.
  unsigned __int128 res = 1;
  bool exact = true;
  for (std::uint64_t i = 1; i <= b; ++i) {
    unsigned __int128 factor = a - b + i;
    if (res > (static_cast<unsigned __int128>(-1)) / factor) {
      exact = false;
      break;
    }
    res = res * factor / i;
  }
  if (exact) return static_cast<double>(res);

  // Extended-precision path: 64-bit-mantissa accumulation keeps the relative
  // error far below 2^-40 for any feasible b.
  long double acc = 1.0L;
  for (std::uint64_t i = 1; i <= b; ++i) {
    acc = acc * static_cast<long double>(a - b + i) / static_cast<long double>(i);
  }
  return static_cast<double>(acc);
}

} // namespace peanuts
