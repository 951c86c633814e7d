#pragma once

#include <cstdint>

namespace peanuts {

// C(a, b) as a real; 0 when b > a. Exact while the integer result fits
// 64-bit-safe range, extended-precision (long double accumulation, relative
// error well under 2^-40) beyond that.
double binom(std::uint64_t a, std::uint64_t b);

} // namespace peanuts
