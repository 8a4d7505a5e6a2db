#pragma once

#include <cstdint>
#include <string_view>

#include "kummer/error.hpp"

namespace kummer {

using natural = std::uint64_t;
__extension__ using wide_natural = unsigned __int128;

[[nodiscard]] inline natural checked_add(natural a, natural b, std::string_view what = "addition")
{
  natural r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows 64 bits");
  return r;
}

[[nodiscard]] inline natural checked_mul(natural a, natural b, std::string_view what = "multiplication")
{
  natural r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows 64 bits");
  return r;
}

// Returns false instead of throwing; *out is left unspecified on overflow.
[[nodiscard]] inline bool try_mul(natural a, natural b, natural* out) noexcept
{
  return !__builtin_mul_overflow(a, b, out);
}

[[nodiscard]] inline natural mulmod(natural a, natural b, natural m) noexcept
{
  return static_cast<natural>(static_cast<wide_natural>(a) * b % m);
}

[[nodiscard]] inline natural powmod(natural base, natural exp, natural m) noexcept
{
  natural result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

} // namespace kummer
