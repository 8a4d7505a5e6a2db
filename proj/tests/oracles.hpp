#pragma once

// Independent brute-force oracles for the unit and acceptance tests. None of
// these call into the library's digit, carry, or valuation code.

#include <cstdint>
#include <vector>

namespace oracle {

__extension__ using u128 = unsigned __int128;

/// Rows 0..top of Pascal's triangle as exact 128-bit integers (exact through n = 127).
inline std::vector<std::vector<u128>> exact_pascal(unsigned top)
{
  std::vector<std::vector<u128>> rows{{1}};
  for (unsigned n = 1; n <= top; ++n) {
    std::vector<u128> row(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Exponent of p in x > 0 by repeated division.
inline std::uint64_t multiplicity(u128 x, std::uint64_t p)
{
  std::uint64_t e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

/// Little-endian digits by repeated division.
inline std::vector<std::uint64_t> digits(std::uint64_t n, std::uint64_t b)
{
  std::vector<std::uint64_t> out;
  for (; n != 0; n /= b) out.push_back(n % b);
  return out;
}

/// Grade-school column addition; returns the number of carries.
inline std::uint64_t simulate_carries(std::uint64_t i, std::uint64_t j, std::uint64_t b)
{
  const auto di = digits(i, b);
  const auto dj = digits(j, b);
  std::uint64_t carry = 0, count = 0;
  for (std::size_t k = 0; k < std::max(di.size(), dj.size()); ++k) {
    const std::uint64_t total = (k < di.size() ? di[k] : 0) + (k < dj.size() ? dj[k] : 0) + carry;
    carry = total >= b ? 1 : 0;
    count += carry;
  }
  return count;
}

/// C(n, i) mod m from the additive recurrence, for any modulus.
inline std::vector<std::vector<std::uint64_t>> pascal_mod(std::uint64_t m, unsigned rows)
{
  std::vector<std::vector<std::uint64_t>> out{{1 % m}};
  for (unsigned n = 1; n < rows; ++n) {
    std::vector<std::uint64_t> row(n + 1, 1 % m);
    for (unsigned k = 1; k < n; ++k) row[k] = (out[n - 1][k - 1] + out[n - 1][k]) % m;
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace oracle
