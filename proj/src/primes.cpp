#include "kummer/primes.hpp"

#include <string>

#include "kummer/error.hpp"

namespace kummer {

bool is_prime(natural n) noexcept
{
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (natural d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(natural p, const char* what)
{
  if (!is_prime(p)) throw InvalidArgument(std::string(what) + " = " + std::to_string(p) + " is not prime");
}

std::vector<natural> primes_up_to(natural limit)
{
  std::vector<natural> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (natural p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    if (p > limit / p) continue;
    for (natural q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

std::vector<PrimePower> factorize(natural m)
{
  if (m < 2) throw InvalidArgument("modulus must be at least 2, got " + std::to_string(m));
  std::vector<PrimePower> factors;
  for (natural d = 2; d <= m / d; d += (d == 2 ? 1 : 2)) {
    natural e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e != 0) factors.push_back({d, e});
  }
  if (m > 1) factors.push_back({m, 1});
  return factors;
}

} // namespace kummer
