#pragma once

#include <cstdint>
#include <vector>

#include "kummer/checked.hpp"

namespace kummer {

/// Deterministic trial division up to sqrt(n).
[[nodiscard]] bool is_prime(natural n) noexcept;

/// Throws InvalidArgument naming `what` unless p is prime.
void require_prime(natural p, const char* what = "p");

/// All primes <= limit, by the sieve of Eratosthenes.
[[nodiscard]] std::vector<natural> primes_up_to(natural limit);

struct PrimePower {
  natural prime;
  natural exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of m >= 2 by trial division, primes ascending.
[[nodiscard]] std::vector<PrimePower> factorize(natural m);

} // namespace kummer
