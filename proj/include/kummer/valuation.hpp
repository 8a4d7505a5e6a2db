#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kummer/checked.hpp"
#include "kummer/primes.hpp"

namespace kummer {

inline constexpr natural default_oracle_cap = 100'000;

/// Cap for the brute-force oracle and valuation tables: `flag` if given, else
/// the KUMMER_ORACLE_CAP environment variable, else default_oracle_cap.
[[nodiscard]] natural resolve_oracle_cap(std::optional<natural> flag = std::nullopt);

/// v_p(n!) by dividing every k in 1..n by p until it no longer divides.
/// Independent of the digit machinery; rejects n > cap.
[[nodiscard]] natural factorial_valuation_bruteforce(natural n, natural p, natural cap = default_oracle_cap);

/// floor(n/p) + floor(n/p^2) + ...
[[nodiscard]] natural legendre_valuation(natural n, natural p);

/// (n - S_p(n)) / (p - 1), S_p the base-p digit sum.
[[nodiscard]] natural digit_sum_valuation(natural n, natural p);

/// v_p(C(n, i)) as the number of carries in i + (n - i) written in base p.
[[nodiscard]] natural kummer_valuation(natural n, natural i, natural p);

/// v_p(C(n, i)) as v_p(n!) - v_p(i!) - v_p(j!); TheoremViolation if negative.
[[nodiscard]] natural legendre_binomial_valuation(natural n, natural i, natural p);

struct PrimeValuations {
  natural n_factorial;
  natural i_factorial;
  natural j_factorial;
  natural binomial;

  friend bool operator==(const PrimeValuations&, const PrimeValuations&) = default;
};

/// Valuations of n!, i!, j! and C(n, i) for every prime p <= n, where n = i + j.
struct FactoredValuations {
  natural n;
  natural i;
  natural j;
  std::map<natural, PrimeValuations> by_prime;
};

/// Builds the table from Legendre sums and checks, per prime, that the
/// binomial valuation is nonnegative and equals the Kummer carry count.
[[nodiscard]] FactoredValuations valuation_table(natural n, natural i, natural cap = default_oracle_cap);

struct PrimePowerVerdict {
  natural prime;
  natural exponent;  // a, with p^a exactly dividing m
  natural valuation; // v_p(C(n, i))
  bool satisfied;    // valuation >= exponent
};

struct DivisibilityVerdict {
  natural n;
  natural i;
  natural modulus;
  std::vector<PrimePowerVerdict> factors;
  bool divisible;
};

/// Per-prime-power breakdown of whether m divides C(n, i).
[[nodiscard]] DivisibilityVerdict divisibility_verdict(natural n, natural i, natural m);

/// True iff every p^a exactly dividing m has kummer_valuation(n, i, p) >= a.
[[nodiscard]] bool binomial_divisible_by(natural n, natural i, natural m);

} // namespace kummer
