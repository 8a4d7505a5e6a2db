#include "kummer/valuation.hpp"

#include <cstdlib>
#include <string>

#include "kummer/carries.hpp"
#include "kummer/digits.hpp"
#include "kummer/error.hpp"

namespace kummer {

namespace {

void require_i_le_n(natural n, natural i)
{
  if (i > n) {
    throw InvalidArgument("need i <= n, got i=" + std::to_string(i) + " > n=" + std::to_string(n));
  }
}

} // namespace

natural resolve_oracle_cap(std::optional<natural> flag)
{
  if (flag) return *flag;
  if (const char* env = std::getenv("KUMMER_ORACLE_CAP"); env != nullptr && *env != '\0') {
    try {
      return parse_natural(env);
    } catch (const InvalidArgument&) {
      throw InvalidArgument(std::string("KUMMER_ORACLE_CAP is not a natural number: ") + env);
    }
  }
  return default_oracle_cap;
}

natural factorial_valuation_bruteforce(natural n, natural p, natural cap)
{
  require_prime(p);
  if (n > cap) {
    throw InvalidArgument("brute-force oracle is capped at n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
  natural count = 0;
  for (natural k = 2; k <= n; ++k) {
    for (natural q = k; q % p == 0; q /= p) ++count;
  }
  return count;
}

natural legendre_valuation(natural n, natural p)
{
  require_prime(p);
  natural total = 0;
  for (natural term = n / p; term != 0; term /= p) total += term;
  return total;
}

natural digit_sum_valuation(natural n, natural p)
{
  require_prime(p);
  const natural s = digit_sum(n, p);
  const natural numerator = n - s; // s <= n always
  if (numerator % (p - 1) != 0) {
    throw TheoremViolation("n - S_p(n) = " + std::to_string(numerator) + " is not divisible by p-1 for n=" +
                           std::to_string(n) + ", p=" + std::to_string(p));
  }
  return numerator / (p - 1);
}

natural kummer_valuation(natural n, natural i, natural p)
{
  require_i_le_n(n, i);
  require_prime(p);
  return count_carries(i, n - i, p);
}

natural legendre_binomial_valuation(natural n, natural i, natural p)
{
  require_i_le_n(n, i);
  const natural top = legendre_valuation(n, p);
  const natural bottom = legendre_valuation(i, p) + legendre_valuation(n - i, p);
  if (bottom > top) {
    throw TheoremViolation("C(" + std::to_string(n) + "," + std::to_string(i) + ") has negative " +
                           std::to_string(p) + "-adic valuation");
  }
  return top - bottom;
}

FactoredValuations valuation_table(natural n, natural i, natural cap)
{
  require_i_le_n(n, i);
  if (n > cap) {
    throw InvalidArgument("valuation table is capped at n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
  FactoredValuations table{n, i, n - i, {}};
  for (natural p : primes_up_to(n)) {
    PrimeValuations v{legendre_valuation(n, p), legendre_valuation(i, p), legendre_valuation(n - i, p), 0};
    if (v.i_factorial + v.j_factorial > v.n_factorial) {
      throw TheoremViolation("negative valuation of C(" + std::to_string(n) + "," + std::to_string(i) +
                             ") at p=" + std::to_string(p));
    }
    v.binomial = v.n_factorial - v.i_factorial - v.j_factorial;
    if (v.binomial != kummer_valuation(n, i, p)) {
      throw TheoremViolation("carry count disagrees with Legendre difference for C(" + std::to_string(n) + "," +
                             std::to_string(i) + ") at p=" + std::to_string(p));
    }
    table.by_prime.emplace(p, v);
  }
  return table;
}

DivisibilityVerdict divisibility_verdict(natural n, natural i, natural m)
{
  require_i_le_n(n, i);
  DivisibilityVerdict verdict{n, i, m, {}, true};
  for (const PrimePower& pp : factorize(m)) {
    const natural v = kummer_valuation(n, i, pp.prime);
    const bool ok = v >= pp.exponent;
    verdict.factors.push_back({pp.prime, pp.exponent, v, ok});
    verdict.divisible = verdict.divisible && ok;
  }
  return verdict;
}

bool binomial_divisible_by(natural n, natural i, natural m)
{
  return divisibility_verdict(n, i, m).divisible;
}

} // namespace kummer
