#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/checked.hpp"

namespace kummer {

/// Canonical little-endian base-b representation of a natural number.
///
/// digits()[k] is the coefficient of base^k. The highest stored digit is never
/// zero, so the number 0 is the empty sequence. Every instance satisfies
/// 0 <= digit < base; the constructor enforces it.
class DigitVector {
public:
  /// Validates every digit against `base` and drops high-order zeros.
  DigitVector(natural base, std::vector<natural> digits);

  [[nodiscard]] natural base() const noexcept { return base_; }
  [[nodiscard]] std::span<const natural> digits() const& noexcept { return digits_; }
  std::span<const natural> digits() const&& = delete;
  [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return digits_.empty(); }

  /// Digit at place k, 0 beyond the canonical length.
  [[nodiscard]] natural operator[](std::size_t k) const noexcept
  {
    return k < digits_.size() ? digits_[k] : 0;
  }

  /// Big-endian text with a base annotation, e.g. "4017 (base 9)".
  [[nodiscard]] std::string display() const;

  /// Big-endian digits without annotation: "4017" for bases up to 36, and
  /// colon-separated decimal digits in brackets ("[12:0:5]") above that.
  [[nodiscard]] std::string digit_string() const;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

private:
  natural base_;
  std::vector<natural> digits_;
};

/// Throws InvalidArgument unless b >= 2.
void require_base(natural b);

/// Repeated division by b; the remainders are the digits.
[[nodiscard]] DigitVector to_digits(natural n, natural b);

/// Sum of d_k * b^k with overflow checking.
[[nodiscard]] natural from_digits(const DigitVector& d);

/// Same as above for raw caller input; rejects digits outside [0, b).
[[nodiscard]] natural from_digits(natural b, std::span<const natural> digits);

/// n_k = floor(n / b^k) - b * floor(n / b^(k+1)).
[[nodiscard]] natural digit_at(natural n, natural b, std::size_t k);

[[nodiscard]] natural digit_sum(natural n, natural b);

/// Parses a digit string in base b (2..36, case-insensitive letters).
[[nodiscard]] natural parse_natural(std::string_view text, natural b = 10);

} // namespace kummer
