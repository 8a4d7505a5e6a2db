#pragma once

#include <cstdint>
#include <vector>

#include "kummer/digits.hpp"

namespace kummer {

/// One column of a base-b column addition.
struct CarryColumn {
  natural i_digit = 0;
  natural j_digit = 0;
  natural n_digit = 0;
  bool carry_in = false;
  bool carry_out = false;
  /// carry_in && !carry_out: the carry chain ends here.
  bool stopping = false;

  friend bool operator==(const CarryColumn&, const CarryColumn&) = default;
};

/// Full record of adding i + j = n in base b.
///
/// columns has max(len(i), len(j)) + 1 entries, so a final carry always has a
/// place to land; adding 0 + 0 gives an empty trace. For every place k:
///   i_k + j_k + carry_in_k = n_k + b * carry_out_k,  carry_in_{k+1} = carry_out_k.
struct CarryTrace {
  natural base;
  DigitVector addend_i;
  DigitVector addend_j;
  DigitVector sum_n;
  std::vector<CarryColumn> columns;
  natural carry_count = 0;
};

[[nodiscard]] CarryTrace add_with_trace(natural i, natural j, natural b);

/// Carry count of i + j in base b without materializing a trace. Same column
/// rule as add_with_trace.
[[nodiscard]] natural count_carries(natural i, natural j, natural b);

/// (S_b(i) + S_b(j) - S_b(i + j)) / (b - 1). Throws TheoremViolation when the
/// numerator is negative or not a multiple of b - 1.
[[nodiscard]] natural carry_count_digit_formula(natural i, natural j, natural b);

/// Places whose column receives a carry and does not pass one on. In base 2
/// each such column must read 0 + 0 (+1) = 1; a different pattern throws
/// TheoremViolation.
[[nodiscard]] std::vector<std::size_t> stopping_places(const CarryTrace& trace);

/// Binary places k where i and j = n - i both have bit 0 and n has bit 1.
/// Cross-checked against the carry count of i + j: the set is nonempty exactly
/// when the addition carries, otherwise TheoremViolation.
[[nodiscard]] std::vector<std::size_t> special_places(natural n, natural i);

} // namespace kummer
