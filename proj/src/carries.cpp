#include "kummer/carries.hpp"

#include <algorithm>
#include <string>

namespace kummer {

namespace {

struct ColumnSum {
  natural digit;
  bool carry;
};

// a, c < b so a + c + 1 <= 2b - 1; compare against b - a - c without forming it.
ColumnSum add_column(natural a, natural c, bool carry_in, natural b) noexcept
{
  const natural room = b - a; // > 0
  const natural need = c + (carry_in ? 1 : 0);
  if (need >= room) return {need - room, true};
  return {a + need, false};
}

std::string triple(natural i, natural j, natural b)
{
  return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", b=" + std::to_string(b) + ")";
}

} // namespace

CarryTrace add_with_trace(natural i, natural j, natural b)
{
  require_base(b);
  const natural n = checked_add(i, j, "i + j");
  CarryTrace trace{b, to_digits(i, b), to_digits(j, b), to_digits(n, b), {}, 0};

  const std::size_t len = std::max(trace.addend_i.size(), trace.addend_j.size());
  if (len == 0) return trace;

  trace.columns.reserve(len + 1);
  bool carry = false;
  for (std::size_t k = 0; k <= len; ++k) {
    CarryColumn col;
    col.i_digit = trace.addend_i[k];
    col.j_digit = trace.addend_j[k];
    col.carry_in = carry;
    const auto [digit, out] = add_column(col.i_digit, col.j_digit, carry, b);
    col.n_digit = digit;
    col.carry_out = out;
    col.stopping = col.carry_in && !col.carry_out;
    if (out) ++trace.carry_count;
    carry = out;
    trace.columns.push_back(col);
  }
  if (carry) throw TheoremViolation("carry escaped the final column for " + triple(i, j, b));
  return trace;
}

natural count_carries(natural i, natural j, natural b)
{
  require_base(b);
  (void)checked_add(i, j, "i + j");
  natural count = 0;
  bool carry = false;
  while (i != 0 || j != 0 || carry) {
    carry = add_column(i % b, j % b, carry, b).carry;
    if (carry) ++count;
    i /= b;
    j /= b;
  }
  return count;
}

natural carry_count_digit_formula(natural i, natural j, natural b)
{
  require_base(b);
  const natural n = checked_add(i, j, "i + j");
  const natural before = digit_sum(i, b) + digit_sum(j, b);
  const natural after = digit_sum(n, b);
  if (before < after) {
    throw TheoremViolation("digit total increased under addition " + triple(i, j, b));
  }
  const natural decrease = before - after;
  if (decrease % (b - 1) != 0) {
    throw TheoremViolation("digit-total decrease " + std::to_string(decrease) + " is not a multiple of b-1 for " +
                           triple(i, j, b));
  }
  return decrease / (b - 1);
}

std::vector<std::size_t> stopping_places(const CarryTrace& trace)
{
  std::vector<std::size_t> places;
  for (std::size_t k = 0; k < trace.columns.size(); ++k) {
    const CarryColumn& col = trace.columns[k];
    if (!col.stopping) continue;
    if (trace.base == 2 && (col.i_digit != 0 || col.j_digit != 0 || col.n_digit != 1)) {
      throw TheoremViolation("binary stopping carry at place " + std::to_string(k) + " reads " +
                             std::to_string(col.i_digit) + "+" + std::to_string(col.j_digit) + "=" +
                             std::to_string(col.n_digit));
    }
    places.push_back(k);
  }
  return places;
}

std::vector<std::size_t> special_places(natural n, natural i)
{
  if (i > n) {
    throw InvalidArgument("special_places requires i <= n (i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
  }
  const natural j = n - i;
  std::vector<std::size_t> places;
  for (std::size_t k = 0; k < 64; ++k) {
    if (digit_at(i, 2, k) == 0 && digit_at(j, 2, k) == 0 && digit_at(n, 2, k) == 1) places.push_back(k);
  }
  const bool carries = count_carries(i, j, 2) > 0;
  if (carries != !places.empty()) {
    throw TheoremViolation("special places of (n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                           ") disagree with the carry count");
  }
  return places;
}

} // namespace kummer
