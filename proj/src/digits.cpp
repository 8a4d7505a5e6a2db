#include "kummer/digits.hpp"

#include <algorithm>
#include <string>

namespace kummer {

namespace {

constexpr std::string_view digit_chars = "0123456789abcdefghijklmnopqrstuvwxyz";

// floor(n / b^k), computed without forming b^k when it exceeds n.
natural floor_div_power(natural n, natural b, std::size_t k)
{
  natural power = 1;
  for (std::size_t t = 0; t < k; ++t) {
    if (!try_mul(power, b, &power) || power > n) return 0;
  }
  return n / power;
}

} // namespace

void require_base(natural b)
{
  if (b < 2) throw InvalidArgument("invalid base " + std::to_string(b) + ": base must be at least 2");
}

DigitVector::DigitVector(natural base, std::vector<natural> digits)
  : base_(base), digits_(std::move(digits))
{
  require_base(base_);
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (digits_[k] >= base_) {
      throw InvalidArgument("digit " + std::to_string(digits_[k]) + " at place " + std::to_string(k) +
                            " is out of range for base " + std::to_string(base_));
    }
  }
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

std::string DigitVector::digit_string() const
{
  if (digits_.empty()) return "0";
  std::string out;
  if (base_ <= digit_chars.size()) {
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) out.push_back(digit_chars[*it]);
    return out;
  }
  out.push_back('[');
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (it != digits_.rbegin()) out.push_back(':');
    out += std::to_string(*it);
  }
  out.push_back(']');
  return out;
}

std::string DigitVector::display() const
{
  return digit_string() + " (base " + std::to_string(base_) + ")";
}

DigitVector to_digits(natural n, natural b)
{
  require_base(b);
  std::vector<natural> digits;
  while (n != 0) {
    digits.push_back(n % b);
    n /= b;
  }
  return DigitVector(b, std::move(digits));
}

natural from_digits(natural b, std::span<const natural> digits)
{
  require_base(b);
  natural value = 0;
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (digits[k] >= b) {
      throw InvalidArgument("digit " + std::to_string(digits[k]) + " at place " + std::to_string(k) +
                            " is out of range for base " + std::to_string(b));
    }
    value = checked_add(checked_mul(value, b, "from_digits"), digits[k], "from_digits");
  }
  return value;
}

natural from_digits(const DigitVector& d)
{
  return from_digits(d.base(), d.digits());
}

natural digit_at(natural n, natural b, std::size_t k)
{
  require_base(b);
  const natural here = floor_div_power(n, b, k);
  const natural above = floor_div_power(n, b, k + 1);
  return here - b * above;
}

natural digit_sum(natural n, natural b)
{
  require_base(b);
  natural sum = 0;
  while (n != 0) {
    sum += n % b;
    n /= b;
  }
  return sum;
}

natural parse_natural(std::string_view text, natural b)
{
  if (b < 2 || b > digit_chars.size()) {
    throw InvalidArgument("input base must be in [2, 36], got " + std::to_string(b));
  }
  if (text.empty()) throw InvalidArgument("empty number");
  natural value = 0;
  for (char c : text) {
    const char lower = static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    const auto pos = digit_chars.find(lower);
    if (pos == std::string_view::npos || pos >= b) {
      throw InvalidArgument("'" + std::string(text) + "' is not a base-" + std::to_string(b) + " number");
    }
    value = checked_add(checked_mul(value, b, "number literal"), pos, "number literal");
  }
  return value;
}

} // namespace kummer
