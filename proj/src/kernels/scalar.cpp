#include "kummer/kernels.hpp"

namespace kummer::kernels::scalar {

namespace {

template <typename T>
void add_mod_row_impl(std::span<const T> prev, std::span<T> next, T m)
{
  const std::size_t len = prev.size();
  next[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    const T a = prev[k - 1];
    const T b = prev[k];
    const T room = static_cast<T>(m - b);
    next[k] = a >= room ? static_cast<T>(a - room) : static_cast<T>(a + b);
  }
  next[len] = 1;
}

template <typename T>
void nonzero_flags_impl(std::span<const T> residues, std::span<std::uint8_t> out)
{
  for (std::size_t k = 0; k < residues.size(); ++k) out[k] = residues[k] != 0 ? 1 : 0;
}

} // namespace

void add_mod_row(std::span<const std::uint8_t> prev, std::span<std::uint8_t> next, std::uint8_t m)
{
  add_mod_row_impl(prev, next, m);
}
void add_mod_row(std::span<const std::uint16_t> prev, std::span<std::uint16_t> next, std::uint16_t m)
{
  add_mod_row_impl(prev, next, m);
}
void add_mod_row(std::span<const std::uint32_t> prev, std::span<std::uint32_t> next, std::uint32_t m)
{
  add_mod_row_impl(prev, next, m);
}
void add_mod_row(std::span<const std::uint64_t> prev, std::span<std::uint64_t> next, std::uint64_t m)
{
  add_mod_row_impl(prev, next, m);
}

void binary_domination_row(std::uint64_t n, std::span<std::uint8_t> out)
{
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = (i & ~n) == 0 ? 1 : 0;
}

void nonzero_flags(std::span<const std::uint8_t> residues, std::span<std::uint8_t> out)
{
  nonzero_flags_impl(residues, out);
}
void nonzero_flags(std::span<const std::uint16_t> residues, std::span<std::uint8_t> out)
{
  nonzero_flags_impl(residues, out);
}
void nonzero_flags(std::span<const std::uint32_t> residues, std::span<std::uint8_t> out)
{
  nonzero_flags_impl(residues, out);
}
void nonzero_flags(std::span<const std::uint64_t> residues, std::span<std::uint8_t> out)
{
  nonzero_flags_impl(residues, out);
}

std::size_t count_nonzero(std::span<const std::uint8_t> bytes)
{
  std::size_t count = 0;
  for (std::uint8_t b : bytes) count += b != 0;
  return count;
}

} // namespace kummer::kernels::scalar
