#include "kummer/triangle.hpp"

#include <algorithm>
#include <string>

#include "kummer/digits.hpp"
#include "kummer/error.hpp"
#include "kummer/kernels.hpp"
#include "kummer/primes.hpp"
#include "kummer/valuation.hpp"

namespace kummer {

namespace {

void require_modulus(natural m)
{
  if (m < 2) throw InvalidArgument("modulus must be at least 2, got " + std::to_string(m));
}

TriangleRow::Storage storage_for(natural m, std::size_t size)
{
  const natural top = m - 1;
  if (top <= 0xFF) return std::vector<std::uint8_t>(size);
  if (top <= 0xFFFF) return std::vector<std::uint16_t>(size);
  if (top <= 0xFFFF'FFFF) return std::vector<std::uint32_t>(size);
  return std::vector<std::uint64_t>(size);
}

std::size_t checked_rows(natural rows)
{
  // Triangular storage of rows*(rows+1)/2 cells; keep it addressable.
  if (rows > (natural{1} << 31)) throw InvalidArgument("row count " + std::to_string(rows) + " is too large");
  return static_cast<std::size_t>(rows);
}

// C(a, b) mod p for a, b < p, so no factor below is divisible by p.
natural small_binomial_mod(natural a, natural b, natural p)
{
  if (b > a) return 0;
  b = std::min(b, a - b);
  natural num = 1 % p;
  natural den = 1 % p;
  for (natural t = 0; t < b; ++t) {
    num = mulmod(num, a - t, p);
    den = mulmod(den, t + 1, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

void fill_digit_domination(TriangleBitmap& cells, natural p)
{
  if (p == 2) {
    for (std::size_t n = 0; n < cells.rows(); ++n) kernels::binary_domination_row(n, cells.row(n));
    return;
  }
  for (std::size_t n = 0; n < cells.rows(); ++n) {
    const DigitVector top = to_digits(n, p);
    std::vector<natural> low(top.size() + 1, 0);
    std::size_t exceeded = 0; // places where low[k] > top[k]
    auto row = cells.row(n);
    for (std::size_t i = 0; i <= n; ++i) {
      row[i] = exceeded == 0 ? 1 : 0;
      // increment i's base-p digits, tracking places that flip past n's digit
      for (std::size_t k = 0; k < low.size(); ++k) {
        const bool was = low[k] > top[k];
        low[k] = low[k] + 1 == p ? 0 : low[k] + 1;
        const bool now = low[k] > top[k];
        exceeded = exceeded + now - was;
        if (low[k] != 0) break;
      }
    }
  }
}

void fill_kummer(TriangleBitmap& cells, natural p)
{
  for (std::size_t n = 0; n < cells.rows(); ++n) {
    auto row = cells.row(n);
    for (std::size_t i = 0; i <= n; ++i) row[i] = kummer_valuation(n, i, p) == 0 ? 1 : 0;
  }
}

void fill_recurrence(TriangleBitmap& cells, natural m)
{
  if (cells.rows() == 0) return;
  RowStream stream(m);
  for (std::size_t n = 0;; ++n) {
    std::visit([&](const auto& residues) { kernels::nonzero_flags(std::span(residues), cells.row(n)); },
               stream.current().storage());
    if (n + 1 == cells.rows()) break;
    stream.advance();
  }
}

} // namespace

TriangleRow::TriangleRow(natural modulus) : modulus_(modulus), index_(0), entries_()
{
  require_modulus(modulus);
  entries_ = storage_for(modulus, 1);
  std::visit([](auto& v) { v[0] = 1; }, entries_);
}

TriangleRow::TriangleRow(Raw, natural modulus, natural index, Storage entries)
  : modulus_(modulus), index_(index), entries_(std::move(entries))
{
}

TriangleRow::TriangleRow(natural modulus, natural index, std::span<const natural> entries)
  : modulus_(modulus), index_(index), entries_()
{
  require_modulus(modulus);
  if (entries.size() != index + 1) {
    throw InvalidArgument("row " + std::to_string(index) + " needs " + std::to_string(index + 1) + " entries, got " +
                          std::to_string(entries.size()));
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] >= modulus) {
      throw InvalidArgument("entry " + std::to_string(entries[k]) + " is not a residue mod " + std::to_string(modulus));
    }
    if (entries[k] != entries[entries.size() - 1 - k]) throw InvalidArgument("row entries are not symmetric");
  }
  if (entries.front() != 1) throw InvalidArgument("row boundary entries must be 1");
  entries_ = storage_for(modulus, entries.size());
  std::visit(
    [&](auto& v) {
      using T = typename std::decay_t<decltype(v)>::value_type;
      for (std::size_t k = 0; k < entries.size(); ++k) v[k] = static_cast<T>(entries[k]);
    },
    entries_);
}

std::size_t TriangleRow::size() const noexcept
{
  return std::visit([](const auto& v) { return v.size(); }, entries_);
}

natural TriangleRow::operator[](std::size_t k) const
{
  return std::visit([k](const auto& v) { return static_cast<natural>(v.at(k)); }, entries_);
}

std::vector<natural> TriangleRow::values() const
{
  return std::visit([](const auto& v) { return std::vector<natural>(v.begin(), v.end()); }, entries_);
}

std::size_t TriangleRow::residue_width() const noexcept
{
  return std::visit([](const auto& v) { return sizeof(typename std::decay_t<decltype(v)>::value_type); }, entries_);
}

TriangleRow next_row(const TriangleRow& row)
{
  TriangleRow::Storage next = std::visit(
    [&](const auto& prev) -> TriangleRow::Storage {
      using T = typename std::decay_t<decltype(prev)>::value_type;
      std::vector<T> out(prev.size() + 1);
      kernels::add_mod_row(std::span<const T>(prev), std::span<T>(out), static_cast<T>(row.modulus()));
      return out;
    },
    row.storage());
  return TriangleRow(TriangleRow::Raw{}, row.modulus(), row.index() + 1, std::move(next));
}

RowStream::RowStream(natural modulus) : row_(modulus) {}

std::vector<TriangleRow> generate_rows(natural modulus, natural count)
{
  require_modulus(modulus);
  if (count < 1) throw InvalidArgument("row count must be at least 1");
  std::vector<TriangleRow> rows;
  rows.reserve(checked_rows(count));
  rows.emplace_back(modulus);
  while (rows.size() < count) rows.push_back(next_row(rows.back()));
  return rows;
}

natural entry_mod_prime(natural n, natural i, natural p)
{
  require_prime(p);
  if (i > n) throw InvalidArgument("need i <= n, got i=" + std::to_string(i) + " > n=" + std::to_string(n));
  natural result = 1;
  while (n != 0 && result != 0) {
    result = mulmod(result, small_binomial_mod(n % p, i % p, p), p);
    n /= p;
    i /= p;
  }
  return result;
}

TriangleBitmap::TriangleBitmap(std::size_t rows) : rows_(rows), cells_(rows * (rows + 1) / 2, 0) {}

std::size_t TriangleBitmap::count_set() const
{
  return kernels::count_nonzero(cells_);
}

std::string_view method_name(MaskMethod method) noexcept
{
  switch (method) {
  case MaskMethod::recurrence:
    return "recurrence";
  case MaskMethod::kummer:
    return "kummer";
  case MaskMethod::digit_domination:
    return "digit-domination";
  }
  return "unknown";
}

MaskMethod parse_mask_method(std::string_view name)
{
  if (name == "recurrence") return MaskMethod::recurrence;
  if (name == "kummer") return MaskMethod::kummer;
  if (name == "digit-domination" || name == "lucas") return MaskMethod::digit_domination;
  throw InvalidArgument("unknown mask method '" + std::string(name) + "'");
}

DivisibilityMask divisibility_mask(natural p, natural rows, MaskMethod method)
{
  require_prime(p);
  if (rows < 1) throw InvalidArgument("row count must be at least 1");
  DivisibilityMask mask{p, method, TriangleBitmap(checked_rows(rows))};
  switch (method) {
  case MaskMethod::recurrence:
    fill_recurrence(mask.cells, p);
    break;
  case MaskMethod::kummer:
    fill_kummer(mask.cells, p);
    break;
  case MaskMethod::digit_domination:
    fill_digit_domination(mask.cells, p);
    break;
  }
  return mask;
}

DivisibilityMask recurrence_mask(natural modulus, natural rows)
{
  require_modulus(modulus);
  if (rows < 1) throw InvalidArgument("row count must be at least 1");
  DivisibilityMask mask{modulus, MaskMethod::recurrence, TriangleBitmap(checked_rows(rows))};
  fill_recurrence(mask.cells, modulus);
  return mask;
}

DivisibilityMask factored_kummer_mask(natural modulus, natural rows)
{
  require_modulus(modulus);
  if (rows < 1) throw InvalidArgument("row count must be at least 1");
  DivisibilityMask mask{modulus, MaskMethod::kummer, TriangleBitmap(checked_rows(rows))};
  for (std::size_t n = 0; n < mask.rows(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) mask.cells.set(n, i, !binomial_divisible_by(n, i, modulus));
  }
  return mask;
}

natural row_nonzero_count(natural n, natural p)
{
  require_prime(p);
  natural count = 1;
  const DigitVector digits = to_digits(n, p);
  for (natural d : digits.digits()) count = checked_mul(count, d + 1, "row_nonzero_count");
  return count;
}

std::vector<natural> all_interior_divisible_rows(natural p, natural rows)
{
  require_prime(p);
  if (rows < 2) throw InvalidArgument("row count must be at least 2");
  const DivisibilityMask mask = divisibility_mask(p, rows, MaskMethod::digit_domination);
  std::vector<natural> found;
  for (std::size_t n = 2; n < mask.rows(); ++n) {
    const auto row = mask.cells.row(n);
    if (std::all_of(row.begin() + 1, row.end() - 1, [](std::uint8_t c) { return c == 0; })) found.push_back(n);
  }
  return found;
}

} // namespace kummer
