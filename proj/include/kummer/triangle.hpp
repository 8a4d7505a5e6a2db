#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "kummer/checked.hpp"

namespace kummer {

/// Row n of Pascal's triangle reduced mod m. Residues are stored in the
/// narrowest unsigned type that holds m - 1.
class TriangleRow {
public:
  using Storage = std::variant<std::vector<std::uint8_t>, std::vector<std::uint16_t>, std::vector<std::uint32_t>,
                               std::vector<std::uint64_t>>;

  /// Row 0: [1].
  explicit TriangleRow(natural modulus);

  /// Validates length n + 1 and every residue < m.
  TriangleRow(natural modulus, natural index, std::span<const natural> entries);

  [[nodiscard]] natural modulus() const noexcept { return modulus_; }
  [[nodiscard]] natural index() const noexcept { return index_; }
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] natural operator[](std::size_t k) const;
  [[nodiscard]] std::vector<natural> values() const;
  [[nodiscard]] const Storage& storage() const noexcept { return entries_; }

  /// Byte width of one stored residue.
  [[nodiscard]] std::size_t residue_width() const noexcept;

  friend bool operator==(const TriangleRow&, const TriangleRow&) = default;

private:
  friend TriangleRow next_row(const TriangleRow& row);
  struct Raw {};
  TriangleRow(Raw, natural modulus, natural index, Storage entries);

  natural modulus_;
  natural index_;
  Storage entries_;
};

/// Row n + 1 from row n: boundary 1, interior the sum of the two neighbours above, mod m.
[[nodiscard]] TriangleRow next_row(const TriangleRow& row);

/// Rolling single-row generator: rows 0, 1, 2, ... mod m in O(row) memory.
class RowStream {
public:
  explicit RowStream(natural modulus);

  [[nodiscard]] const TriangleRow& current() const noexcept { return row_; }
  void advance() { row_ = next_row(row_); }

private:
  TriangleRow row_;
};

/// Rows 0..count-1 mod m.
[[nodiscard]] std::vector<TriangleRow> generate_rows(natural modulus, natural count);

/// C(n, i) mod p as the product of C(n_k, i_k) over base-p digits.
[[nodiscard]] natural entry_mod_prime(natural n, natural i, natural p);

/// Triangular grid of 0/1 cells, row n holding n + 1 cells.
class TriangleBitmap {
public:
  TriangleBitmap() = default;
  explicit TriangleBitmap(std::size_t rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] bool at(std::size_t n, std::size_t i) const { return cells_[offset(n) + i] != 0; }
  void set(std::size_t n, std::size_t i, bool value) { cells_[offset(n) + i] = value ? 1 : 0; }
  [[nodiscard]] std::span<std::uint8_t> row(std::size_t n) { return {cells_.data() + offset(n), n + 1}; }
  [[nodiscard]] std::span<const std::uint8_t> row(std::size_t n) const { return {cells_.data() + offset(n), n + 1}; }
  [[nodiscard]] std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  [[nodiscard]] std::size_t count_set() const;

  friend bool operator==(const TriangleBitmap&, const TriangleBitmap&) = default;

private:
  static std::size_t offset(std::size_t n) noexcept { return n * (n + 1) / 2; }

  std::size_t rows_ = 0;
  std::vector<std::uint8_t> cells_;
};

enum class MaskMethod { recurrence, kummer, digit_domination };

[[nodiscard]] std::string_view method_name(MaskMethod method) noexcept;

/// Accepts "recurrence", "kummer", "digit-domination" and its alias "lucas".
[[nodiscard]] MaskMethod parse_mask_method(std::string_view name);

/// Which entries of the first R rows are nonzero mod m (1 = nonzero, drawn
/// black; 0 = divisible, drawn white).
struct DivisibilityMask {
  natural modulus;
  MaskMethod method;
  TriangleBitmap cells;

  [[nodiscard]] std::size_t rows() const noexcept { return cells.rows(); }
  [[nodiscard]] bool nonzero(std::size_t n, std::size_t i) const { return cells.at(n, i); }
};

/// Mask for prime p by the chosen method. All three methods agree.
[[nodiscard]] DivisibilityMask divisibility_mask(natural p, natural rows,
                                                 MaskMethod method = MaskMethod::digit_domination);

/// Mask for any modulus m >= 2 from the additive recurrence.
[[nodiscard]] DivisibilityMask recurrence_mask(natural modulus, natural rows);

/// Mask for composite m from per-prime Kummer valuations (binomial_divisible_by).
[[nodiscard]] DivisibilityMask factored_kummer_mask(natural modulus, natural rows);

/// Number of i in [0, n] with C(n, i) not divisible by p: product of (n_k + 1).
[[nodiscard]] natural row_nonzero_count(natural n, natural p);

/// Rows n in [2, R) whose interior entries are all divisible by p.
[[nodiscard]] std::vector<natural> all_interior_divisible_rows(natural p, natural rows);

} // namespace kummer
