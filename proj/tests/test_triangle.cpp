#include <doctest.h>

#include <algorithm>

#include "kummer/kernels.hpp"
#include "kummer/triangle.hpp"
#include "oracles.hpp"

using namespace kummer;

namespace {

using Values = std::vector<natural>;

std::vector<std::vector<bool>> as_rows(const DivisibilityMask& mask)
{
  std::vector<std::vector<bool>> out;
  for (std::size_t n = 0; n < mask.rows(); ++n) {
    std::vector<bool> row;
    for (std::size_t i = 0; i <= n; ++i) row.push_back(mask.nonzero(n, i));
    out.push_back(row);
  }
  return out;
}

} // namespace

TEST_CASE("next_row")
{
  const TriangleRow row3(2, 3, Values{1, 1, 1, 1});
  CHECK(next_row(row3).values() == Values{1, 0, 0, 0, 1});
  CHECK(next_row(row3).index() == 4);
  CHECK(next_row(TriangleRow(5)).values() == Values{1, 1});
  const TriangleRow row6(7, 6, Values{1, 6, 1, 6, 1, 6, 1});
  CHECK(next_row(row6).values() == Values{1, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("TriangleRow validation")
{
  CHECK_THROWS_AS(TriangleRow(1), InvalidArgument);
  CHECK_THROWS_AS(TriangleRow(2, 3, Values{1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(TriangleRow(2, 2, Values{1, 2, 1}), InvalidArgument);
  CHECK_THROWS_AS(TriangleRow(5, 2, Values{1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(TriangleRow(5, 1, Values{0, 0}), InvalidArgument);
}

TEST_CASE("residue width follows the modulus")
{
  CHECK(TriangleRow(2).residue_width() == 1);
  CHECK(TriangleRow(256).residue_width() == 1);
  CHECK(TriangleRow(257).residue_width() == 2);
  CHECK(TriangleRow(65536).residue_width() == 2);
  CHECK(TriangleRow(65537).residue_width() == 4);
  CHECK(TriangleRow(natural{1} << 32).residue_width() == 4);
  CHECK(TriangleRow((natural{1} << 32) + 1).residue_width() == 8);
}

TEST_CASE("generate_rows")
{
  const auto two = generate_rows(2, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].values() == Values{1});
  CHECK(two[1].values() == Values{1, 1});
  CHECK(generate_rows(2, 5).back().values() == Values{1, 0, 0, 0, 1});
  const auto three = generate_rows(3, 4);
  CHECK(three[2].values() == Values{1, 2, 1});
  CHECK(three[3].values() == Values{1, 0, 0, 1});
  CHECK_THROWS_AS((void)generate_rows(1, 4), InvalidArgument);
  CHECK_THROWS_AS((void)generate_rows(3, 0), InvalidArgument);
}

TEST_CASE("property: recurrence rows match exact binomials mod m, all residue widths")
{
  const auto exact = oracle::exact_pascal(127);
  for (natural m : {2ULL, 3ULL, 6ULL, 10ULL, 255ULL, 256ULL, 257ULL, 1000ULL, 65535ULL, 65536ULL, 65537ULL,
                    4'294'967'295ULL, 4'294'967'296ULL, 4'294'967'311ULL, 18'446'744'073'709'551'557ULL}) {
    RowStream stream(m);
    for (natural n = 0; n <= 127; ++n) {
      const TriangleRow& row = stream.current();
      REQUIRE(row.index() == n);
      for (natural k = 0; k <= n; ++k) {
        REQUIRE(row[k] == static_cast<natural>(exact[n][k] % m));
        REQUIRE(row[k] == row[n - k]);
      }
      stream.advance();
    }
  }
}

TEST_CASE("entry_mod_prime")
{
  CHECK(entry_mod_prime(8, 5, 2) == 0);
  CHECK(entry_mod_prime(123, 0, 11) == 1);
  CHECK(entry_mod_prime(6, 2, 7) == 1);
  CHECK_THROWS_AS((void)entry_mod_prime(6, 2, 8), InvalidArgument);
  CHECK_THROWS_AS((void)entry_mod_prime(2, 6, 7), InvalidArgument);

  const auto exact = oracle::exact_pascal(127);
  for (natural p : {2, 3, 5, 7, 11, 13, 101, 127, 131}) {
    for (natural n = 0; n <= 127; ++n) {
      for (natural i = 0; i <= n; ++i) REQUIRE(entry_mod_prime(n, i, p) == static_cast<natural>(exact[n][i] % p));
    }
  }
  // Large prime: digits are single, so this is C(n, i) mod p directly.
  CHECK(entry_mod_prime(40, 20, 4'294'967'291ULL) == static_cast<natural>(exact[40][20] % 4'294'967'291ULL));
}

TEST_CASE("divisibility_mask examples")
{
  using Rows = std::vector<std::vector<bool>>;
  for (MaskMethod method : {MaskMethod::recurrence, MaskMethod::kummer, MaskMethod::digit_domination}) {
    CAPTURE(method_name(method));
    CHECK(as_rows(divisibility_mask(2, 4, method)) ==
          Rows{{true}, {true, true}, {true, false, true}, {true, true, true, true}});
    CHECK(as_rows(divisibility_mask(13, 1, method)) == Rows{{true}});
    const auto seven = divisibility_mask(7, 8, method);
    CHECK(as_rows(seven)[7] == std::vector<bool>{true, false, false, false, false, false, false, true});
  }
  CHECK_THROWS_AS((void)divisibility_mask(4, 8), InvalidArgument);
  CHECK_THROWS_AS((void)divisibility_mask(5, 0), InvalidArgument);
  CHECK(parse_mask_method("lucas") == MaskMethod::digit_domination);
  CHECK(parse_mask_method("digit-domination") == MaskMethod::digit_domination);
  CHECK_THROWS_AS((void)parse_mask_method("pascal"), InvalidArgument);
}

TEST_CASE("property: three mask methods agree at 200 rows")
{
  for (natural p : {2, 3, 5, 7}) {
    CAPTURE(p);
    const auto a = divisibility_mask(p, 200, MaskMethod::recurrence);
    const auto b = divisibility_mask(p, 200, MaskMethod::kummer);
    const auto c = divisibility_mask(p, 200, MaskMethod::digit_domination);
    CHECK(a.cells == b.cells);
    CHECK(a.cells == c.cells);
  }
}

TEST_CASE("property: boundary and symmetry of masks")
{
  for (natural p : {2, 3, 5, 7, 11}) {
    const auto mask = divisibility_mask(p, 150);
    for (std::size_t n = 0; n < mask.rows(); ++n) {
      REQUIRE(mask.nonzero(n, 0));
      REQUIRE(mask.nonzero(n, n));
      for (std::size_t i = 0; i <= n; ++i) REQUIRE(mask.nonzero(n, i) == mask.nonzero(n, n - i));
    }
  }
}

TEST_CASE("property: substitution structure for p in {2,3}, k in {1,2}")
{
  for (natural p : {2, 3}) {
    for (natural k : {1, 2}) {
      natural pk = 1;
      for (natural t = 0; t < k; ++t) pk *= p;
      const natural top = pk * p;
      const auto mask = divisibility_mask(p, top, MaskMethod::recurrence);
      for (natural n = 0; n < top; ++n) {
        for (natural i = 0; i <= n; ++i) {
          const bool low = i % pk <= n % pk && mask.nonzero(n % pk, i % pk);
          const bool high = i / pk <= n / pk && mask.nonzero(n / pk, i / pk);
          REQUIRE(mask.nonzero(n, i) == (low && high));
        }
      }
    }
  }
}

TEST_CASE("row_nonzero_count")
{
  CHECK(row_nonzero_count(6, 2) == 4);
  CHECK(row_nonzero_count(0, 17) == 1);
  CHECK(row_nonzero_count(7, 2) == 8);
  CHECK_THROWS_AS((void)row_nonzero_count(7, 4), InvalidArgument);
  for (natural p : {2, 3, 5}) {
    const auto mask = divisibility_mask(p, 512, MaskMethod::recurrence);
    for (std::size_t n = 0; n < 512; ++n) {
      const auto row = mask.cells.row(n);
      REQUIRE(static_cast<natural>(std::count(row.begin(), row.end(), 1)) == row_nonzero_count(n, p));
    }
  }
}

TEST_CASE("property: nonzero cells in rows < p^k number (p(p+1)/2)^k")
{
  for (natural p : {2, 3, 5}) {
    natural rows = 1;
    for (int k = 0; k < 5; ++k) rows *= p;
    const auto mask = divisibility_mask(p, rows, MaskMethod::recurrence);
    natural pk = 1, expected = 1;
    for (int k = 0; k <= 5; ++k) {
      natural count = 0;
      for (natural n = 0; n < pk; ++n) {
        const auto row = mask.cells.row(n);
        count += static_cast<natural>(std::count(row.begin(), row.end(), 1));
      }
      CAPTURE(p);
      CAPTURE(k);
      CHECK(count == expected);
      pk *= p;
      expected *= p * (p + 1) / 2;
    }
  }
  CHECK(divisibility_mask(2, 32).cells.count_set() == 243);
}

TEST_CASE("all_interior_divisible_rows")
{
  using Rows = std::vector<natural>;
  CHECK(all_interior_divisible_rows(7, 200) == Rows{7, 49});
  CHECK(all_interior_divisible_rows(2, 3) == Rows{2});
  CHECK(all_interior_divisible_rows(3, 30) == Rows{3, 9, 27});
  for (natural p : {2, 3, 5, 7}) {
    Rows powers;
    for (natural q = p; q < 400; q *= p) powers.push_back(q);
    CHECK(all_interior_divisible_rows(p, 400) == powers);
  }
  CHECK_THROWS_AS((void)all_interior_divisible_rows(7, 1), InvalidArgument);
  CHECK_THROWS_AS((void)all_interior_divisible_rows(9, 100), InvalidArgument);
}

TEST_CASE("composite masks: recurrence agrees with per-prime Kummer")
{
  for (natural m : {4, 6, 8, 9, 12}) {
    CAPTURE(m);
    CHECK(recurrence_mask(m, 200).cells == factored_kummer_mask(m, 200).cells);
  }
  CHECK_THROWS_AS((void)recurrence_mask(1, 10), InvalidArgument);
}

TEST_CASE("dispatch reports an ISA")
{
  const auto isas = kernels::available_isas();
  REQUIRE_FALSE(isas.empty());
  CHECK(isas.front() == kernels::Isa::scalar);
  MESSAGE("active kernel ISA: " << kernels::isa_name(kernels::active_isa()));
}
