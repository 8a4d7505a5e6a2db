// AVX2 variants of the row kernels. Compiled with -mavx2; only reached after
// dispatch.cpp has confirmed CPU support.

#include <immintrin.h>

#include <bit>
#include <limits>

#include "kummer/kernels.hpp"

namespace kummer::kernels::avx2 {

namespace {

inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }
inline void store(void* p, __m256i v) { _mm256_storeu_si256(static_cast<__m256i*>(p), v); }

// Lane-wise (a + b) mod m given a, b < m: subtract room = m - b when a >= room.
// Unsigned a >= room is tested as max(a, room) == a.
struct Lanes8 {
  static constexpr std::size_t width = 32;
  static __m256i splat(std::uint8_t m) { return _mm256_set1_epi8(static_cast<char>(m)); }
  static __m256i step(__m256i a, __m256i b, __m256i m)
  {
    const __m256i room = _mm256_sub_epi8(m, b);
    const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(a, room), a);
    return _mm256_blendv_epi8(_mm256_add_epi8(a, b), _mm256_sub_epi8(a, room), ge);
  }
};

struct Lanes16 {
  static constexpr std::size_t width = 16;
  static __m256i splat(std::uint16_t m) { return _mm256_set1_epi16(static_cast<short>(m)); }
  static __m256i step(__m256i a, __m256i b, __m256i m)
  {
    const __m256i room = _mm256_sub_epi16(m, b);
    const __m256i ge = _mm256_cmpeq_epi16(_mm256_max_epu16(a, room), a);
    return _mm256_blendv_epi8(_mm256_add_epi16(a, b), _mm256_sub_epi16(a, room), ge);
  }
};

struct Lanes32 {
  static constexpr std::size_t width = 8;
  static __m256i splat(std::uint32_t m) { return _mm256_set1_epi32(static_cast<int>(m)); }
  static __m256i step(__m256i a, __m256i b, __m256i m)
  {
    const __m256i room = _mm256_sub_epi32(m, b);
    const __m256i ge = _mm256_cmpeq_epi32(_mm256_max_epu32(a, room), a);
    return _mm256_blendv_epi8(_mm256_add_epi32(a, b), _mm256_sub_epi32(a, room), ge);
  }
};

// No unsigned 64-bit max in AVX2: flip the sign bits and use the signed compare.
struct Lanes64 {
  static constexpr std::size_t width = 4;
  static __m256i splat(std::uint64_t m) { return _mm256_set1_epi64x(static_cast<long long>(m)); }
  static __m256i step(__m256i a, __m256i b, __m256i m)
  {
    const __m256i sign = _mm256_set1_epi64x(std::numeric_limits<long long>::min());
    const __m256i room = _mm256_sub_epi64(m, b);
    const __m256i lt = _mm256_cmpgt_epi64(_mm256_xor_si256(room, sign), _mm256_xor_si256(a, sign));
    return _mm256_blendv_epi8(_mm256_sub_epi64(a, room), _mm256_add_epi64(a, b), lt);
  }
};

template <typename Lanes, typename T>
void add_mod_row_impl(std::span<const T> prev, std::span<T> next, T m)
{
  const std::size_t len = prev.size();
  next[0] = 1;
  const __m256i mv = Lanes::splat(m);
  std::size_t k = 1;
  for (; k + Lanes::width <= len; k += Lanes::width) {
    store(&next[k], Lanes::step(load(&prev[k - 1]), load(&prev[k]), mv));
  }
  for (; k < len; ++k) {
    const T a = prev[k - 1];
    const T b = prev[k];
    const T room = static_cast<T>(m - b);
    next[k] = a >= room ? static_cast<T>(a - room) : static_cast<T>(a + b);
  }
  next[len] = 1;
}

} // namespace

void add_mod_row(std::span<const std::uint8_t> prev, std::span<std::uint8_t> next, std::uint8_t m)
{
  add_mod_row_impl<Lanes8>(prev, next, m);
}
void add_mod_row(std::span<const std::uint16_t> prev, std::span<std::uint16_t> next, std::uint16_t m)
{
  add_mod_row_impl<Lanes16>(prev, next, m);
}
void add_mod_row(std::span<const std::uint32_t> prev, std::span<std::uint32_t> next, std::uint32_t m)
{
  add_mod_row_impl<Lanes32>(prev, next, m);
}
void add_mod_row(std::span<const std::uint64_t> prev, std::span<std::uint64_t> next, std::uint64_t m)
{
  add_mod_row_impl<Lanes64>(prev, next, m);
}

void binary_domination_row(std::uint64_t n, std::span<std::uint8_t> out)
{
  const std::size_t len = out.size();
  if (len > (std::size_t{1} << 32)) {
    scalar::binary_domination_row(n, out);
    return;
  }
  // Indices fit in 32 bits, so only the low half of ~n matters.
  const __m256i not_n = _mm256_set1_epi32(static_cast<int>(~static_cast<std::uint32_t>(n)));
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi8(1);
  const __m256i order = _mm256_setr_epi32(0, 4, 1, 5, 2, 6, 3, 7);
  __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i eight = _mm256_set1_epi32(8);

  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    __m256i eq[4];
    for (auto& e : eq) {
      e = _mm256_cmpeq_epi32(_mm256_and_si256(idx, not_n), zero);
      idx = _mm256_add_epi32(idx, eight);
    }
    const __m256i words = _mm256_packs_epi32(eq[0], eq[1]);
    const __m256i words2 = _mm256_packs_epi32(eq[2], eq[3]);
    const __m256i bytes = _mm256_permutevar8x32_epi32(_mm256_packs_epi16(words, words2), order);
    store(&out[i], _mm256_and_si256(bytes, one));
  }
  for (; i < len; ++i) out[i] = (i & ~n) == 0 ? 1 : 0;
}

void nonzero_flags(std::span<const std::uint8_t> residues, std::span<std::uint8_t> out)
{
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t k = 0;
  for (; k + 32 <= residues.size(); k += 32) {
    const __m256i is_zero = _mm256_cmpeq_epi8(load(&residues[k]), zero);
    store(&out[k], _mm256_andnot_si256(is_zero, one));
  }
  for (; k < residues.size(); ++k) out[k] = residues[k] != 0 ? 1 : 0;
}

void nonzero_flags(std::span<const std::uint16_t> residues, std::span<std::uint8_t> out)
{
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t k = 0;
  for (; k + 32 <= residues.size(); k += 32) {
    const __m256i lo = _mm256_cmpeq_epi16(load(&residues[k]), zero);
    const __m256i hi = _mm256_cmpeq_epi16(load(&residues[k + 16]), zero);
    const __m256i packed = _mm256_permute4x64_epi64(_mm256_packs_epi16(lo, hi), 0xD8);
    store(&out[k], _mm256_andnot_si256(packed, one));
  }
  for (; k < residues.size(); ++k) out[k] = residues[k] != 0 ? 1 : 0;
}

void nonzero_flags(std::span<const std::uint32_t> residues, std::span<std::uint8_t> out)
{
  scalar::nonzero_flags(residues, out);
}

void nonzero_flags(std::span<const std::uint64_t> residues, std::span<std::uint8_t> out)
{
  scalar::nonzero_flags(residues, out);
}

std::size_t count_nonzero(std::span<const std::uint8_t> bytes)
{
  const __m256i zero = _mm256_setzero_si256();
  std::size_t zeros = 0;
  std::size_t k = 0;
  for (; k + 32 <= bytes.size(); k += 32) {
    const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(load(&bytes[k]), zero)));
    zeros += static_cast<std::size_t>(std::popcount(mask));
  }
  for (; k < bytes.size(); ++k) zeros += bytes[k] == 0;
  return bytes.size() - zeros;
}

} // namespace kummer::kernels::avx2
