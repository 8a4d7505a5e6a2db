// NEON variants of the row kernels (aarch64, where NEON is baseline).

#include <arm_neon.h>

#include "kummer/kernels.hpp"

namespace kummer::kernels::neon {

namespace {

template <typename T>
inline T add_mod(T a, T b, T m)
{
  const T room = static_cast<T>(m - b);
  return a >= room ? static_cast<T>(a - room) : static_cast<T>(a + b);
}

} // namespace

void add_mod_row(std::span<const std::uint8_t> prev, std::span<std::uint8_t> next, std::uint8_t m)
{
  const std::size_t len = prev.size();
  next[0] = 1;
  const uint8x16_t mv = vdupq_n_u8(m);
  std::size_t k = 1;
  for (; k + 16 <= len; k += 16) {
    const uint8x16_t a = vld1q_u8(&prev[k - 1]);
    const uint8x16_t b = vld1q_u8(&prev[k]);
    const uint8x16_t room = vsubq_u8(mv, b);
    vst1q_u8(&next[k], vbslq_u8(vcgeq_u8(a, room), vsubq_u8(a, room), vaddq_u8(a, b)));
  }
  for (; k < len; ++k) next[k] = add_mod(prev[k - 1], prev[k], m);
  next[len] = 1;
}

void add_mod_row(std::span<const std::uint16_t> prev, std::span<std::uint16_t> next, std::uint16_t m)
{
  const std::size_t len = prev.size();
  next[0] = 1;
  const uint16x8_t mv = vdupq_n_u16(m);
  std::size_t k = 1;
  for (; k + 8 <= len; k += 8) {
    const uint16x8_t a = vld1q_u16(&prev[k - 1]);
    const uint16x8_t b = vld1q_u16(&prev[k]);
    const uint16x8_t room = vsubq_u16(mv, b);
    vst1q_u16(&next[k], vbslq_u16(vcgeq_u16(a, room), vsubq_u16(a, room), vaddq_u16(a, b)));
  }
  for (; k < len; ++k) next[k] = add_mod(prev[k - 1], prev[k], m);
  next[len] = 1;
}

void add_mod_row(std::span<const std::uint32_t> prev, std::span<std::uint32_t> next, std::uint32_t m)
{
  const std::size_t len = prev.size();
  next[0] = 1;
  const uint32x4_t mv = vdupq_n_u32(m);
  std::size_t k = 1;
  for (; k + 4 <= len; k += 4) {
    const uint32x4_t a = vld1q_u32(&prev[k - 1]);
    const uint32x4_t b = vld1q_u32(&prev[k]);
    const uint32x4_t room = vsubq_u32(mv, b);
    vst1q_u32(&next[k], vbslq_u32(vcgeq_u32(a, room), vsubq_u32(a, room), vaddq_u32(a, b)));
  }
  for (; k < len; ++k) next[k] = add_mod(prev[k - 1], prev[k], m);
  next[len] = 1;
}

void add_mod_row(std::span<const std::uint64_t> prev, std::span<std::uint64_t> next, std::uint64_t m)
{
  const std::size_t len = prev.size();
  next[0] = 1;
  const uint64x2_t mv = vdupq_n_u64(m);
  std::size_t k = 1;
  for (; k + 2 <= len; k += 2) {
    const uint64x2_t a = vld1q_u64(&prev[k - 1]);
    const uint64x2_t b = vld1q_u64(&prev[k]);
    const uint64x2_t room = vsubq_u64(mv, b);
    vst1q_u64(&next[k], vbslq_u64(vcgeq_u64(a, room), vsubq_u64(a, room), vaddq_u64(a, b)));
  }
  for (; k < len; ++k) next[k] = add_mod(prev[k - 1], prev[k], m);
  next[len] = 1;
}

void binary_domination_row(std::uint64_t n, std::span<std::uint8_t> out)
{
  const std::size_t len = out.size();
  if (len > (std::size_t{1} << 32)) {
    scalar::binary_domination_row(n, out);
    return;
  }
  const uint32x4_t not_n = vdupq_n_u32(~static_cast<std::uint32_t>(n));
  const uint32x4_t four = vdupq_n_u32(4);
  const std::uint32_t start[4] = {0, 1, 2, 3};
  uint32x4_t idx = vld1q_u32(start);
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    uint16x4_t halves[4];
    for (auto& h : halves) {
      // vtstq sets a lane when (idx & ~n) != 0; invert for "dominated".
      h = vmovn_u32(vmvnq_u32(vtstq_u32(idx, not_n)));
      idx = vaddq_u32(idx, four);
    }
    const uint8x8_t lo = vmovn_u16(vcombine_u16(halves[0], halves[1]));
    const uint8x8_t hi = vmovn_u16(vcombine_u16(halves[2], halves[3]));
    vst1q_u8(&out[i], vandq_u8(vcombine_u8(lo, hi), vdupq_n_u8(1)));
  }
  for (; i < len; ++i) out[i] = (i & ~n) == 0 ? 1 : 0;
}

void nonzero_flags(std::span<const std::uint8_t> residues, std::span<std::uint8_t> out)
{
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t k = 0;
  for (; k + 16 <= residues.size(); k += 16) {
    vst1q_u8(&out[k], vminq_u8(vld1q_u8(&residues[k]), one));
  }
  for (; k < residues.size(); ++k) out[k] = residues[k] != 0 ? 1 : 0;
}

void nonzero_flags(std::span<const std::uint16_t> residues, std::span<std::uint8_t> out)
{
  const uint16x8_t one = vdupq_n_u16(1);
  std::size_t k = 0;
  for (; k + 8 <= residues.size(); k += 8) {
    vst1_u8(&out[k], vmovn_u16(vminq_u16(vld1q_u16(&residues[k]), one)));
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
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 16 <= bytes.size(); k += 16) {
    count += vaddvq_u8(vminq_u8(vld1q_u8(&bytes[k]), one));
  }
  for (; k < bytes.size(); ++k) count += bytes[k] != 0;
  return count;
}

} // namespace kummer::kernels::neon
