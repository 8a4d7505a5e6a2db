#pragma once

// Row kernels for the Pascal-triangle generators.
//
// Each kernel has a scalar reference in kernels::scalar and, where the build
// provides them, AVX2 (x86-64) and NEON (aarch64) variants with identical
// results. The unqualified kernels::* entry points dispatch to the best ISA the
// running CPU supports. KUMMER_SIMD=scalar|avx2|neon in the environment, or
// set_isa(), pins the choice.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace kummer::kernels {

enum class Isa { scalar, avx2, neon };

[[nodiscard]] std::string_view isa_name(Isa isa) noexcept;

/// ISAs compiled in and supported by this CPU, scalar first.
[[nodiscard]] std::vector<Isa> available_isas();

[[nodiscard]] Isa active_isa();

/// Throws kummer::InvalidArgument if `isa` is not available.
void set_isa(Isa isa);

// next[0] = next[n+1] = 1 and next[k] = (prev[k-1] + prev[k]) mod m,
// for prev of length n+1 with entries in [0, m). next.size() == prev.size() + 1.
#define KUMMER_KERNEL_DECLS                                                                        \
  void add_mod_row(std::span<const std::uint8_t> prev, std::span<std::uint8_t> next, std::uint8_t m);     \
  void add_mod_row(std::span<const std::uint16_t> prev, std::span<std::uint16_t> next, std::uint16_t m);  \
  void add_mod_row(std::span<const std::uint32_t> prev, std::span<std::uint32_t> next, std::uint32_t m);  \
  void add_mod_row(std::span<const std::uint64_t> prev, std::span<std::uint64_t> next, std::uint64_t m);  \
  /* out[i] = 1 iff (i & ~n) == 0, i.e. the binary digits of n dominate those of i */                   \
  void binary_domination_row(std::uint64_t n, std::span<std::uint8_t> out);                              \
  /* out[k] = residues[k] != 0 */                                                                        \
  void nonzero_flags(std::span<const std::uint8_t> residues, std::span<std::uint8_t> out);               \
  void nonzero_flags(std::span<const std::uint16_t> residues, std::span<std::uint8_t> out);              \
  void nonzero_flags(std::span<const std::uint32_t> residues, std::span<std::uint8_t> out);              \
  void nonzero_flags(std::span<const std::uint64_t> residues, std::span<std::uint8_t> out);              \
  std::size_t count_nonzero(std::span<const std::uint8_t> bytes);

namespace scalar {
KUMMER_KERNEL_DECLS
}

#if defined(KUMMER_HAVE_AVX2)
namespace avx2 {
KUMMER_KERNEL_DECLS
}
#endif

#if defined(KUMMER_HAVE_NEON)
namespace neon {
KUMMER_KERNEL_DECLS
}
#endif

KUMMER_KERNEL_DECLS

#undef KUMMER_KERNEL_DECLS

} // namespace kummer::kernels
