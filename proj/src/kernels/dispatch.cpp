#include <atomic>
#include <cstdlib>
#include <string>

#include "kummer/error.hpp"
#include "kummer/kernels.hpp"

namespace kummer::kernels {

namespace {

bool cpu_supports(Isa isa) noexcept
{
  switch (isa) {
  case Isa::scalar:
    return true;
  case Isa::avx2:
#if defined(KUMMER_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
  case Isa::neon:
#if defined(KUMMER_HAVE_NEON)
    return true;
#else
    return false;
#endif
  }
  return false;
}

Isa initial_isa()
{
  if (const char* env = std::getenv("KUMMER_SIMD"); env != nullptr && *env != '\0') {
    const std::string want(env);
    for (Isa isa : available_isas()) {
      if (isa_name(isa) == want) return isa;
    }
  }
  return available_isas().back();
}

std::atomic<Isa>& current()
{
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept
{
  switch (isa) {
  case Isa::scalar:
    return "scalar";
  case Isa::avx2:
    return "avx2";
  case Isa::neon:
    return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas()
{
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

Isa active_isa()
{
  return current().load(std::memory_order_relaxed);
}

void set_isa(Isa isa)
{
  if (!cpu_supports(isa)) {
    throw InvalidArgument("kernel ISA '" + std::string(isa_name(isa)) + "' is not available on this build/CPU");
  }
  current().store(isa, std::memory_order_relaxed);
}

#if defined(KUMMER_HAVE_AVX2)
#define KUMMER_DISPATCH_AVX2(call) \
  case Isa::avx2:                  \
    return avx2::call;
#else
#define KUMMER_DISPATCH_AVX2(call)
#endif

#if defined(KUMMER_HAVE_NEON)
#define KUMMER_DISPATCH_NEON(call) \
  case Isa::neon:                  \
    return neon::call;
#else
#define KUMMER_DISPATCH_NEON(call)
#endif

#define KUMMER_DISPATCH(call)   \
  switch (active_isa()) {       \
    KUMMER_DISPATCH_AVX2(call)  \
    KUMMER_DISPATCH_NEON(call)  \
  default:                      \
    return scalar::call;        \
  }

void add_mod_row(std::span<const std::uint8_t> prev, std::span<std::uint8_t> next, std::uint8_t m)
{
  KUMMER_DISPATCH(add_mod_row(prev, next, m))
}
void add_mod_row(std::span<const std::uint16_t> prev, std::span<std::uint16_t> next, std::uint16_t m)
{
  KUMMER_DISPATCH(add_mod_row(prev, next, m))
}
void add_mod_row(std::span<const std::uint32_t> prev, std::span<std::uint32_t> next, std::uint32_t m)
{
  KUMMER_DISPATCH(add_mod_row(prev, next, m))
}
void add_mod_row(std::span<const std::uint64_t> prev, std::span<std::uint64_t> next, std::uint64_t m)
{
  KUMMER_DISPATCH(add_mod_row(prev, next, m))
}
void binary_domination_row(std::uint64_t n, std::span<std::uint8_t> out)
{
  KUMMER_DISPATCH(binary_domination_row(n, out))
}
void nonzero_flags(std::span<const std::uint8_t> residues, std::span<std::uint8_t> out)
{
  KUMMER_DISPATCH(nonzero_flags(residues, out))
}
void nonzero_flags(std::span<const std::uint16_t> residues, std::span<std::uint8_t> out)
{
  KUMMER_DISPATCH(nonzero_flags(residues, out))
}
void nonzero_flags(std::span<const std::uint32_t> residues, std::span<std::uint8_t> out)
{
  KUMMER_DISPATCH(nonzero_flags(residues, out))
}
void nonzero_flags(std::span<const std::uint64_t> residues, std::span<std::uint8_t> out)
{
  KUMMER_DISPATCH(nonzero_flags(residues, out))
}
std::size_t count_nonzero(std::span<const std::uint8_t> bytes)
{
  KUMMER_DISPATCH(count_nonzero(bytes))
}

} // namespace kummer::kernels
