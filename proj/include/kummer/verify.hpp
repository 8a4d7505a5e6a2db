#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kummer/checked.hpp"

namespace kummer {

struct VerifyOptions {
  natural max_n = 512;
  std::vector<natural> primes{2, 3, 5, 7, 11, 13};
  natural rows = 200;
  std::uint64_t seed = 1;
  /// Properties run concurrently on up to this many threads; 0 = hardware concurrency.
  unsigned threads = 0;
  natural oracle_cap = 100'000;
};

/// Outcome of one property sweep.
struct PropertyResult {
  std::string name;
  std::string sweep;           ///< parameter ranges, human readable
  std::uint64_t cases = 0;     ///< cases actually run
  std::uint64_t declared = 0;  ///< cardinality of the declared sweep
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures; ///< first counterexamples, sorted
  double elapsed_ms = 0.0;

  [[nodiscard]] bool passed() const noexcept { return failure_count == 0 && cases == declared; }
};

struct VerifyReport {
  VerifyOptions options;
  std::string isa;
  std::vector<PropertyResult> properties;

  [[nodiscard]] bool passed() const noexcept;
  /// Deterministic for a given seed unless include_timing is set.
  [[nodiscard]] std::string to_text(bool include_timing = false) const;
  [[nodiscard]] std::string to_json(bool include_timing = false) const;
};

/// Runs every cross-method property sweep. Theorem violations raised inside a
/// sweep are recorded as counterexamples rather than propagated.
[[nodiscard]] VerifyReport run_verify(const VerifyOptions& options);

} // namespace kummer
