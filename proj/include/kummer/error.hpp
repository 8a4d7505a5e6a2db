#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

/// Caller supplied an argument outside an operation's domain (bad base,
/// non-prime modulus, i > n, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A checked 64-bit computation would have wrapped.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// An identity that must hold (Kummer, Legendre, the digit-sum formulas,
/// the stopping-carry lemma) failed on concrete inputs. The verify harness
/// records these as counterexamples.
class TheoremViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace kummer
