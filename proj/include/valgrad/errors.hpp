#pragma once

#include <stdexcept>
#include <string>

namespace valgrad {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (+inf) + (-inf) has no meaningful value in the ordered group.
struct IndeterminateSum : Error {
  IndeterminateSum() : Error("indeterminate sum (+inf) + (-inf)") {}
};

// 0 * (+-inf) has no meaningful value.
struct IndeterminateProduct : Error {
  IndeterminateProduct() : Error("indeterminate product 0 * infinity") {}
};

struct EmptySequence : Error {
  EmptySequence() : Error("minimum of an empty sequence") {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// q-expansion requires a non-constant modulus.
struct ConstantModulus : Error {
  ConstantModulus() : Error("expansion modulus must have degree >= 1") {}
};

struct NotMonic : Error {
  explicit NotMonic(const std::string& what) : Error("polynomial must be monic: " + what) {}
};

struct FieldMismatch : Error {
  FieldMismatch() : Error("operands belong to different base fields") {}
};

struct NotPrime : Error {
  explicit NotPrime(long p) : Error("base field parameter " + std::to_string(p) + " is not prime") {}
};

// Graded elements combined over distinct valuations.
struct HandleMismatch : Error {
  HandleMismatch() : Error("graded elements live over different valuations") {}
};

// Connecting map applied to valuations that are not comparable in the required direction.
struct NotComparable : Error {
  explicit NotComparable(const std::string& witness)
      : Error("source valuation exceeds target on " + witness) {}
};

struct NotKeyStage : Error {
  explicit NotKeyStage(const std::string& what)
      : Error("polynomial is not a certified key stage: " + what) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(std::size_t i)
      : Error("chain index " + std::to_string(i) + " out of range") {}
};

struct GeneratorExhausted : Error {
  GeneratorExhausted() : Error("chain has no generator rule to extend its prefix") {}
};

// A generated chain member failed the strict-increase invariant.
struct OrderViolation : Error {
  explicit OrderViolation(const std::string& what) : Error("chain order violation: " + what) {}
};

struct UnstableWitness : Error {
  explicit UnstableWitness(const std::string& poly)
      : Error("sample polynomial is not stable along the chain: " + poly) {}
};

struct NotMinimalNonStable : Error {
  explicit NotMinimalNonStable(const std::string& what)
      : Error("augmentation key is not a minimal-degree non-stable polynomial: " + what) {}
};

struct GammaTooSmall : Error {
  explicit GammaTooSmall(const std::string& what)
      : Error("augmentation value does not dominate the chain: " + what) {}
};

struct InvalidFamilySpec : Error {
  explicit InvalidFamilySpec(const std::string& what) : Error("invalid family: " + what) {}
};

// Malformed descriptor or text input (CLI exit code 2).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// Structurally well-formed input that violates a documented invariant (CLI exit code 3).
struct InvalidDescriptor : Error {
  explicit InvalidDescriptor(const std::string& what) : Error("invalid descriptor: " + what) {}
};

}  // namespace valgrad
