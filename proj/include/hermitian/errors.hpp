#pragma once

#include <stdexcept>
#include <string>

namespace hq {

// Numeric values are part of the C API (see hq.h) and must not be reordered.
enum class ErrorCode : int {
  NonPrimeP = 1,
  DegreeTooLarge = 2,
  NoIrreducibleFound = 3,
  DivisionByZero = 4,
  FieldMismatch = 5,
  FieldTooSmall = 6,
  BadSubfieldDegree = 7,
  ZeroPolynomial = 8,
  DegreeZeroInVar = 9,
  ZeroDenominator = 10,
  NotOnCurve = 11,
  ScaleExceeded = 12,
  BadParameters = 13,
  ZeroLambda = 14,
  SingularMatrix = 15,
  EntriesNotInFq2 = 16,
  DegenerateEliminant = 17,
  InvalidArgument = 18,
  Internal = 19,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hq
