#pragma once

#include <stdexcept>
#include <string>

namespace affdet {

// Every failure mode the library distinguishes. The CLI maps these to exit
// codes: unsupported requests exit 3, malformed input exits 2, failed
// checks exit 1.
enum class Err {
  NotPrime,
  NotIrreducible,
  NotPrimitive,
  OrbitDegenerate,
  PrimeMismatch,
  ShapeMismatch,
  NotIntegral,
  NonRationalDeterminant,
  CapExceeded,
  NotCoprime,
  CongruenceViolation,
  VerificationFailed,
  MissingMonomialNotUnique,
  GcdFailure,
  ReferenceMismatch,
  UnsupportedQ,
  UnsupportedCase,
  UnsupportedTarget,
  InvalidInput,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace affdet
