#include "affdet/error.hpp"

namespace affdet {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::NotPrimitive: return "NotPrimitive";
    case Err::OrbitDegenerate: return "OrbitDegenerate";
    case Err::PrimeMismatch: return "PrimeMismatch";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::NotIntegral: return "NotIntegral";
    case Err::NonRationalDeterminant: return "NonRationalDeterminant";
    case Err::CapExceeded: return "CapExceeded";
    case Err::NotCoprime: return "NotCoprime";
    case Err::CongruenceViolation: return "CongruenceViolation";
    case Err::VerificationFailed: return "VerificationFailed";
    case Err::MissingMonomialNotUnique: return "MissingMonomialNotUnique";
    case Err::GcdFailure: return "GcdFailure";
    case Err::ReferenceMismatch: return "ReferenceMismatch";
    case Err::UnsupportedQ: return "UnsupportedQ";
    case Err::UnsupportedCase: return "UnsupportedCase";
    case Err::UnsupportedTarget: return "UnsupportedTarget";
    case Err::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace affdet
