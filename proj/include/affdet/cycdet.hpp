#pragma once

#include <vector>

#include "affdet/rings.hpp"

namespace affdet {

using CycMat = std::vector<std::vector<CycInt>>;

enum class DetMethod {
  // Evaluate at the p-1 roots of the p-th cyclotomic polynomial modulo a
  // deterministic set of 62-bit primes l = 1 (mod p), take determinants by
  // modular elimination, interpolate the canonical coefficients per prime,
  // and combine with the CRT past a Hadamard-type bound. A held-out prime
  // recomputation guards the reconstruction.
  CRT,
  // Division-free cross-check: Bareiss elimination directly over the
  // cyclotomic integers, exact division via conjugates and the field norm.
  FractionFree,
};

CycInt cyc_det(const CycMat& m, DetMethod method = DetMethod::CRT);

// exact quotient a / b in Z[z] (throws if b is zero); exposed for tests
CycInt cyc_div_exact(const CycInt& a, const CycInt& b);

}  // namespace affdet
