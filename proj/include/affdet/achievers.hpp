#pragma once

#include <map>
#include <optional>
#include <string>

#include "affdet/detengine.hpp"

namespace affdet {

// a requested (A, B) value pair; only meaningful when B = A (mod q)
struct TargetPair {
  Int A;
  Int B;
  long q = 0;
};

// A group-ring element together with the pair it claims to realize. Every
// constructor below recomputes A and B through the determinant engine and
// refuses to hand back an unverified witness.
struct Witness {
  GroupRingElement elem;
  TargetPair claimed;
  std::string construction;        // coprime | square | q9-special | q27-special | monomial-sign | zero
  std::map<std::string, Int> params;
};

// F = (1 + x + ... + x^{l-1}) + (lambda + m(1 - y0)) * (1 + x + ... + x^{q-2})
// realizes any A with gcd(A, q-1) = 1 and any B = A (mod q), via
// A = l + lambda(q-1), B = A + mq.
Witness achieve_coprime(const FieldSpec& spec, const Int& A, const Int& B);

// F = (1 - Y_1 X) + (c + l(1 - y^{-U})) * (1 + x + ... + x^{q-2}) realizes
// A = c(q-1)^2 and B = c + lq, with U the one monomial missing from the
// first-row-ones determinant of the base element.
Witness achieve_square(const FieldSpec& spec, const Int& c, const Int& ell);

// the tabulated family for q = 9: A = 32(1+2c), B = 5 + 19c + 9b
Witness q9_special_witness(const Int& c, const Int& b);

// The tabulated families for q = 27, named by their base A-value:
// "4", "8", "12", "16", "20", "24" give A = A0-name + 52*lambda... precisely
// A = 4(kcase + 13 lambda), and "169" gives A = 169(1 + 2 lambda); in all
// cases B = B0 + B1*lambda + 27m with the stored (B0, B1).
Witness q27_special_witness(const std::string& case_name, const Int& lambda, const Int& m);

enum class Achievable { Yes, No, Unknown };

// Can A arise as a Z_m circulant determinant? Exact for m = 1, m prime,
// m = 8, and m twice an odd prime; elsewhere the sufficient rules
// (gcd(A, m) = 1 or m^2 | A) and the necessary divisibility conditions
// still decide many values, and the rest come back Unknown.
Achievable zq1_achievable(long m, const Int& A);

struct Verdict {
  bool member = false;
  std::optional<Witness> witness;
};

// Full membership test for the classified q (2^k with 2^k - 1 prime, 9, 27):
// is D an integer group determinant of the affine group? Yes always carries
// a verified witness.
Verdict decide_membership(const FieldSpec& spec, const Int& D);

// Shared routing: build a witness for (A, B) when some construction covers
// it (used by decide_membership and the CLI's achieve command). Returns
// nothing when no encoded construction applies. Requires B = A (mod q).
std::optional<Witness> try_achieve(const FieldSpec& spec, const Int& A, const Int& B);

}  // namespace affdet
