#pragma once

#include <optional>
#include <vector>

#include "affdet/field.hpp"
#include "affdet/rings.hpp"

namespace affdet {

// Element of the integer group ring of the affine group over F_q, written as
//   F = sum_{j=0}^{q-2} f_j(Y0, ..., Y[k-1]) X^j,
// X of order q-1 (multiplicative part) and each Yi of order p (additive
// part). Dense layout: coeffs[(j, u)] = coeffs[j * p^k + u] with u the
// exponent-tuple index from the rings module.
struct GroupRingElement {
  FieldSpec spec;
  std::vector<Int> coeffs;

  GroupRingElement() = default;
  explicit GroupRingElement(const FieldSpec& s)
      : spec(s), coeffs(static_cast<std::size_t>((s.q - 1) * s.q), Int(0)) {}

  long size() const { return static_cast<long>(coeffs.size()); }
  Int& at(long j, long u) { return coeffs[static_cast<std::size_t>(j * spec.q + u)]; }
  const Int& at(long j, long u) const {
    return coeffs[static_cast<std::size_t>(j * spec.q + u)];
  }
};

// The two determinant factors and the checks that come with them. D is the
// full group determinant, which factors as A * B^{q-1}: A collects the q-1
// linear characters and B is the determinant of the one irreducible
// representation of degree q-1.
struct DetReport {
  Int A;
  Int B;
  Int D;
  bool congruence_ok = false;    // B = A (mod q)
  bool avg_identity_ok = false;  // A + (q-1)B = q * (constant term of the B polynomial)
  std::optional<Int> oracle_D;   // independent brute-force determinant, on request
};

// f_j as a standalone element of Z[y]/<y^p - 1>
AbRingElement f_slice(const GroupRingElement& elem, long j);

// determinant contributed by the characters of the cyclic part: the
// (q-1) x (q-1) integer circulant of g(x) = F(x, 1, ..., 1)
Int compute_A(const GroupRingElement& elem);

// Determinant of the degree-(q-1) representation: entry (i, j) is
// f_{(j-i) mod (q-1)} evaluated at the character tuple of row i, rows
// advancing by the transposed companion matrix from `start` (default e1).
// The result is a rational integer for every start; the start only
// reorders rows of the underlying construction.
Int compute_B(const GroupRingElement& elem,
              std::optional<std::vector<long>> start = std::nullopt);

// B-matrix determinant kept as a polynomial in y0, ..., y[k-1] mod
// <yi^p - 1>, recovered from its values at all p^k character tuples.
// Evaluating at 0 gives A, at any nonzero tuple gives B, and the constant
// term a0 ties them together: q * a0 = A + (q-1) * B.
AbRingElement symbolic_B_polynomial(const GroupRingElement& elem);

// same determinant but with the first row replaced by all ones
AbRingElement group_ring_det_with_first_row_ones(const GroupRingElement& elem);

DetReport compute_report(const GroupRingElement& elem, bool with_oracle);

// ---- small constructors used by the achievers and the search ------------

// F * X^t: cyclic shift of the X-exponent
GroupRingElement x_shift(const GroupRingElement& f, long t);

// F + h(Y) * (1 + X + ... + X^{q-2})
GroupRingElement add_all_ones_multiple(const GroupRingElement& f, const AbRingElement& h);

GroupRingElement negate_element(const GroupRingElement& f);

// F = 1 + Y0 + Y0^2 + ... + Y0^{p-1}, the degenerate element with B = 0
GroupRingElement phi_p_element(const FieldSpec& spec);

}  // namespace affdet
