#pragma once

#include <optional>
#include <string>
#include <vector>

namespace affdet {

// q = p^k with a primitive minimal polynomial
//   f(x) = x^k - a[k-1] x^{k-1} - ... - a[1] x - a[0]   over F_p.
// A root r of f generates F_q^*, and the basis 1, r, ..., r^{k-1}
// identifies F_q with F_p^k.
struct FieldSpec {
  long p = 0;
  long k = 0;
  long q = 0;  // p^k
  std::vector<long> a;  // least nonnegative residues mod p
};

// k x k matrix with entries reduced mod p
using ResMat = std::vector<std::vector<long>>;

// All powers M^0, ..., M^{q-2} of the companion matrix. M is the matrix of
// multiplication by r, so the first columns M^j e_1 enumerate F_p^k \ {0}.
struct Orbit {
  long p = 0;
  long k = 0;
  long q = 0;
  std::vector<ResMat> powers;
};

// Validates (p, k) and picks the minimal polynomial: built-in choices for
// (3,2) and (3,3), otherwise the lexicographically smallest primitive
// (a0, ..., a[k-1]). An explicit override is validated and used as given.
FieldSpec find_field_spec(long p, long k,
                          std::optional<std::vector<long>> override_a = std::nullopt);

// companion matrix: ones on the subdiagonal, last column a0..a[k-1]
ResMat companion_matrix(const FieldSpec& spec);

// all q-1 companion powers, with both orbit invariants asserted:
// the first columns cover the nonzero vectors exactly once, and
// I + M + ... + M^{t-1} is nonsingular for 1 <= t < q-1
Orbit orbit(const FieldSpec& spec);

// column `var` of M^{row-1}: the exponent vector (u0, ..., u[k-1]) of the
// monomial in row `row` (1-based) of the representation of Y_var
std::vector<long> row_monomial_exponents(const Orbit& orb, long row, long var);

// "1", "y", "y2z", ... (variables y, z, w for k <= 3, else y0, y1, ...)
std::string monomial_string(const std::vector<long>& e);

// the monomial sequence the variable Y_var runs through, rows 1..q-1
std::vector<std::string> orbit_monomials(const FieldSpec& spec, long var = 0);

// internal helpers shared with other modules
ResMat mat_mul_mod(const ResMat& x, const ResMat& y, long p);
std::vector<long> mat_transpose_vec(const ResMat& m, const std::vector<long>& v, long p);
std::vector<long> mat_vec(const ResMat& m, const std::vector<long>& v, long p);

}  // namespace affdet
