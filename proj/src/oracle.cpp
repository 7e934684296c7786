#include "affdet/oracle.hpp"

#include <cstddef>
#include <utility>

#include "affdet/config.hpp"
#include "affdet/error.hpp"
#include "affdet/intdet.hpp"

namespace affdet {

namespace {

void check_associativity_sample(const GroupTable& t) {
  long stride = t.n / 16;
  if (stride < 1) stride = 1;
  for (long i = 0; i < t.n; i += stride)
    for (long j = 0; j < t.n; j += stride)
      for (long k = 0; k < t.n; k += stride)
        if (t.mul[t.mul[i][j]][k] != t.mul[i][t.mul[j][k]])
          fail(Err::VerificationFailed, "group law failed an associativity check");
}

}  // namespace

GroupTable build_group_table(const FieldSpec& spec) {
  long n = spec.q * (spec.q - 1);
  if (n > config().oracle_cap)
    fail(Err::CapExceeded, "group order exceeds the oracle cap");

  GroupTable t;
  t.q = spec.q;
  t.n = n;
  long m = spec.q - 1;  // order of the multiplicative part

  // powers of the companion matrix give the action of a = r^l on b
  std::vector<ResMat> pw(m);
  ResMat M = companion_matrix(spec);
  ResMat acc(spec.k, std::vector<long>(spec.k, 0));
  for (long i = 0; i < spec.k; ++i) acc[i][i] = 1;
  for (long l = 0; l < m; ++l) {
    pw[l] = acc;
    acc = mat_mul_mod(M, acc, spec.p);
  }

  t.elements.reserve(n);
  for (long l = 0; l < m; ++l)
    for (long b = 0; b < spec.q; ++b) t.elements.emplace_back(l, b);

  t.mul.assign(n, std::vector<long>(n, 0));
  for (long i = 0; i < n; ++i) {
    auto [li, bi] = t.elements[i];
    std::vector<long> bvi = index_to_tuple(bi, spec.p, spec.k);
    for (long j = 0; j < n; ++j) {
      auto [lj, bj] = t.elements[j];
      // (a_i, b_i)(a_j, b_j) = (a_i a_j, a_i b_j + b_i)
      std::vector<long> moved = mat_vec(pw[li], index_to_tuple(bj, spec.p, spec.k), spec.p);
      for (long c = 0; c < spec.k; ++c) moved[c] = (moved[c] + bvi[c]) % spec.p;
      t.mul[i][j] = ((li + lj) % m) * spec.q + tuple_to_index(moved, spec.p, spec.k);
    }
  }

  t.inv.assign(n, 0);
  for (long i = 0; i < n; ++i) {
    auto [li, bi] = t.elements[i];
    long linv = (m - li) % m;
    std::vector<long> moved = mat_vec(pw[linv], index_to_tuple(bi, spec.p, spec.k), spec.p);
    for (long c = 0; c < spec.k; ++c) moved[c] = (spec.p - moved[c]) % spec.p;
    t.inv[i] = linv * spec.q + tuple_to_index(moved, spec.p, spec.k);
  }

  // sanity: identity really is index 0, inverses invert, law associates
  for (long i = 0; i < n; ++i) {
    if (t.mul[0][i] != i || t.mul[i][0] != i)
      fail(Err::VerificationFailed, "identity is not neutral in the group table");
    if (t.mul[i][t.inv[i]] != 0)
      fail(Err::VerificationFailed, "inverse table is inconsistent");
  }
  check_associativity_sample(t);
  return t;
}

Int brute_force_D(const GroupRingElement& elem) {
  GroupTable t = build_group_table(elem.spec);
  std::vector<std::vector<Int>> m(t.n, std::vector<Int>(t.n));
  for (long i = 0; i < t.n; ++i)
    for (long j = 0; j < t.n; ++j) m[i][j] = elem.coeffs[t.mul[i][t.inv[j]]];
  return det_bareiss(std::move(m));
}

GroupRingElement group_ring_multiply(const GroupRingElement& f, const GroupRingElement& g) {
  if (f.spec.q != g.spec.q || f.spec.p != g.spec.p || f.spec.a != g.spec.a)
    fail(Err::ShapeMismatch, "factors live over different groups");
  GroupTable t = build_group_table(f.spec);
  GroupRingElement out(f.spec);
  for (long i = 0; i < t.n; ++i) {
    if (f.coeffs[i] == 0) continue;
    for (long j = 0; j < t.n; ++j) {
      if (g.coeffs[j] == 0) continue;
      out.coeffs[t.mul[i][j]] += f.coeffs[i] * g.coeffs[j];
    }
  }
  return out;
}

Int cyclic_det(long m, const std::vector<Int>& g) {
  if (m < 1) fail(Err::InvalidInput, "modulus must be positive");
  if (static_cast<long>(g.size()) != m)
    fail(Err::InvalidInput, "coefficient sequence length must equal the modulus");
  return circulant_det(g);
}

bool cyclic_divisibility_check(long m, const std::vector<Int>& g) {
  Int det = cyclic_det(m, g);
  for (long r : prime_factors(m)) {
    if (!mpz_divisible_ui_p(det.get_mpz_t(), static_cast<unsigned long>(r)))
      continue;  // r does not divide the determinant, nothing to require
    Int required = r;  // will become r^{a+1} for r^a the exact power in m
    for (long rest = m; rest % r == 0; rest /= r) required *= r;
    if (!mpz_divisible_p(det.get_mpz_t(), required.get_mpz_t())) return false;
  }
  return true;
}

}  // namespace affdet
