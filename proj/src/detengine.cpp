#include "affdet/detengine.hpp"

#include <cstddef>

#include "affdet/config.hpp"
#include "affdet/cycdet.hpp"
#include "affdet/error.hpp"
#include "affdet/intdet.hpp"
#include "affdet/oracle.hpp"
#include "affdet/parallel.hpp"

namespace affdet {

namespace {

void check_element(const GroupRingElement& elem) {
  const FieldSpec& s = elem.spec;
  if (s.q < 2) fail(Err::InvalidInput, "field spec is empty");
  if (elem.size() != (s.q - 1) * s.q)
    fail(Err::ShapeMismatch, "coefficient vector length does not match q");
}

std::vector<long> normalize_start(const GroupRingElement& elem,
                                  const std::optional<std::vector<long>>& start) {
  const FieldSpec& s = elem.spec;
  std::vector<long> out(static_cast<std::size_t>(s.k), 0);
  if (!start) {
    out[0] = 1;
    return out;
  }
  if (static_cast<long>(start->size()) != s.k)
    fail(Err::InvalidInput, "start tuple has wrong length");
  bool nonzero = false;
  for (long t = 0; t < s.k; ++t) {
    out[t] = mod_floor((*start)[t], s.p);
    if (out[t] != 0) nonzero = true;
  }
  if (!nonzero) fail(Err::InvalidInput, "start tuple must be nonzero");
  return out;
}

// the (q-1) x (q-1) matrix of the degree-(q-1) representation, with row i
// evaluated at the character tuple (M^T)^i * start
CycMat representation_matrix(const GroupRingElement& elem,
                             const std::vector<long>& start, bool first_row_ones) {
  const FieldSpec& spec = elem.spec;
  long n = spec.q - 1;
  std::vector<AbRingElement> fs(static_cast<std::size_t>(n));
  for (long d = 0; d < n; ++d) fs[d] = f_slice(elem, d);

  ResMat M = companion_matrix(spec);
  CycMat m(static_cast<std::size_t>(n), std::vector<CycInt>(static_cast<std::size_t>(n)));
  std::vector<long> svec = start;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (first_row_ones && i == 0) {
        m[i][j] = CycInt(spec.p, Int(1));
      } else {
        long d = mod_floor(j - i, n);
        m[i][j] = ab_evaluate(fs[d], svec);
      }
    }
    svec = mat_transpose_vec(M, svec, spec.p);
  }
  return m;
}

Int rational_det(const CycMat& m) {
  CycInt det = cyc_det(m, DetMethod::CRT);
  std::optional<Int> r = det.is_rational();
  if (!r)
    fail(Err::NonRationalDeterminant,
         "representation determinant is not a rational integer");
  return *r;
}

// determinant-as-polynomial via evaluation at all p^k character tuples
AbRingElement det_transform(const GroupRingElement& elem, bool first_row_ones) {
  check_element(elem);
  const FieldSpec& spec = elem.spec;
  if (spec.q > config().symbolic_cap)
    fail(Err::CapExceeded, "q exceeds the symbolic determinant cap");
  std::vector<CycInt> values(static_cast<std::size_t>(spec.q));
  parallel_for(static_cast<std::size_t>(spec.q), [&](std::size_t sidx) {
    std::vector<long> s = index_to_tuple(static_cast<long>(sidx), spec.p, spec.k);
    CycMat m = representation_matrix(elem, s, first_row_ones);
    values[sidx] = cyc_det(m, DetMethod::CRT);
  });
  return ab_from_character_values(spec.p, spec.k, values);
}

}  // namespace

AbRingElement f_slice(const GroupRingElement& elem, long j) {
  const FieldSpec& s = elem.spec;
  if (j < 0 || j >= s.q - 1) fail(Err::InvalidInput, "X-exponent out of range");
  AbRingElement out(s.p, s.k);
  for (long u = 0; u < s.q; ++u) out.coeffs[static_cast<std::size_t>(u)] = elem.at(j, u);
  return out;
}

Int compute_A(const GroupRingElement& elem) {
  check_element(elem);
  const FieldSpec& s = elem.spec;
  long n = s.q - 1;
  std::vector<Int> g(static_cast<std::size_t>(n), Int(0));
  for (long j = 0; j < n; ++j)
    for (long u = 0; u < s.q; ++u) g[static_cast<std::size_t>(j)] += elem.at(j, u);
  return circulant_det(g);
}

Int compute_B(const GroupRingElement& elem, std::optional<std::vector<long>> start) {
  check_element(elem);
  std::vector<long> s0 = normalize_start(elem, start);
  return rational_det(representation_matrix(elem, s0, false));
}

AbRingElement symbolic_B_polynomial(const GroupRingElement& elem) {
  return det_transform(elem, false);
}

AbRingElement group_ring_det_with_first_row_ones(const GroupRingElement& elem) {
  return det_transform(elem, true);
}

DetReport compute_report(const GroupRingElement& elem, bool with_oracle) {
  check_element(elem);
  const FieldSpec& spec = elem.spec;
  DetReport rep;
  rep.A = compute_A(elem);
  rep.B = compute_B(elem);
  rep.D = rep.A * int_pow(rep.B, static_cast<unsigned long>(spec.q - 1));

  Int diff = rep.B - rep.A;
  rep.congruence_ok = mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(spec.q)) != 0;

  if (spec.q <= config().symbolic_cap) {
    AbRingElement poly = symbolic_B_polynomial(elem);
    rep.avg_identity_ok = (Int(spec.q) * poly.coeffs[0] == rep.A + Int(spec.q - 1) * rep.B);
  } else {
    // beyond the symbolic cap, settle for the divisibility consequence
    Int lhs = rep.A + Int(spec.q - 1) * rep.B;
    rep.avg_identity_ok =
        mpz_divisible_ui_p(lhs.get_mpz_t(), static_cast<unsigned long>(spec.q)) != 0;
  }

  if (with_oracle) rep.oracle_D = brute_force_D(elem);
  return rep;
}

GroupRingElement x_shift(const GroupRingElement& f, long t) {
  check_element(f);
  long n = f.spec.q - 1;
  GroupRingElement out(f.spec);
  for (long j = 0; j < n; ++j) {
    long jt = mod_floor(j + t, n);
    for (long u = 0; u < f.spec.q; ++u) out.at(jt, u) = f.at(j, u);
  }
  return out;
}

GroupRingElement add_all_ones_multiple(const GroupRingElement& f, const AbRingElement& h) {
  check_element(f);
  if (h.p != f.spec.p || h.k != f.spec.k)
    fail(Err::ShapeMismatch, "multiplier lives over a different ring");
  GroupRingElement out = f;
  for (long j = 0; j < f.spec.q - 1; ++j)
    for (long u = 0; u < f.spec.q; ++u)
      out.at(j, u) += h.coeffs[static_cast<std::size_t>(u)];
  return out;
}

GroupRingElement negate_element(const GroupRingElement& f) {
  GroupRingElement out = f;
  for (Int& c : out.coeffs) c = -c;
  return out;
}

GroupRingElement phi_p_element(const FieldSpec& spec) {
  GroupRingElement out(spec);
  for (long e = 0; e < spec.p; ++e) out.at(0, e) = 1;  // index of Y0^e is e
  return out;
}

}  // namespace affdet
