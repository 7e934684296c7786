#include "affdet/field.hpp"

#include <algorithm>
#include <set>

#include "affdet/config.hpp"
#include "affdet/error.hpp"
#include "affdet/numutil.hpp"

namespace affdet {

namespace {

// dense polynomials over F_p, index = degree, no trailing zeros
using Poly = std::vector<long>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// multiply then reduce mod the monic modulus m
Poly poly_mul_mod(const Poly& x, const Poly& y, const Poly& m, long p) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      r[i + j] = (r[i + j] + x[i] * y[j]) % p;
  }
  long k = static_cast<long>(m.size()) - 1;  // m is monic of degree k
  for (long d = static_cast<long>(r.size()) - 1; d >= k; --d) {
    long c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (long i = 0; i < k; ++i)
      r[d - k + i] = mod_floor(r[d - k + i] - c * m[i], p);
  }
  r.resize(k);
  poly_trim(r);
  return r;
}

Poly poly_pow_mod(Poly base, Int exp, const Poly& m, long p) {
  Poly r = {1};
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) r = poly_mul_mod(r, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    exp >>= 1;
  }
  return r;
}

Poly poly_mod(Poly f, const Poly& g, long p) {
  poly_trim(f);
  long dg = static_cast<long>(g.size()) - 1;
  long lead_inv = 1;
  // make g effectively monic via the inverse of its leading coefficient
  for (long t = 1; t < p; ++t)
    if (g[dg] * t % p == 1) { lead_inv = t; break; }
  while (static_cast<long>(f.size()) - 1 >= dg && !f.empty()) {
    long d = static_cast<long>(f.size()) - 1;
    long c = f[d] * lead_inv % p;
    for (long i = 0; i <= dg; ++i)
      f[d - dg + i] = mod_floor(f[d - dg + i] - c * g[i], p);
    poly_trim(f);
  }
  return f;
}

Poly poly_gcd(Poly f, Poly g, long p) {
  poly_trim(f);
  poly_trim(g);
  while (!g.empty()) {
    Poly r = poly_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

// f(x) = x^k - a[k-1] x^{k-1} - ... - a[0] as a dense monic polynomial
Poly minimal_poly(long p, long k, const std::vector<long>& a) {
  Poly f(k + 1, 0);
  f[k] = 1;
  for (long i = 0; i < k; ++i) f[i] = mod_floor(-a[i], p);
  return f;
}

bool is_irreducible(const Poly& f, long p, long k) {
  if (k == 1) return true;
  if (f[0] == 0) return false;  // x divides f
  // x^{p^k} == x mod f, and gcd(x^{p^{k/l}} - x, f) = 1 for prime l | k
  Poly x = {0, 1};
  std::vector<Poly> frob(k + 1);  // frob[j] = x^{p^j} mod f
  frob[0] = x;
  for (long j = 1; j <= k; ++j)
    frob[j] = poly_pow_mod(frob[j - 1], Int(p), f, p);
  if (frob[k] != x) return false;
  for (long l : prime_factors(k)) {
    Poly d = frob[k / l];
    // d - x
    if (d.size() < 2) d.resize(2, 0);
    d[1] = mod_floor(d[1] - 1, p);
    poly_trim(d);
    Poly g = poly_gcd(f, d, p);
    if (!(g.size() == 1 && g[0] != 0)) return false;
  }
  return true;
}

bool is_primitive_root(const Poly& f, long p, long q) {
  // order of x in F_p[x]/f must be exactly q-1
  if (q == 2) return true;  // trivial unit group
  for (long d : prime_factors(q - 1)) {
    Poly r = poly_pow_mod({0, 1}, Int((q - 1) / d), f, p);
    if (r.size() == 1 && r[0] == 1) return false;
  }
  return true;
}

long det_mod_p(ResMat m, long p) {
  long k = static_cast<long>(m.size());
  long det = 1;
  for (long c = 0; c < k; ++c) {
    long piv = c;
    while (piv < k && m[piv][c] % p == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = mod_floor(-det, p);
    }
    long d = mod_floor(m[c][c], p);
    det = det * d % p;
    long dinv = 1;
    for (long t = 1; t < p; ++t)
      if (d * t % p == 1) { dinv = t; break; }
    for (long i = c + 1; i < k; ++i) {
      long fct = m[i][c] * dinv % p;
      if (fct == 0) continue;
      for (long j = c; j < k; ++j)
        m[i][j] = mod_floor(m[i][j] - fct * m[c][j], p);
    }
  }
  return det;
}

void validate_candidate(long p, long k, long q, const std::vector<long>& a,
                        bool from_override) {
  Poly f = minimal_poly(p, k, a);
  if (f[0] == 0 || !is_irreducible(f, p, k)) {
    if (from_override)
      fail(Err::NotIrreducible, "override polynomial is reducible over F_p");
    fail(Err::NotIrreducible, "candidate polynomial is reducible");
  }
  if (!is_primitive_root(f, p, q))
    fail(Err::NotPrimitive, "root of the polynomial does not generate F_q^*");
  // f(1) != 0 is automatic for k >= 2 (1 would be a root); for k = 1 it can
  // only fail at q = 2, where F_2^* is trivial and r = 1 is forced
  if (q > 2) {
    long f1 = 0;
    for (long c : f) f1 = (f1 + c) % p;
    if (f1 == 0)
      fail(Err::NotPrimitive, "polynomial vanishes at 1");
  }
}

}  // namespace

FieldSpec find_field_spec(long p, long k, std::optional<std::vector<long>> override_a) {
  if (!is_small_prime(p)) fail(Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (k < 1) fail(Err::InvalidInput, "k must be >= 1");
  Int qz = int_pow(Int(p), static_cast<unsigned long>(k));
  if (qz > config().orbit_cap)
    fail(Err::CapExceeded, "q exceeds the companion-power cap");
  long q = static_cast<long>(qz.get_si());

  FieldSpec spec{p, k, q, {}};
  if (override_a) {
    const auto& a = *override_a;
    if (static_cast<long>(a.size()) != k)
      fail(Err::InvalidInput, "override coefficient count must equal k");
    for (long c : a)
      if (c < 0 || c >= p) fail(Err::InvalidInput, "override coefficients must lie in [0, p)");
    validate_candidate(p, k, q, a, true);
    spec.a = a;
    return spec;
  }

  // built-in choices used by the reference computations
  if (p == 3 && k == 2) { spec.a = {1, 2}; return spec; }
  if (p == 3 && k == 3) { spec.a = {2, 1, 0}; return spec; }

  // lexicographically smallest primitive polynomial
  std::vector<long> a(k, 0);
  for (;;) {
    bool ok = true;
    Poly f = minimal_poly(p, k, a);
    if (f[0] == 0 || !is_irreducible(f, p, k) || !is_primitive_root(f, p, q))
      ok = false;
    if (ok && q > 2) {
      long f1 = 0;
      for (long c : f) f1 = (f1 + c) % p;
      if (f1 == 0) ok = false;
    }
    if (ok) { spec.a = a; return spec; }
    long i = k - 1;
    while (i >= 0 && a[i] == p - 1) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  fail(Err::NotPrimitive, "no primitive polynomial found (impossible for prime p)");
}

ResMat companion_matrix(const FieldSpec& spec) {
  long k = spec.k;
  ResMat m(k, std::vector<long>(k, 0));
  for (long i = 0; i + 1 < k; ++i) m[i + 1][i] = 1;
  for (long i = 0; i < k; ++i) m[i][k - 1] = spec.a[i];
  return m;
}

ResMat mat_mul_mod(const ResMat& x, const ResMat& y, long p) {
  long k = static_cast<long>(x.size());
  ResMat r(k, std::vector<long>(k, 0));
  for (long i = 0; i < k; ++i)
    for (long t = 0; t < k; ++t) {
      if (x[i][t] == 0) continue;
      for (long j = 0; j < k; ++j)
        r[i][j] = (r[i][j] + x[i][t] * y[t][j]) % p;
    }
  return r;
}

std::vector<long> mat_vec(const ResMat& m, const std::vector<long>& v, long p) {
  long k = static_cast<long>(m.size());
  std::vector<long> r(k, 0);
  for (long i = 0; i < k; ++i) {
    long s = 0;
    for (long j = 0; j < k; ++j) s += m[i][j] * v[j];
    r[i] = s % p;
  }
  return r;
}

std::vector<long> mat_transpose_vec(const ResMat& m, const std::vector<long>& v, long p) {
  long k = static_cast<long>(m.size());
  std::vector<long> r(k, 0);
  for (long j = 0; j < k; ++j) {
    long s = 0;
    for (long i = 0; i < k; ++i) s += m[i][j] * v[i];
    r[j] = s % p;
  }
  return r;
}

Orbit orbit(const FieldSpec& spec) {
  long p = spec.p, k = spec.k, q = spec.q;
  ResMat M = companion_matrix(spec);
  Orbit orb{p, k, q, {}};
  orb.powers.reserve(q - 1);
  ResMat id(k, std::vector<long>(k, 0));
  for (long i = 0; i < k; ++i) id[i][i] = 1;
  ResMat cur = id;
  for (long j = 0; j < q - 1; ++j) {
    orb.powers.push_back(cur);
    cur = mat_mul_mod(cur, M, p);
  }
  if (cur != id)
    fail(Err::OrbitDegenerate, "M^{q-1} != I");

  // first columns must cover the nonzero vectors of F_p^k exactly once
  std::set<std::vector<long>> seen;
  for (const auto& pw : orb.powers) {
    std::vector<long> col(k);
    bool zero = true;
    for (long i = 0; i < k; ++i) {
      col[i] = pw[i][0];
      if (col[i]) zero = false;
    }
    if (zero) fail(Err::OrbitDegenerate, "orbit hits the zero vector");
    if (!seen.insert(col).second)
      fail(Err::OrbitDegenerate, "orbit repeats a vector before closing");
  }
  if (static_cast<long>(seen.size()) != q - 1)
    fail(Err::OrbitDegenerate, "orbit does not cover F_p^k \\ {0}");

  // partial geometric sums of M stay nonsingular below the full period
  ResMat acc(k, std::vector<long>(k, 0));
  for (long t = 1; t < q - 1; ++t) {
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j)
        acc[i][j] = (acc[i][j] + orb.powers[t - 1][i][j]) % p;
    if (det_mod_p(acc, p) == 0)
      fail(Err::OrbitDegenerate, "I + M + ... + M^{t-1} singular at t = " + std::to_string(t));
  }
  return orb;
}

std::vector<long> row_monomial_exponents(const Orbit& orb, long row, long var) {
  if (row < 1 || row > orb.q - 1) fail(Err::InvalidInput, "row out of range");
  if (var < 0 || var >= orb.k) fail(Err::InvalidInput, "var out of range");
  std::vector<long> e(orb.k);
  for (long i = 0; i < orb.k; ++i) e[i] = orb.powers[row - 1][i][var];
  return e;
}

std::string monomial_string(const std::vector<long>& e) {
  static const char* short_names[3] = {"y", "z", "w"};
  long k = static_cast<long>(e.size());
  std::string s;
  for (long i = 0; i < k; ++i) {
    if (e[i] == 0) continue;
    if (k <= 3) s += short_names[i];
    else s += "y" + std::to_string(i);
    if (e[i] > 1) s += std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::string> orbit_monomials(const FieldSpec& spec, long var) {
  Orbit orb = orbit(spec);
  std::vector<std::string> out;
  out.reserve(spec.q - 1);
  for (long row = 1; row <= spec.q - 1; ++row)
    out.push_back(monomial_string(row_monomial_exponents(orb, row, var)));
  return out;
}

}  // namespace affdet
