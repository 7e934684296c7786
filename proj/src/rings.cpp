#include "affdet/rings.hpp"

#include "affdet/error.hpp"

namespace affdet {

void CycInt::check_same(const CycInt& o) const {
  if (p_ != o.p_) fail(Err::PrimeMismatch, "cyclotomic operands over different primes");
}

CycInt CycInt::monomial(long p, long e) {
  if (e < 0 || e >= p) fail(Err::InvalidInput, "monomial exponent out of range");
  CycInt r(p);
  if (e < p - 1) {
    r.c_[e] = 1;
  } else {
    // z^{p-1} = -(1 + z + ... + z^{p-2})
    for (auto& c : r.c_) c = -1;
  }
  return r;
}

CycInt CycInt::from_exponent_form(long p, const std::vector<Int>& d) {
  if (static_cast<long>(d.size()) != p)
    fail(Err::ShapeMismatch, "exponent form must have p entries");
  CycInt r(p);
  for (long i = 0; i < p - 1; ++i) r.c_[i] = d[i] - d[p - 1];
  return r;
}

bool CycInt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

std::optional<Int> CycInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

CycInt CycInt::conj(long j) const {
  j = mod_floor(j, p_);
  std::vector<Int> d(p_, Int(0));
  for (long e = 0; e < p_ - 1; ++e) {
    if (c_[e] == 0) continue;
    d[e * j % p_] += c_[e];
  }
  return from_exponent_form(p_, d);
}

CycInt CycInt::operator-() const {
  CycInt r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same(b);
  long p = a.p_;
  std::vector<Int> d(p, Int(0));
  for (long i = 0; i < p - 1; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; j < p - 1; ++j) {
      if (b.c_[j] == 0) continue;
      d[(i + j) % p] += a.c_[i] * b.c_[j];
    }
  }
  return CycInt::from_exponent_form(p, d);
}

CycInt cyc_add(const CycInt& x, const CycInt& y) { return x + y; }
CycInt cyc_mul(const CycInt& x, const CycInt& y) { return x * y; }
CycInt cyc_monomial(long p, long e) { return CycInt::monomial(p, e); }
std::optional<Int> cyc_is_rational(const CycInt& x) { return x.is_rational(); }

AbRingElement::AbRingElement(long p_, long k_) : p(p_), k(k_) {
  long n = 1;
  for (long i = 0; i < k; ++i) n *= p;
  coeffs.assign(n, Int(0));
}

long tuple_to_index(const std::vector<long>& u, long p, long k) {
  long idx = 0, w = 1;
  for (long t = 0; t < k; ++t) {
    idx += mod_floor(u[t], p) * w;
    w *= p;
  }
  return idx;
}

std::vector<long> index_to_tuple(long idx, long p, long k) {
  std::vector<long> u(k);
  for (long t = 0; t < k; ++t) {
    u[t] = idx % p;
    idx /= p;
  }
  return u;
}

AbRingElement ab_one(long p, long k) {
  AbRingElement r(p, k);
  r.coeffs[0] = 1;
  return r;
}

AbRingElement ab_monomial(long p, long k, const std::vector<long>& u, const Int& c) {
  if (static_cast<long>(u.size()) != k) fail(Err::ShapeMismatch, "monomial exponent arity");
  AbRingElement r(p, k);
  r.coeffs[tuple_to_index(u, p, k)] = c;
  return r;
}

static void check_shape(const AbRingElement& x, const AbRingElement& y) {
  if (x.p != y.p || x.k != y.k)
    fail(Err::ShapeMismatch, "group-ring operands over different (p, k)");
}

AbRingElement ab_add(const AbRingElement& x, const AbRingElement& y) {
  check_shape(x, y);
  AbRingElement r = x;
  for (long i = 0; i < r.size(); ++i) r.coeffs[i] += y.coeffs[i];
  return r;
}

AbRingElement ab_sub(const AbRingElement& x, const AbRingElement& y) {
  check_shape(x, y);
  AbRingElement r = x;
  for (long i = 0; i < r.size(); ++i) r.coeffs[i] -= y.coeffs[i];
  return r;
}

AbRingElement ab_mul(const AbRingElement& x, const AbRingElement& y) {
  check_shape(x, y);
  long p = x.p, k = x.k, n = x.size();
  AbRingElement r(p, k);
  for (long i = 0; i < n; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (long j = 0; j < n; ++j) {
      if (y.coeffs[j] == 0) continue;
      // exponent-wise addition mod p per variable
      long idx = 0, w = 1, ii = i, jj = j;
      for (long t = 0; t < k; ++t) {
        idx += ((ii % p) + (jj % p)) % p * w;
        ii /= p;
        jj /= p;
        w *= p;
      }
      r.coeffs[idx] += x.coeffs[i] * y.coeffs[j];
    }
  }
  return r;
}

AbRingElement ab_scale(const AbRingElement& x, const Int& c) {
  AbRingElement r = x;
  for (auto& v : r.coeffs) v *= c;
  return r;
}

CycInt ab_evaluate(const AbRingElement& x, const std::vector<long>& s) {
  if (static_cast<long>(s.size()) != x.k)
    fail(Err::ShapeMismatch, "evaluation tuple arity");
  long p = x.p;
  std::vector<Int> d(p, Int(0));
  for (long i = 0; i < x.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    long dot = 0, ii = i;
    for (long t = 0; t < x.k; ++t) {
      dot += (ii % p) * mod_floor(s[t], p);
      ii /= p;
    }
    d[dot % p] += x.coeffs[i];
  }
  return CycInt::from_exponent_form(p, d);
}

AbRingElement ab_from_character_values(long p, long k, const std::vector<CycInt>& values) {
  AbRingElement r(p, k);
  long n = r.size();
  if (static_cast<long>(values.size()) != n)
    fail(Err::ShapeMismatch, "need one character value per tuple");
  Int pk(n);
  for (long uidx = 0; uidx < n; ++uidx) {
    std::vector<long> u = index_to_tuple(uidx, p, k);
    CycInt acc(p);
    for (long sidx = 0; sidx < n; ++sidx) {
      if (values[sidx].p() != p) fail(Err::PrimeMismatch, "character value prime");
      long dot = 0, ss = sidx;
      for (long t = 0; t < k; ++t) {
        dot += (ss % p) * u[t];
        ss /= p;
      }
      acc += values[sidx] * CycInt::monomial(p, mod_floor(-dot, p));
    }
    auto rat = acc.is_rational();
    if (!rat)
      fail(Err::NotIntegral, "character values are not Galois-consistent");
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), rat->get_mpz_t(), pk.get_mpz_t());
    if (rem != 0)
      fail(Err::NotIntegral, "coefficient not divisible by p^k");
    r.coeffs[uidx] = quot;
  }
  return r;
}

std::pair<Int, Int> ab_sum_over_nontrivial(const AbRingElement& x) {
  Int a0 = x.coeffs[0];
  Int total(0);
  for (const auto& c : x.coeffs) total += c;  // evaluation at the zero tuple
  Int S = Int(x.size()) * a0 - total;
  return {S, a0};
}

}  // namespace affdet
