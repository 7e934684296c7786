#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "affdet/numutil.hpp"

namespace affdet {

// Integer of the p-th cyclotomic field in the canonical power basis
// c0 + c1*z + ... + c[p-2]*z^{p-2}, z = exp(2*pi*i/p). Canonical means no
// z^{p-1} term; it is eliminated through z^{p-1} = -(1 + z + ... + z^{p-2}),
// so equality is plain coefficient equality.
class CycInt {
 public:
  CycInt() : p_(2), c_(1, Int(0)) {}
  explicit CycInt(long p) : p_(p), c_(p - 1, Int(0)) {}
  CycInt(long p, Int n) : p_(p), c_(p - 1, Int(0)) { c_[0] = std::move(n); }

  // z^e, canonical
  static CycInt monomial(long p, long e);
  // from exponent coefficients d0..d[p-1] (one per power of z)
  static CycInt from_exponent_form(long p, const std::vector<Int>& d);

  long p() const { return p_; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int& coeff(long i) { return c_[i]; }

  bool is_zero() const;
  std::optional<Int> is_rational() const;
  CycInt conj(long j) const;  // the automorphism z -> z^j, gcd(j, p) = 1

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  bool operator==(const CycInt& o) const = default;

 private:
  void check_same(const CycInt& o) const;
  long p_;
  std::vector<Int> c_;
};

CycInt cyc_add(const CycInt& x, const CycInt& y);
CycInt cyc_mul(const CycInt& x, const CycInt& y);
CycInt cyc_monomial(long p, long e);
std::optional<Int> cyc_is_rational(const CycInt& x);

// Element of Z[y0, ..., y[k-1]] / <yi^p - 1>: a dense coefficient vector of
// length p^k indexed by exponent tuples, index = sum u_t * p^t (u0 least
// significant). Reduction mod <yi^p - 1> is built into the index arithmetic.
struct AbRingElement {
  long p = 2;
  long k = 1;
  std::vector<Int> coeffs;

  AbRingElement() : coeffs(2, Int(0)) {}
  AbRingElement(long p_, long k_);
  long size() const { return static_cast<long>(coeffs.size()); }
  bool operator==(const AbRingElement& o) const = default;
};

long tuple_to_index(const std::vector<long>& u, long p, long k);
std::vector<long> index_to_tuple(long idx, long p, long k);

AbRingElement ab_one(long p, long k);
AbRingElement ab_monomial(long p, long k, const std::vector<long>& u, const Int& c = Int(1));
AbRingElement ab_add(const AbRingElement& x, const AbRingElement& y);
AbRingElement ab_sub(const AbRingElement& x, const AbRingElement& y);
AbRingElement ab_mul(const AbRingElement& x, const AbRingElement& y);
AbRingElement ab_scale(const AbRingElement& x, const Int& c);

// substitute yi = z^{s_i}: returns sum_u a(u) z^{<s,u> mod p}
CycInt ab_evaluate(const AbRingElement& x, const std::vector<long>& s);

// inverse character transform: recover the element whose evaluation at every
// tuple s equals values[index(s)]; each coefficient is
// (1/p^k) sum_s value(s) z^{-<s,u>} and must come out a rational integer
AbRingElement ab_from_character_values(long p, long k, const std::vector<CycInt>& values);

// (S, a0) with S = sum over s != 0 of evaluate(x, s) = p^k a0 - evaluate(x, 0)
std::pair<Int, Int> ab_sum_over_nontrivial(const AbRingElement& x);

}  // namespace affdet
