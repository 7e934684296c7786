#include "affdet/cycdet.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "affdet/error.hpp"
#include "affdet/numutil.hpp"
#include "affdet/parallel.hpp"

namespace affdet {

namespace {

// ---- deterministic prime pool -------------------------------------------
//
// For the modular path we want primes l = 1 (mod p), because then Z/l
// contains a primitive p-th root of unity and every cyclotomic entry can be
// evaluated pointwise. The pool scans downward from 2^62 in steps of 2p, so
// the sequence is a pure function of p and runs in the same order on every
// machine. Staying above 2^61 keeps products easy to bound: n primes carry
// more than 61n bits.

constexpr std::uint64_t kScanTop = std::uint64_t(1) << 62;
constexpr std::uint64_t kScanFloor = std::uint64_t(1) << 61;

std::mutex pool_mutex;
std::map<long, std::vector<std::uint64_t>> prime_pool;

std::vector<std::uint64_t> primes_for(long p, std::size_t count) {
  std::lock_guard<std::mutex> lock(pool_mutex);
  auto& pool = prime_pool[p];
  std::uint64_t step = 2 * static_cast<std::uint64_t>(p);
  std::uint64_t cursor;
  if (pool.empty()) {
    // largest value <= 2^62 that is 1 mod 2p (odd, and 1 mod p)
    cursor = kScanTop - (kScanTop - 1) % step;
  } else {
    cursor = pool.back() - step;
  }
  mpz_class candidate;
  while (pool.size() < count) {
    if (cursor < kScanFloor) fail(Err::CapExceeded, "prime pool exhausted");
    candidate = cursor;
    if (mpz_probab_prime_p(candidate.get_mpz_t(), 40) > 0) pool.push_back(cursor);
    cursor -= step;
  }
  return std::vector<std::uint64_t>(pool.begin(), pool.begin() + count);
}

// some element of multiplicative order exactly p in Z/l (needs l = 1 mod p)
std::uint64_t root_of_order_p(std::uint64_t l, long p) {
  std::uint64_t e = (l - 1) / static_cast<std::uint64_t>(p);
  for (std::uint64_t x = 2;; ++x) {
    std::uint64_t h = powmod_u64(x, e, l);
    if (h != 1) return h;  // h^p = 1 by Fermat and p is prime
  }
}

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>>& m, std::uint64_t l) {
  std::size_t n = m.size();
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = l - det;
      if (det == l) det = 0;
    }
    det = mulmod_u64(det, m[col][col], l);
    std::uint64_t inv = invmod_u64(m[col][col], l);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      std::uint64_t f = mulmod_u64(m[r][col], inv, l);
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = submod_u64(m[r][c], mulmod_u64(f, m[col][c], l), l);
    }
  }
  return det;
}

// coefficients (degree <= d) of the polynomial through (x_t, y_t), t = 0..d
std::vector<std::uint64_t> lagrange_interpolate(const std::vector<std::uint64_t>& xs,
                                                const std::vector<std::uint64_t>& ys,
                                                std::uint64_t l) {
  std::size_t n = xs.size();
  // master product prod (X - x_s), coefficients low to high
  std::vector<std::uint64_t> master(n + 1, 0);
  master[0] = 1;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = n; i > 0; --i)
      master[i] = submod_u64(master[i - 1], mulmod_u64(master[i], xs[s], l), l);
    master[0] = submod_u64(0, mulmod_u64(master[0], xs[s], l), l);
  }
  std::vector<std::uint64_t> out(n, 0);
  std::vector<std::uint64_t> q(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    // synthetic division of master by (X - x_t)
    std::uint64_t carry = master[n];
    for (std::size_t i = n; i > 0; --i) {
      q[i - 1] = carry;
      carry = mulmod_u64(carry, xs[t], l);
      carry = (carry + master[i - 1]) % l;
    }
    // q evaluated at x_t is prod_{s != t} (x_t - x_s)
    std::uint64_t denom = 0;
    for (std::size_t i = n; i > 0; --i)
      denom = (mulmod_u64(denom, xs[t], l) + q[i - 1]) % l;
    std::uint64_t scale = mulmod_u64(ys[t] % l, invmod_u64(denom, l), l);
    for (std::size_t i = 0; i < n; ++i)
      out[i] = (out[i] + mulmod_u64(scale, q[i], l)) % l;
  }
  return out;
}

// canonical coefficients of det(m) reduced mod l, where l = 1 mod p
std::vector<std::uint64_t> det_coeffs_mod(const CycMat& m, long p, std::uint64_t l) {
  std::size_t n = m.size();
  std::size_t deg = static_cast<std::size_t>(p - 1);  // number of sample points
  std::uint64_t h = root_of_order_p(l, p);

  // reduce every canonical coefficient of every entry once
  std::vector<std::vector<std::uint64_t>> red(n * n, std::vector<std::uint64_t>(deg));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < deg; ++t)
        red[i * n + j][t] = mpz_mod_u64(m[i][j].coeffs()[t], l);

  std::vector<std::uint64_t> xs(deg), ys(deg);
  std::vector<std::vector<std::uint64_t>> work(n, std::vector<std::uint64_t>(n));
  std::uint64_t point = 1;
  for (std::size_t j = 0; j < deg; ++j) {
    point = mulmod_u64(point, h, l);  // h^{j+1}, the p-1 roots of 1+X+...+X^{p-1}
    xs[j] = point;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& cs = red[r * n + c];
        std::uint64_t v = 0;
        for (std::size_t t = deg; t > 0; --t)
          v = (mulmod_u64(v, point, l) + cs[t - 1]) % l;
        work[r][c] = v;
      }
    ys[j] = det_mod(work, l);
  }
  return lagrange_interpolate(xs, ys, l);
}

void check_matrix(const CycMat& m, long p) {
  std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) fail(Err::ShapeMismatch, "matrix is not square");
    for (const auto& e : row)
      if (e.p() != p) fail(Err::PrimeMismatch, "mixed cyclotomic orders in matrix");
  }
}

CycInt det_crt(const CycMat& m, long p) {
  std::size_t n = m.size();

  // Hadamard-type bound: |entry(z^j)| <= sum of |coefficients|, so every
  // evaluated determinant is at most H = prod_rows sqrt(sum_cols bound^2),
  // and each canonical coefficient of the determinant is below 2H (inverse
  // transform from values of magnitude H, then the z^{p-1} elimination at
  // most doubles it).
  Int hadamard = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int row_sq = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Int b = 0;
      for (const Int& c : m[i][j].coeffs()) b += abs(c);
      row_sq += b * b;
    }
    if (row_sq == 0) return CycInt(p);  // an all-zero row
    hadamard *= isqrt_ceil(row_sq);
  }
  Int threshold = 2 * p * hadamard;  // > 2 * (coefficient bound)

  std::size_t needed = mpz_sizeinbase(threshold.get_mpz_t(), 2) / 61 + 1;
  std::vector<std::uint64_t> primes = primes_for(p, needed + 1);  // +1 held out

  std::vector<std::vector<std::uint64_t>> slots(primes.size());
  parallel_for(primes.size(), [&](std::size_t r) {
    slots[r] = det_coeffs_mod(m, p, primes[r]);
  });

  // incremental CRT over the first `needed` primes
  std::size_t width = static_cast<std::size_t>(p - 1);
  std::vector<Int> lifted(width);
  Int modulus = 1;
  for (std::size_t r = 0; r < needed; ++r) {
    std::uint64_t l = primes[r];
    if (r == 0) {
      for (std::size_t i = 0; i < width; ++i) lifted[i] = Int(slots[0][i]);
    } else {
      std::uint64_t minv = invmod_u64(mpz_mod_u64(modulus, l), l);
      for (std::size_t i = 0; i < width; ++i) {
        std::uint64_t gap = submod_u64(slots[r][i], mpz_mod_u64(lifted[i], l), l);
        lifted[i] += modulus * Int(mulmod_u64(gap, minv, l));
      }
    }
    modulus *= Int(l);
  }
  // needed * 61 bits beats threshold by construction; keep the check anyway
  if (modulus <= threshold) fail(Err::CapExceeded, "modulus fell short of the bound");

  // symmetric lift
  for (Int& v : lifted)
    if (2 * v > modulus) v -= modulus;

  // recompute modulo the held-out prime and compare
  std::uint64_t lv = primes[needed];
  const auto& check = slots[needed];
  for (std::size_t i = 0; i < width; ++i)
    if (mpz_mod_u64(lifted[i], lv) != check[i])
      fail(Err::VerificationFailed, "held-out prime disagrees with the lifted determinant");

  CycInt out(p);
  for (std::size_t i = 0; i < width; ++i) out.coeff(static_cast<long>(i)) = lifted[i];
  return out;
}

CycInt det_fraction_free(const CycMat& input, long p) {
  CycMat m = input;
  std::size_t n = m.size();
  CycInt prev(p, Int(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return CycInt(p);
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = cyc_div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = CycInt(p);
    }
    prev = m[k][k];
  }
  CycInt det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

CycInt cyc_div_exact(const CycInt& a, const CycInt& b) {
  if (a.p() != b.p()) fail(Err::PrimeMismatch, "mixed cyclotomic orders in division");
  if (b.is_zero()) fail(Err::InvalidInput, "cyclotomic division by zero");
  long p = a.p();
  // multiply through by the conjugates of b: a/b = a * prod_{j>=2} conj_j(b) / N(b)
  CycInt num = a;
  CycInt nrm = b;
  for (long j = 2; j < p; ++j) {
    CycInt cj = b.conj(j);
    num = num * cj;
    nrm = nrm * cj;
  }
  std::optional<Int> norm = nrm.is_rational();
  if (!norm) fail(Err::NonRationalDeterminant, "field norm came out non-rational");
  CycInt out(p);
  for (long i = 0; i + 1 < p; ++i) {
    const Int& c = num.coeffs()[i];
    if (!mpz_divisible_p(c.get_mpz_t(), norm->get_mpz_t()))
      fail(Err::NotIntegral, "cyclotomic division is not exact");
    mpz_divexact(out.coeff(i).get_mpz_t(), c.get_mpz_t(), norm->get_mpz_t());
  }
  return out;
}

CycInt cyc_det(const CycMat& m, DetMethod method) {
  if (m.empty()) fail(Err::InvalidInput, "empty matrix");
  long p = m[0][0].p();
  check_matrix(m, p);
  return method == DetMethod::CRT ? det_crt(m, p) : det_fraction_free(m, p);
}

}  // namespace affdet
