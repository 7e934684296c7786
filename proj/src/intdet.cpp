#include "affdet/intdet.hpp"

#include <utility>

namespace affdet {

Int det_bareiss(std::vector<std::vector<Int>> m) {
  long n = static_cast<long>(m.size());
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (long r = 0; r + 1 < n; ++r) {
    long piv = r;
    while (piv < n && m[piv][r] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (long i = r + 1; i < n; ++i) {
      for (long j = r + 1; j < n; ++j) {
        Int num = m[r][r] * m[i][j] - m[i][r] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][r] = 0;
    }
    prev = m[r][r];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int circulant_det(const std::vector<Int>& first_row) {
  long n = static_cast<long>(first_row.size());
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m[i][j] = first_row[((j - i) % n + n) % n];
  return det_bareiss(std::move(m));
}

}  // namespace affdet
