#pragma once

#include <utility>
#include <vector>

#include "affdet/detengine.hpp"
#include "affdet/field.hpp"
#include "affdet/numutil.hpp"

namespace affdet {

// The affine group over F_q, tabulated. Elements are pairs (l, b): the map
// v -> r^l v + b with b stored by its exponent-tuple index, ordered l-major
// so the table index matches the GroupRingElement coefficient index and the
// identity sits at index 0.
struct GroupTable {
  long q = 0;
  long n = 0;  // group order q(q-1)
  std::vector<std::pair<long, long>> elements;
  std::vector<std::vector<long>> mul;  // mul[i][j] = index of g_i * g_j
  std::vector<long> inv;

  const std::pair<long, long>& element(long i) const {
    return elements[static_cast<std::size_t>(i)];
  }
};

// Tabulates the group law (a, b)(a', b') = (aa', ab' + b) and verifies it:
// identity placement, inverses, associativity spot-checks. Fails with
// CapExceeded when q(q-1) is above the configured oracle cap.
GroupTable build_group_table(const FieldSpec& spec);

// Ground truth for everything else: the determinant of the full
// q(q-1) x q(q-1) matrix with entry (i, j) the coefficient of g_i g_j^{-1},
// by fraction-free elimination over the integers. Deliberately shares no
// machinery with the representation-based route.
Int brute_force_D(const GroupRingElement& elem);

// product in the integer group ring, via the multiplication table
GroupRingElement group_ring_multiply(const GroupRingElement& f, const GroupRingElement& g);

// m x m circulant determinant of g(x) = g[0] + g[1] x + ... + g[m-1] x^{m-1}
Int cyclic_det(long m, const std::vector<Int>& g);

// The classical divisibility restriction on cyclic group determinants:
// for every prime r dividing both the determinant and m, with r^a the exact
// power of r in m, the determinant must be divisible by r^{a+1}.
bool cyclic_divisibility_check(long m, const std::vector<Int>& g);

}  // namespace affdet
