#pragma once

#include <vector>

#include "affdet/numutil.hpp"

namespace affdet {

// Exact determinant by fraction-free Bareiss elimination. Intermediate
// entries are minors of the input, so growth stays within the Hadamard bound
// and every division is exact.
Int det_bareiss(std::vector<std::vector<Int>> m);

// determinant of the n x n circulant with the given first row
// (entry (i, j) = row[(j - i) mod n])
Int circulant_det(const std::vector<Int>& first_row);

}  // namespace affdet
