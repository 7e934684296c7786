#pragma once

#include <optional>
#include <string>
#include <utility>

#include "affdet/detengine.hpp"
#include "affdet/json_io.hpp"

namespace affdet {

// Outcome of the multiplier search on a base element G. The search computes
// alpha, the first-row-ones determinant of G, and then hunts for a
// multiplier t with coefficient sum zero whose product with alpha has
// constant term one. Adding (lambda + m*t) * (1 + x + ... + x^{q-2}) to G
// then moves (A, B) by the full lattice the congruence allows.
struct ProcedureResult {
  AbRingElement alpha;
  AbRingElement t;
  std::string method;  // "pair" when t is a difference of two monomials, else "gcd"
  // the exponent-tuple indices (i, j) with alpha[i] - alpha[j] = 1 that
  // produced t, when the scan found one
  std::optional<std::pair<long, long>> pair_used;
  // cofactors xi with sum_u xi[u] * ((y0 - 1) alpha)[u] = 1, when the scan
  // fell back to the extended gcd
  std::optional<AbRingElement> xi;
  Int B0;  // B of the base element itself
  Int B1;  // sum of alpha over the nontrivial character tuples
};

// Run the search on G. A pinned multiplier skips the scan: it is verified
// and classified by shape, but no certificate is attached. Throws
// Err::GcdFailure when no multiplier exists by either route.
ProcedureResult run_procedure(const GroupRingElement& G,
                              std::optional<AbRingElement> pinned_t = std::nullopt);

// Base elements by name: the tabulated families for q = 9 ("32") and q = 27
// ("4" ... "24", "169"), and for any other field the ladder element
// 1 + y0 x + x^2 + ... + x^{m-1} under its decimal name m, 1 <= m <= q-2.
GroupRingElement base_element_catalog(const FieldSpec& spec, const std::string& case_name);

// Re-derive one section of the stored tables from scratch and compare.
// Sections: "q9", "q27", "orbits". Returns a structured report with a
// top-level "pass"; mismatches are reported, not thrown.
json reproduce_reference(const std::string& section);

}  // namespace affdet
