#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affdet/detengine.hpp"

namespace affdet {

// the contents of data/reference_values.json, embedded at build time
extern const char* const kReferenceValuesJson;

// One tabulated q = 27 family: base element G, the published multiplier t,
// and the values the family must reproduce. A = 4(k + 13*lambda) for the six
// cases named "4" through "24" (k = name/4); k = 0 marks the "169" family
// with A = 169(1 + 2*lambda). B = B0 + B1*lambda + 27m throughout.
struct ReferenceCase {
  std::string name;  // base A value as a string
  Int A0;
  long k = 0;
  Int B0;
  Int B1;
  GroupRingElement G;
  AbRingElement t;
  std::optional<AbRingElement> alpha;  // stored when the source displays it
  std::optional<AbRingElement> beta;   // (y0 - 1) * alpha, when displayed
};

struct ReferenceData {
  std::vector<std::string> orbit_q9;
  std::vector<std::string> orbit_q27;

  FieldSpec q9_spec;
  GroupRingElement q9_base;  // 1 + Y X^2 + X^3 + X^4
  AbRingElement q9_t;        // 1 - y^2 z^2
  AbRingElement q9_alpha;
  AbRingElement q9_t_alpha;  // t * alpha
  Int q9_B0;
  Int q9_B1;

  FieldSpec q27_spec;
  std::vector<ReferenceCase> q27_cases;

  const ReferenceCase* find_case(const std::string& name) const;
};

// parsed embedded table; built once, immutable afterwards
const ReferenceData& reference_data();

}  // namespace affdet
