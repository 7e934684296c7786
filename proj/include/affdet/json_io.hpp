#pragma once

#include "json.hpp"

#include "affdet/achievers.hpp"
#include "affdet/detengine.hpp"
#include "affdet/field.hpp"
#include "affdet/rings.hpp"

namespace affdet {

using json = nlohmann::ordered_json;

// Integers ride as JSON numbers while they fit a double exactly, as decimal
// strings beyond that (D easily overflows every fixed-width type). Readers
// accept both forms everywhere.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);  // validates via find_field_spec

json ab_to_json(const AbRingElement& x);
AbRingElement ab_from_json(const json& j);

json element_to_json(const GroupRingElement& elem);
GroupRingElement element_from_json(const json& j);

json report_to_json(const DetReport& rep);

json witness_to_json(const Witness& w);

}  // namespace affdet
