#include "affdet/reference.hpp"

#include <memory>
#include <mutex>

#include "affdet/error.hpp"
#include "affdet/json_io.hpp"

namespace affdet {

namespace {

ReferenceCase parse_case(const json& j) {
  ReferenceCase c;
  c.name = j.at("name").get<std::string>();
  c.A0 = int_from_json(j.at("A0"));
  c.k = j.at("k").get<long>();
  c.B0 = int_from_json(j.at("B0"));
  c.B1 = int_from_json(j.at("B1"));
  c.G = element_from_json(j.at("G"));
  c.t = ab_from_json(j.at("t"));
  if (j.contains("alpha")) c.alpha = ab_from_json(j.at("alpha"));
  if (j.contains("beta")) c.beta = ab_from_json(j.at("beta"));
  return c;
}

std::unique_ptr<ReferenceData> parse_all() {
  json root = json::parse(kReferenceValuesJson);
  auto d = std::make_unique<ReferenceData>();
  d->orbit_q9 = root.at("orbit_q9").get<std::vector<std::string>>();
  d->orbit_q27 = root.at("orbit_q27").get<std::vector<std::string>>();

  const json& q9 = root.at("q9");
  d->q9_spec = field_spec_from_json(q9.at("spec"));
  d->q9_base = element_from_json(q9.at("base"));
  d->q9_t = ab_from_json(q9.at("t"));
  d->q9_alpha = ab_from_json(q9.at("alpha"));
  d->q9_t_alpha = ab_from_json(q9.at("t_alpha"));
  d->q9_B0 = int_from_json(q9.at("B0"));
  d->q9_B1 = int_from_json(q9.at("B1"));

  const json& q27 = root.at("q27");
  d->q27_spec = field_spec_from_json(q27.at("spec"));
  for (const json& cj : q27.at("cases")) d->q27_cases.push_back(parse_case(cj));
  if (d->q27_cases.size() != 7)
    fail(Err::ReferenceMismatch, "expected seven tabulated cases");
  return d;
}

}  // namespace

const ReferenceCase* ReferenceData::find_case(const std::string& name) const {
  for (const ReferenceCase& c : q27_cases)
    if (c.name == name) return &c;
  return nullptr;
}

const ReferenceData& reference_data() {
  static const std::unique_ptr<ReferenceData> data = parse_all();
  return *data;
}

}  // namespace affdet
