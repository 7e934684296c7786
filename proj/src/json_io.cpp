#include "affdet/json_io.hpp"

#include <cstdint>

#include "affdet/error.hpp"

namespace affdet {

namespace {

const std::int64_t kJsonSafe = (std::int64_t(1) << 53) - 1;  // exact in a double

Int int_from_string(const std::string& s) { return parse_int(s); }

}  // namespace

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    long lv = v.get_si();
    if (lv <= kJsonSafe && lv >= -kJsonSafe) return json(lv);
  }
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return int_from_string(j.get<std::string>());
  fail(Err::InvalidInput, "expected an integer or a decimal string");
}

json field_spec_to_json(const FieldSpec& spec) {
  json j;
  j["p"] = spec.p;
  j["k"] = spec.k;
  j["a"] = spec.a;
  return j;
}

FieldSpec field_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("k"))
    fail(Err::InvalidInput, "field spec needs p and k");
  long p = j.at("p").get<long>();
  long k = j.at("k").get<long>();
  std::optional<std::vector<long>> a;
  if (j.contains("a") && !j.at("a").is_null()) a = j.at("a").get<std::vector<long>>();
  return find_field_spec(p, k, a);
}

json ab_to_json(const AbRingElement& x) {
  json j;
  j["p"] = x.p;
  j["k"] = x.k;
  json cs = json::array();
  for (const Int& c : x.coeffs) cs.push_back(int_to_json(c));
  j["coeffs"] = cs;
  return j;
}

AbRingElement ab_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("k") || !j.contains("coeffs"))
    fail(Err::InvalidInput, "ring element needs p, k, coeffs");
  AbRingElement x(j.at("p").get<long>(), j.at("k").get<long>());
  const json& cs = j.at("coeffs");
  if (!cs.is_array() || static_cast<long>(cs.size()) != x.size())
    fail(Err::InvalidInput, "ring element coefficient count must be p^k");
  for (std::size_t i = 0; i < cs.size(); ++i) x.coeffs[i] = int_from_json(cs[i]);
  return x;
}

json element_to_json(const GroupRingElement& elem) {
  json j;
  j["spec"] = field_spec_to_json(elem.spec);
  json cs = json::array();
  for (const Int& c : elem.coeffs) cs.push_back(int_to_json(c));
  j["coeffs"] = cs;
  return j;
}

GroupRingElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("spec") || !j.contains("coeffs"))
    fail(Err::InvalidInput, "group ring element needs spec and coeffs");
  GroupRingElement elem(field_spec_from_json(j.at("spec")));
  const json& cs = j.at("coeffs");
  if (!cs.is_array() || static_cast<long>(cs.size()) != elem.size())
    fail(Err::InvalidInput, "coefficient count must be (q-1) * q");
  for (std::size_t i = 0; i < cs.size(); ++i) elem.coeffs[i] = int_from_json(cs[i]);
  return elem;
}

json report_to_json(const DetReport& rep) {
  json j;
  j["A"] = rep.A.get_str();
  j["B"] = rep.B.get_str();
  j["D"] = rep.D.get_str();
  j["congruence_ok"] = rep.congruence_ok;
  j["avg_identity_ok"] = rep.avg_identity_ok;
  j["oracle_D"] = rep.oracle_D ? json(rep.oracle_D->get_str()) : json(nullptr);
  return j;
}

json witness_to_json(const Witness& w) {
  json j;
  j["construction"] = w.construction;
  json params = json::object();
  for (const auto& [name, value] : w.params) params[name] = int_to_json(value);
  j["params"] = params;
  j["element"] = element_to_json(w.elem);
  j["claimed"] = {{"A", w.claimed.A.get_str()}, {"B", w.claimed.B.get_str()}};
  return j;
}

}  // namespace affdet
