#include <string>

#include "affdet/achievers.hpp"
#include "affdet/error.hpp"
#include "affdet/json_io.hpp"
#include "doctest.h"

using namespace affdet;

TEST_CASE("integers ride as numbers until they stop fitting") {
  CHECK(int_to_json(Int(42)).is_number_integer());
  CHECK(int_to_json(Int(-7)).is_number_integer());
  Int big("9007199254740993");  // 2^53 + 1
  CHECK(int_to_json(big).is_string());
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_from_json(json(17)) == 17);
  CHECK(int_from_json(json("-123456789012345678901234567890")) ==
        Int("-123456789012345678901234567890"));
  CHECK_THROWS_AS(int_from_json(json("0x12")), Error);
  CHECK_THROWS_AS(int_from_json(json(1.5)), Error);
  CHECK_THROWS_AS(int_from_json(json(nullptr)), Error);
}

TEST_CASE("field spec round trip") {
  FieldSpec s = find_field_spec(3, 3);
  FieldSpec back = field_spec_from_json(field_spec_to_json(s));
  CHECK(back.p == s.p);
  CHECK(back.k == s.k);
  CHECK(back.a == s.a);
  // defaulted polynomial
  json j;
  j["p"] = 2;
  j["k"] = 3;
  CHECK(field_spec_from_json(j).q == 8);
  j["a"] = std::vector<long>{0, 1, 1};  // x^3 - x^2 - x is reducible
  CHECK_THROWS_AS(field_spec_from_json(j), Error);
  json bad;
  bad["p"] = 3;
  CHECK_THROWS_AS(field_spec_from_json(bad), Error);
}

TEST_CASE("ring element round trips") {
  AbRingElement x = ab_monomial(3, 2, {1, 2}, Int(-9));
  CHECK(ab_from_json(ab_to_json(x)) == x);

  FieldSpec spec = find_field_spec(3, 2);
  GroupRingElement e(spec);
  e.at(3, 4) = Int("123456789123456789123456789");
  e.at(0, 0) = -2;
  GroupRingElement back = element_from_json(element_to_json(e));
  CHECK(back.coeffs == e.coeffs);
  CHECK(back.spec.q == 9);

  json j = element_to_json(e);
  j["coeffs"].erase(0);
  CHECK_THROWS_AS(element_from_json(j), Error);
}

TEST_CASE("reports serialize every factor as a decimal string") {
  GroupRingElement one(find_field_spec(2, 2));
  one.at(0, 0) = 1;
  DetReport rep = compute_report(one, true);
  json j = report_to_json(rep);
  CHECK(j["A"] == "1");
  CHECK(j["B"] == "1");
  CHECK(j["D"] == "1");
  CHECK(j["congruence_ok"].get<bool>());
  CHECK(j["avg_identity_ok"].get<bool>());
  CHECK(j["oracle_D"] == "1");
  DetReport no_oracle = compute_report(one, false);
  CHECK(report_to_json(no_oracle)["oracle_D"].is_null());
}

TEST_CASE("witness serialization carries the claim") {
  FieldSpec s8 = find_field_spec(2, 3);
  Witness w = achieve_coprime(s8, Int(3), Int(11));
  json j = witness_to_json(w);
  CHECK(j["construction"] == "coprime");
  CHECK(j["claimed"]["A"] == "3");
  CHECK(j["claimed"]["B"] == "11");
  CHECK(j["params"].contains("lambda"));
  GroupRingElement back = element_from_json(j["element"]);
  CHECK(compute_A(back) == 3);
  CHECK(compute_B(back) == 11);
}
