#include <optional>

#include "affdet/achievers.hpp"
#include "affdet/error.hpp"
#include "affdet/oracle.hpp"
#include "doctest.h"

using namespace affdet;

namespace {

template <typename Fn>
std::optional<Err> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// the constructors already self-verify; assert the claim separately anyway
void check_claim(const Witness& w, const Int& A, const Int& B) {
  CHECK(w.claimed.A == A);
  CHECK(w.claimed.B == B);
  CHECK(compute_A(w.elem) == A);
  CHECK(compute_B(w.elem) == B);
}

}  // namespace

TEST_CASE("coprime construction") {
  FieldSpec s8 = find_field_spec(2, 3);
  Witness w = achieve_coprime(s8, Int(3), Int(3));
  CHECK(w.construction == "coprime");
  check_claim(w, Int(3), Int(3));
  // negative targets work through negative lambda and m
  Witness w2 = achieve_coprime(s8, Int(-11), Int(-3));
  check_claim(w2, Int(-11), Int(-3));
  CHECK(code_of([&] { achieve_coprime(s8, Int(14), Int(14)); }) == Err::NotCoprime);
  CHECK(code_of([&] { achieve_coprime(s8, Int(3), Int(4)); }) == Err::CongruenceViolation);
}

TEST_CASE("square construction") {
  FieldSpec s4 = find_field_spec(2, 2);
  Witness w = achieve_square(s4, Int(2), Int(-1));
  CHECK(w.construction == "square");
  check_claim(w, Int(18), Int(-2));
  FieldSpec s9 = find_field_spec(3, 2);
  Witness w9 = achieve_square(s9, Int(-1), Int(2));
  check_claim(w9, Int(-64), Int(17));
  // c = 0 pins A to zero
  Witness w0 = achieve_square(s9, Int(0), Int(1));
  check_claim(w0, Int(0), Int(9));
}

TEST_CASE("q = 2 degenerates to a two-term ring") {
  FieldSpec s2 = find_field_spec(2, 1);
  Witness w = achieve_coprime(s2, Int(5), Int(-1));
  check_claim(w, Int(5), Int(-1));
  DetReport rep = compute_report(w.elem, true);
  CHECK(rep.oracle_D.value() == rep.D);
  Witness sq = achieve_square(s2, Int(7), Int(3));
  check_claim(sq, Int(7), Int(13));
}

TEST_CASE("tabulated q = 9 family") {
  Witness w = q9_special_witness(Int(0), Int(0));
  CHECK(w.construction == "q9-special");
  check_claim(w, Int(32), Int(5));
  Witness w2 = q9_special_witness(Int(1), Int(2));
  check_claim(w2, Int(96), Int(42));
  Witness w3 = q9_special_witness(Int(-1), Int(0));
  check_claim(w3, Int(-32), Int(-14));
}

TEST_CASE("tabulated q = 27 families") {
  Witness w4 = q27_special_witness("4", Int(0), Int(0));
  CHECK(w4.construction == "q27-special");
  check_claim(w4, Int(4), Int(-1670));
  Witness w169 = q27_special_witness("169", Int(0), Int(1));
  check_claim(w169, Int(169), Int(3463));
  Witness w8 = q27_special_witness("8", Int(1), Int(0));
  check_claim(w8, Int(60), Int(-1641));
  CHECK(code_of([] { q27_special_witness("5", Int(0), Int(0)); }) == Err::UnsupportedCase);
}

TEST_CASE("routing picks the right construction") {
  FieldSpec s8 = find_field_spec(2, 3);
  FieldSpec s9 = find_field_spec(3, 2);
  FieldSpec s27 = find_field_spec(3, 3);

  // coprime wins whenever gcd(A, q-1) = 1
  CHECK(try_achieve(s8, Int(3), Int(11))->construction == "coprime");
  // a (q-1)^2 multiple goes to the square route
  CHECK(try_achieve(s8, Int(49), Int(1))->construction == "square");
  CHECK(try_achieve(s9, Int(64), Int(1))->construction == "square");
  // odd multiples of 32 take the stored q = 9 base
  CHECK(try_achieve(s9, Int(32), Int(5))->construction == "q9-special");
  CHECK(try_achieve(s9, Int(-32), Int(-14))->construction == "q9-special");
  // q = 27 cases by residue of A/4 mod 13
  CHECK(try_achieve(s27, Int(4), Int(-1670))->construction == "q27-special");
  CHECK(try_achieve(s27, Int(169), Int(3436))->construction == "q27-special");
  // k0 in 7..12 goes through the mirror composition
  std::optional<Witness> m = try_achieve(s27, Int(-8), Int(-35));
  REQUIRE(m.has_value());
  CHECK(m->construction == "monomial-sign");
  check_claim(*m, Int(-8), Int(-35));

  // unreachable targets
  CHECK(!try_achieve(s8, Int(7), Int(7)).has_value());    // 7 | A but 49 does not
  CHECK(!try_achieve(s9, Int(2), Int(2)).has_value());    // even, not a 32 multiple
  CHECK(!try_achieve(s9, Int(16), Int(16)).has_value());
  CHECK(!try_achieve(s27, Int(26), Int(26)).has_value()); // 2 || A
  CHECK(!try_achieve(s8, Int(3), Int(4)).has_value());    // congruence broken
}

TEST_CASE("membership of cyclic determinant values") {
  CHECK(zq1_achievable(1, Int(5)) == Achievable::Yes);
  CHECK(zq1_achievable(5, Int(7)) == Achievable::Yes);
  CHECK(zq1_achievable(5, Int(10)) == Achievable::No);
  CHECK(zq1_achievable(5, Int(25)) == Achievable::Yes);
  CHECK(zq1_achievable(8, Int(7)) == Achievable::Yes);
  CHECK(zq1_achievable(8, Int(16)) == Achievable::No);
  CHECK(zq1_achievable(8, Int(32)) == Achievable::Yes);
  CHECK(zq1_achievable(8, Int(48)) == Achievable::No);
  CHECK(zq1_achievable(8, Int(64)) == Achievable::Yes);
  CHECK(zq1_achievable(26, Int(169)) == Achievable::Yes);
  CHECK(zq1_achievable(26, Int(13)) == Achievable::No);
  CHECK(zq1_achievable(26, Int(6)) == Achievable::No);
  CHECK(zq1_achievable(26, Int(4)) == Achievable::Yes);
  CHECK(zq1_achievable(9, Int(3)) == Achievable::No);
  CHECK(zq1_achievable(9, Int(27)) == Achievable::Unknown);
  CHECK(zq1_achievable(4, Int(8)) == Achievable::Unknown);
  CHECK(zq1_achievable(4, Int(4)) == Achievable::No);
  CHECK(zq1_achievable(12, Int(72)) == Achievable::Unknown);
  CHECK(zq1_achievable(6, Int(0)) == Achievable::Yes);
  CHECK_THROWS_AS(zq1_achievable(0, Int(1)), Error);
}

TEST_CASE("membership decisions carry verified witnesses") {
  FieldSpec s8 = find_field_spec(2, 3);
  Verdict v = decide_membership(s8, Int(6561));
  CHECK(v.member);
  REQUIRE(v.witness.has_value());
  check_claim(*v.witness, v.witness->claimed.A, v.witness->claimed.B);
  CHECK(v.witness->claimed.A * int_pow(v.witness->claimed.B, 7) == 6561);

  Verdict zero = decide_membership(s8, Int(0));
  CHECK(zero.member);
  CHECK(zero.witness->construction == "zero");
  CHECK(compute_B(zero.witness->elem) == 0);

  CHECK(!decide_membership(s8, Int(2)).member);
  CHECK(!decide_membership(s8, Int(-3)).member);

  FieldSpec s9 = find_field_spec(3, 2);
  CHECK(decide_membership(s9, Int(64)).member);  // 64 * 1^8
  CHECK(!decide_membership(s9, Int(2)).member);

  // 2^k - 1 composite and odd q other than 9 and 27 are out of scope
  CHECK(code_of([] { decide_membership(find_field_spec(2, 4), Int(1)); }) ==
        Err::UnsupportedQ);
  CHECK(code_of([] { decide_membership(find_field_spec(2, 1), Int(1)); }) ==
        Err::UnsupportedQ);
  CHECK(code_of([] { decide_membership(find_field_spec(5, 1), Int(1)); }) ==
        Err::UnsupportedQ);
}
