#include <optional>
#include <set>
#include <vector>

#include "affdet/error.hpp"
#include "affdet/field.hpp"
#include "affdet/numutil.hpp"
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

}  // namespace

TEST_CASE("field specs cover the usual prime powers") {
  for (auto [p, k] : {std::pair<long, long>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                      {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
    FieldSpec s = find_field_spec(p, k);
    CHECK(s.p == p);
    CHECK(s.k == k);
    long q = 1;
    for (long i = 0; i < k; ++i) q *= p;
    CHECK(s.q == q);
    CHECK(static_cast<long>(s.a.size()) == k);
  }
}

TEST_CASE("invalid specs are rejected with the right codes") {
  CHECK(code_of([] { find_field_spec(4, 1); }) == Err::NotPrime);
  CHECK(code_of([] { find_field_spec(6, 2); }) == Err::NotPrime);
  CHECK(code_of([] { find_field_spec(2, 0); }) == Err::InvalidInput);
  CHECK(code_of([] { find_field_spec(-3, 2); }) == Err::NotPrime);
  // x^2 - x = x(x - 1) is reducible
  CHECK(code_of([] { find_field_spec(2, 2, std::vector<long>{0, 1}); }) ==
        Err::NotIrreducible);
  // x - 1 has the non-generator root 1
  CHECK(code_of([] { find_field_spec(3, 1, std::vector<long>{1}); }) == Err::NotPrimitive);
  // x^2 + 1 is irreducible over F_3 but its roots have order 4, not 8
  CHECK(code_of([] { find_field_spec(3, 2, std::vector<long>{2, 0}); }) == Err::NotPrimitive);
  // out-of-range residues
  CHECK(code_of([] { find_field_spec(3, 2, std::vector<long>{4, 1}); }) == Err::InvalidInput);
}

TEST_CASE("companion powers sweep every nonzero vector once") {
  for (auto [p, k] : {std::pair<long, long>{2, 3}, {3, 2}, {5, 2}, {3, 3}}) {
    FieldSpec s = find_field_spec(p, k);
    Orbit orb = orbit(s);
    CHECK(static_cast<long>(orb.powers.size()) == s.q - 1);
    std::set<std::vector<long>> seen;
    for (long row = 1; row <= s.q - 1; ++row) {
      std::vector<long> col = row_monomial_exponents(orb, row, 0);
      bool zero = true;
      for (long v : col) zero = zero && v == 0;
      CHECK(!zero);
      seen.insert(col);
    }
    CHECK(static_cast<long>(seen.size()) == s.q - 1);
  }
}

TEST_CASE("monomial cycle for q = 9") {
  std::vector<std::string> mono = orbit_monomials(find_field_spec(3, 2));
  REQUIRE(mono.size() == 8);
  CHECK(mono[0] == "y");
  CHECK(mono[1] == "z");
  CHECK(mono[2] == "yz2");
  std::set<std::string> uniq(mono.begin(), mono.end());
  CHECK(uniq.size() == 8);
}

TEST_CASE("monomial strings") {
  CHECK(monomial_string({0, 0}) == "1");
  CHECK(monomial_string({1, 0}) == "y");
  CHECK(monomial_string({2, 1}) == "y2z");
  CHECK(monomial_string({0, 2, 1}) == "z2w");
  CHECK(monomial_string({1, 0, 0, 2}) == "y0y32");
}

TEST_CASE("matrix helpers agree with direct arithmetic") {
  FieldSpec s = find_field_spec(3, 2);
  ResMat m = companion_matrix(s);
  Orbit orb = orbit(s);
  // M^(q-1) = identity
  ResMat acc = orb.powers.back();
  acc = mat_mul_mod(acc, m, s.p);
  for (long i = 0; i < s.k; ++i)
    for (long j = 0; j < s.k; ++j) CHECK(acc[i][j] == (i == j ? 1 : 0));
  // transpose-multiply really is the transpose
  std::vector<long> v{1, 2};
  std::vector<long> tv = mat_transpose_vec(m, v, s.p);
  for (long i = 0; i < s.k; ++i) {
    long want = 0;
    for (long j = 0; j < s.k; ++j) want += m[j][i] * v[j];
    CHECK(tv[i] == ((want % s.p) + s.p) % s.p);
  }
}

TEST_CASE("small number theory helpers") {
  CHECK(is_small_prime(2));
  CHECK(is_small_prime(31));
  CHECK(!is_small_prime(1));
  CHECK(!is_small_prime(15));
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(12) == std::vector<long>{2, 3});
  CHECK(prime_factors(26) == std::vector<long>{2, 13});
  CHECK(mod_floor(-1, 8) == 7);
  CHECK(mod_floor(17, 8) == 1);
  CHECK(int_pow(Int(-2), 7) == -128);
  CHECK(parse_int("-94906265625") == Int("-94906265625"));
  CHECK_THROWS_AS(parse_int("12x"), Error);
  CHECK_THROWS_AS(parse_int(""), Error);
}
