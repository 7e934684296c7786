#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace affdet {

using Int = mpz_class;

// deterministic primality for small n (trial division)
bool is_small_prime(long n);

// distinct prime factors of n >= 1, ascending
std::vector<long> prime_factors(long n);

Int int_pow(const Int& base, unsigned long exp);

// strict decimal integer parse ("-?[0-9]+"), throws Err::InvalidInput
Int parse_int(const std::string& s);

// true division residue in [0, m)
long mod_floor(long v, long m);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t submod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);  // m prime

// least nonnegative residue of v mod m
std::uint64_t mpz_mod_u64(const Int& v, std::uint64_t m);

// smallest integer >= sqrt(n), n >= 0
Int isqrt_ceil(const Int& n);

}  // namespace affdet
