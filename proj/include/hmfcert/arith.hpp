#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hmfcert {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(Int const& num, Int const& den = 1);

/* Parses "n", "-n", "n/m" (and plain decimal integers) into a reduced rational. */
Rat parse_rat(std::string const& text);
std::string to_string(Rat const& q);
std::string to_string(Int const& n);

Int floor_rat(Rat const& q);
Int ceil_rat(Rat const& q);

Int ipow(Int base, unsigned long exponent);
Rat rpow(Rat const& base, long exponent);

/* 2^e as a rational, e may be negative. */
Rat pow2(long e);

/* p-adic valuation of a nonzero rational; p prime. */
long valuation(Rat const& q, Int const& p);

bool is_prime(Int const& n);
bool is_prime(std::int64_t n);
std::int64_t next_prime(std::int64_t n); // smallest prime > n

Int gcd(Int const& a, Int const& b);
Int lcm(Int const& a, Int const& b);

} // namespace hmfcert
