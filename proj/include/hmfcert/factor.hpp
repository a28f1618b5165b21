#pragma once

#include "hmfcert/arith.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hmfcert {

struct Factorization {
    std::vector<std::pair<Int, int>> primes; // ascending
    /* product of composite cofactors that could not be split */
    Int unfactored = 1;

    bool complete() const { return unfactored == 1; }
};

/* Factors |n| (n != 0): trial division up to 10^6, then Pollard-Brent with a
 * seeded generator on cofactors below 2^128. */
Factorization factor(Int const& n, std::uint64_t seed = 0);

} // namespace hmfcert
