#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hmfcert::weights {

/* subsets of J_F = {0..d-1} as bitmasks */
using Subset = std::uint32_t;

std::vector<int> subset_indices(Subset J, int d);
std::string subset_to_string(Subset J, int d);
inline Subset full_set(int d) { return d >= 32 ? ~Subset(0) : (Subset(1) << d) - 1; }

struct Weight {
    std::vector<long> k;
    long k0 = 0;
    std::vector<long> n; // k - 2
    std::vector<long> m; // (k0 - k) / 2
    int d = 0;

    bool parallel() const;
};

Weight make_weight(std::vector<long> const& k);

struct PJ {
    std::vector<long> p;
    long abs = 0;
};

/* p(J): k0 - m - 1 on J, m off J */
PJ p_of(Weight const& w, Subset J);

struct HodgeMultiset {
    std::vector<long> by_subset; // entry |p(J)| indexed by the mask J
    long motivic_weight = 0;     // d(k0 - 1)

    std::vector<long> sorted() const;
};

HodgeMultiset hodge_multiset(Weight const& w);

struct MWResult {
    bool holds = false;
    std::optional<Subset> witness; // a J with |p(J)| equal to the middle weight
};

MWResult mw_check(Weight const& w);

struct Bound {
    std::string label;
    std::string condition;
    long smallest_prime = 0; // smallest prime satisfying the strict inequality
};

struct BoundsReport {
    long sigma = 0; // sum of (k - 1)
    Bound large_prime;  // p - 1 > sigma
    Bound theorem_a;    // d(p - 1) > max(d, 5) sigma
    Bound exceptional;  // d(p - 1) > 5 sigma
    Bound above_k0;     // p > k0
    std::optional<Bound> corollary; // d = 2: p - 1 > 4(k0 - m1 - 1)
    std::optional<Bound> theorem;   // d = 2: p - 1 > 5(k0 - m1 - 1)
    std::vector<long> two_k_minus_one;   // primes among 2k - 1
    std::vector<long> pair_sums_minus_one; // primes among k + k' - 1, distinct places
    /* smallest prime p > 3 passing (II), Theorem A's bound and p > k0 */
    long admissible = 0;
};

BoundsReport prime_bounds(Weight const& w);

/* true iff k is non-constant on some block of the partition */
bool non_induced_check(Weight const& w, std::vector<std::vector<int>> const& fibers);

} // namespace hmfcert::weights
