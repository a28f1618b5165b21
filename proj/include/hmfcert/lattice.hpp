#pragma once

#include "hmfcert/linalg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hmfcert::lattice {

using linalg::IntMatrix;
using linalg::RatMatrix;

/* rows of `basis` span L in Q^n */
struct Lattice {
    IntMatrix basis;
};

/* Q^n = V1 (+) V2, each given by basis rows */
struct Split {
    RatMatrix v1, v2;
};

/* Each lattice is given by basis rows in the coordinates of the basis of V_j. */
struct SplitLattices {
    RatMatrix L1, L2;        // L cap V_j
    RatMatrix Lproj1, Lproj2; // projection of L to V_j along the other summand
};

SplitLattices split_lattice(Lattice const& L, Split const& s);

struct CongruenceModule {
    Int p;
    std::vector<Int> invariant_factors; // p-parts > 1 of L^1 / L_1
    /* p-parts of L^1/L_1, L/(L_1 + L_2), L^2/L_2 */
    std::array<std::vector<Int>, 3> three_way;
    /* full orders (all primes) of L^1/L_1 and L/(L_1 + L_2), and
     * [L^1 + L^2 : L] */
    Int order_c0 = 1, index_inner = 1, index_outer = 1;

    bool trivial() const { return invariant_factors.empty(); }
};

CongruenceModule congruence_module(Lattice const& L, Split const& s, Int const& p);

/* p-parts of the Smith invariant factors of the quotient of Z^k by the rows of rel */
std::vector<Int> local_invariants(IntMatrix const& rel, Int const& p);

struct Discriminant {
    Rat det;
    Rat pair_product; // product over complementary pairs of -g(J,J^c) g(J^c,J)
};

/* gram indexed by subsets J (bitmasks) of {0..d-1} */
Discriminant disc_pairing(RatMatrix const& gram, int d);

struct Eigensystem {
    std::vector<Int> values; // one eigenvalue per operator
    std::size_t dimension = 0;
};

struct CongruenceReport {
    std::vector<Eigensystem> v1_systems, v2_systems;
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // indices into v1/v2 systems
    bool needs_extension = false; // some eigenvalue is not an integer
    CongruenceModule module;
    /* per V1 system: the congruence module localized at (p, T - theta(T)) is nonzero */
    std::vector<bool> localized_nonzero;
    /* localized_nonzero implies a congruent pair, for every V1 system */
    bool deligne_serre_consistent = true;
};

/* ops act on column vectors of Q^n */
CongruenceReport find_congruences(std::vector<IntMatrix> const& ops, Lattice const& L, Split const& s,
                                  Int const& p);

/* characteristic polynomial det(x I - A), low degree first */
std::vector<Rat> charpoly(RatMatrix const& a);
/* integer roots, ascending, with multiplicity */
std::vector<Int> integer_roots(std::vector<Rat> const& poly);

} // namespace hmfcert::lattice
