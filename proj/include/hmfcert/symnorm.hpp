#pragma once

#include "hmfcert/nfield.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hmfcert::nfield {

struct CertifiedInteger {
    Int value;
    Rat final_width; // width of the certifying enclosure, < 1/2
    long bits = 0;   // working precision at certification
};

enum class NormStatus { Certified, Zero, Indeterminate };
std::string to_string(NormStatus s);

struct NormResult {
    NormStatus status = NormStatus::Indeterminate;
    CertifiedInteger cert; // meaningful when Certified
    long bits = 0;         // last precision tried
    std::string reason;
};

struct NormOptions {
    long start_bits = 64;
    long cap_bits = 1L << 16;
};

/* The integer  prod_{s in group} ( prod_t x_{s(t)}^{a_t} - prod_t x_{s(t)}^{b_t} )
 * over `positions` real conjugates x_i. An empty exp_b means the second
 * product is 1. `exact`, given the exponent attached to each position, may
 * return the exact rational value of that monomial; it is what proves zeros. */
struct SymmetricProduct {
    int positions = 0;
    /* enclosures of x_i and of 1/x_i, each of width <= 2^-bits */
    std::function<void(long bits, std::vector<DyadicInterval>& x, std::vector<DyadicInterval>& inv)> values;
    std::vector<Permutation> group;
    std::vector<long> exp_a, exp_b;
    std::function<std::optional<Rat>(std::vector<long> const&)> exact;
};

NormResult certified_symmetric_product(SymmetricProduct const& problem, NormOptions const& opt = {});

/* prod over the symmetrization group of (prod_t eps_{s(t)}^{e_t} - 1) */
NormResult symmetrized_norm(FieldElem const& eps, std::vector<long> const& e, NormOptions const& opt = {});

/* prod over the symmetrization group of
 * (prod_t eps_{s(t)}^{a_t} - prod_t eps_{s(t)}^{b_t}) */
NormResult symmetrized_difference_norm(FieldElem const& eps, std::vector<long> const& a,
                                       std::vector<long> const& b, NormOptions const& opt = {});

} // namespace hmfcert::nfield
