#pragma once

#include "hmfcert/weights.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hmfcert::bgg {

using weights::Subset;

struct TWeight {
    std::vector<long> coords;
    std::optional<long> nu; // |p(J)| for graded pieces

    bool operator==(TWeight const& o) const { return coords == o.coords; }
    bool operator<(TWeight const& o) const { return coords < o.coords; }
};

/* eps_J(n + t) - t: -n - 2 on J, n off J */
TWeight kostant_weight(std::vector<long> const& n, Subset J);
std::vector<std::pair<Subset, TWeight>> kostant_weights(std::vector<long> const& n, int i);

/* weights nu - 2 * 1_J of the torus module (wedge^i of g/b) (x) V_n, |J| = i */
std::vector<TWeight> omega_weights(std::vector<long> const& n, int i);

/* all J with mu congruent to eps_J(n + t) - t modulo p */
std::vector<Subset> central_char_equiv(TWeight const& mu, std::vector<long> const& n, long p);

struct E1Table {
    int d = 0;
    long max_i = 0;
    /* cells[r][i] = { J : |J| <= r, |p(J)| = i } */
    std::vector<std::vector<std::vector<Subset>>> cells;
    /* fil[i] = { J : |p(J)| >= i } */
    std::vector<std::vector<Subset>> fil;
    std::optional<long> prime;
    /* p - 1 > |n| + d, when a prime was supplied */
    std::optional<bool> kostant_range;
};

E1Table bgg_table(weights::Weight const& w, std::optional<long> p = std::nullopt);
std::string render_text(E1Table const& t);

struct ChandraReport {
    bool holds = true;
    long weights_checked = 0;
    std::string failure;
};

/* For every i and every mu in omega_weights(n, i): central_char_equiv is
 * nonempty iff mu is one of the Kostant weights of length i, and those occur
 * with multiplicity one. */
ChandraReport chandra_check(std::vector<long> const& n, long p);

} // namespace hmfcert::bgg
