#pragma once

#include "hmfcert/arith.hpp"
#include "hmfcert/interval.hpp"

#include <vector>

namespace hmfcert::poly {

/* Dense univariate polynomials, coefficients stored low degree first.
 * The zero polynomial is the empty vector. */
using QPoly = std::vector<Rat>;

void trim(QPoly& f);
int degree(QPoly const& f); // -1 for zero
QPoly from_ints(std::vector<Int> const& c);
QPoly derivative(QPoly const& f);
QPoly add(QPoly const& a, QPoly const& b);
QPoly sub(QPoly const& a, QPoly const& b);
QPoly mul(QPoly const& a, QPoly const& b);
QPoly scale(QPoly const& a, Rat const& c);
void divmod(QPoly const& a, QPoly const& b, QPoly& quot, QPoly& rem);
QPoly rem(QPoly const& a, QPoly const& b);
QPoly monic(QPoly const& f);
QPoly gcd(QPoly a, QPoly b);

Rat eval(QPoly const& f, Rat const& x);
/* sign of f at x, exact */
int sign_at(QPoly const& f, Rat const& x);
/* exact enclosure of f over the interval */
DyadicInterval eval(QPoly const& f, DyadicInterval const& x);

/* Sturm sequence f, f', -rem(...), ...*/
std::vector<QPoly> sturm_sequence(QPoly const& f);
/* number of distinct real roots in (a, b]; f must be squarefree */
int count_roots(std::vector<QPoly> const& sturm, Rat const& a, Rat const& b);

/* 2^k with every real root strictly inside (-2^k, 2^k) */
Rat root_bound(QPoly const& f);

} // namespace hmfcert::poly
