#pragma once

#include "hmfcert/arith.hpp"
#include "hmfcert/interval.hpp"
#include "hmfcert/poly.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace hmfcert::nfield {

/* one-line notation: perm[i] is the image of i */
using Permutation = std::vector<int>;

struct FieldData;

/* A totally real number field Q[x]/(f), f monic irreducible with all roots real.
 * Embedding idx sends the power-basis generator to the idx-th real root of f in
 * ascending order. */
class Field {
  public:
    /* coefficients of f, low degree first; galois, when present, lists
     * generators of the permutation action on embedding indices */
    static Field make(std::vector<Int> const& coeffs, std::optional<std::vector<Permutation>> galois = std::nullopt);

    int degree() const;
    std::vector<Int> const& min_poly() const;
    poly::QPoly const& min_poly_q() const;

    /* the isolating interval produced at construction */
    DyadicInterval isolating_interval(int idx) const;
    /* the root interval after `level` bisections of the isolating interval;
     * nested in the level */
    DyadicInterval root_interval(int idx, long level) const;
    /* root enclosure of width <= 2^-bits */
    DyadicInterval root(int idx, long bits) const;

    /* full permutation group (closed under composition), when known */
    std::optional<std::vector<Permutation>> const& galois() const;
    /* galois() when present, otherwise the symmetric group on the embeddings */
    std::vector<Permutation> symmetrization_group() const;

    bool operator==(Field const& other) const;

  private:
    std::shared_ptr<FieldData const> data_;
};

class FieldElem {
  public:
    FieldElem(Field field, std::vector<Rat> coeffs);
    static FieldElem from_rational(Field const& field, Rat const& value);
    /* the power-basis generator */
    static FieldElem generator(Field const& field);

    Field const& field() const { return field_; }
    std::vector<Rat> const& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    FieldElem operator+(FieldElem const& o) const;
    FieldElem operator-(FieldElem const& o) const;
    FieldElem operator-() const;
    FieldElem operator*(FieldElem const& o) const;
    FieldElem inverse() const;
    FieldElem pow(long e) const;
    bool operator==(FieldElem const& o) const;

  private:
    Field field_;
    std::vector<Rat> coeffs_;
};

/* multiplication-by-a matrix in the power basis (row i = a * theta^i) */
std::vector<std::vector<Rat>> multiplication_matrix(FieldElem const& a);
Rat norm(FieldElem const& a);
Rat trace(FieldElem const& a);

/* enclosure of the image of a under embedding idx, width <= 2^-bits; the
 * enclosures are nested: a larger precision returns a subinterval */
DyadicInterval embed(FieldElem const& a, int idx, long bits);

/* sign of a under embedding idx, refined until decided (a != 0) */
int embedding_sign(FieldElem const& a, int idx);
bool is_totally_positive(FieldElem const& a);

/* Fundamental unit > 1 of the maximal order of Q(sqrt(D)), expressed in the
 * field x^2 - D. */
FieldElem fundamental_unit_quadratic(long D);
/* eps if it has norm +1 and is totally positive, else eps^2 */
FieldElem totally_positive_fundamental(FieldElem const& eps);

/* Representative eps0^(2j) * xi of the orbit of a totally positive xi, whose
 * embedding ratio xi_1 / xi_0 lies in [1, r(eps0^2)). Degree 2 only. */
FieldElem orbit_reduce(FieldElem const& xi, FieldElem const& eps0);
/* as above, also returning j */
FieldElem orbit_reduce(FieldElem const& xi, FieldElem const& eps0, long& j);

} // namespace hmfcert::nfield
