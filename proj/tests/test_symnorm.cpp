#include "hmfcert/error.hpp"
#include "hmfcert/symnorm.hpp"

#include <doctest.h>

using namespace hmfcert;
using namespace hmfcert::nfield;

namespace {

Field q5() { return Field::make({Int(-5), Int(0), Int(1)}); }
FieldElem eps0() { return FieldElem(q5(), {Rat(3, 2), Rat(1, 2)}); }

/* exact product over both orderings in a quadratic field */
Rat exact_quadratic(FieldElem const& eps, std::vector<long> const& e)
{
    /* the conjugate of a + b theta is a - b theta */
    FieldElem const c(eps.field(), {eps.coeffs()[0], -eps.coeffs()[1]});
    FieldElem const x = eps.pow(e[0]) * c.pow(e[1]) - FieldElem::from_rational(eps.field(), 1);
    FieldElem const y = c.pow(e[0]) * eps.pow(e[1]) - FieldElem::from_rational(eps.field(), 1);
    FieldElem const p = x * y;
    REQUIRE(p.is_rational());
    return p.rational_value();
}

} // namespace

TEST_CASE("symmetrized norm, worked examples")
{
    auto const e = eps0();
    CHECK(symmetrized_norm(e, {0, 0}).status == NormStatus::Zero);
    auto r = symmetrized_norm(e, {0, 1});
    REQUIRE(r.status == NormStatus::Certified);
    CHECK(r.cert.value == -1);
    r = symmetrized_norm(e, {3, 1});
    REQUIRE(r.status == NormStatus::Certified);
    CHECK(r.cert.value == -5);
    CHECK(r.cert.final_width < Rat(1, 2));
}

TEST_CASE("symmetrized norm matches exact arithmetic")
{
    auto const e = eps0();
    for (long a = -3; a <= 6; ++a)
        for (long b = -3; b <= 6; ++b) {
            auto const r = symmetrized_norm(e, {a, b});
            Rat const x = exact_quadratic(e, {a, b});
            CAPTURE(a);
            CAPTURE(b);
            if (x == 0) {
                CHECK(r.status == NormStatus::Zero);
            } else {
                REQUIRE(r.status == NormStatus::Certified);
                CHECK(Rat(r.cert.value) == x);
            }
        }
}

TEST_CASE("difference form")
{
    auto const e = eps0();
    /* eps^a eps'^b - eps^b eps'^a vanishes when a = b */
    CHECK(symmetrized_difference_norm(e, {2, 2}, {2, 2}).status == NormStatus::Zero);
    auto r = symmetrized_difference_norm(e, {3, 0}, {0, 1});
    REQUIRE(r.status == NormStatus::Certified);
    FieldElem const c(e.field(), {Rat(3, 2), Rat(-1, 2)});
    FieldElem const x = e.pow(3) - c;
    FieldElem const y = c.pow(3) - e;
    CHECK(Rat(r.cert.value) == (x * y).rational_value());
}

TEST_CASE("cyclic cubic uses the Galois group")
{
    Field const C = Field::make({Int(-1), Int(-3), Int(0), Int(1)});
    FieldElem const t = FieldElem::generator(C);
    FieldElem const u = t; // norm(theta) = -f(0) = 1
    REQUIRE(norm(u) == 1);
    auto r = symmetrized_norm(u, {1, 0, 0});
    REQUIRE(r.status == NormStatus::Certified);
    /* prod over C3 of (x_s - 1) is the norm of theta - 1, = -f(1) */
    CHECK(r.cert.value == norm(t - FieldElem::from_rational(C, 1)));
}

TEST_CASE("precision cap produces Indeterminate")
{
    NormOptions opt;
    opt.start_bits = 8;
    opt.cap_bits = 8;
    auto r = symmetrized_norm(eps0().pow(40), {40, 1}, opt);
    CHECK(r.status == NormStatus::Indeterminate);
    CHECK(!r.reason.empty());
}

TEST_CASE("non-units are rejected")
{
    auto const t = FieldElem::generator(q5());
    CHECK_THROWS_AS(symmetrized_norm(t, {1, 0}), Error);
}

TEST_CASE("escalation is deterministic")
{
    auto const a = symmetrized_norm(eps0(), {7, -2});
    auto const b = symmetrized_norm(eps0(), {7, -2});
    REQUIRE(a.status == NormStatus::Certified);
    CHECK(a.cert.value == b.cert.value);
    CHECK(a.bits == b.bits);
}
