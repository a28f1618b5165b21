#include "hmfcert/criteria.hpp"
#include "hmfcert/error.hpp"
#include "hmfcert/factor.hpp"

#include <doctest.h>

#include <set>

using namespace hmfcert;
using namespace hmfcert::criteria;
using nfield::Field;

namespace {

Field q5() { return Field::make({Int(-5), Int(0), Int(1)}); }

CertificationInputs q5_inputs()
{
    Field const F = q5();
    CertificationInputs in{F, weights::make_weight({4, 2})};
    in.Delta = 20;
    in.h_F = 1;
    in.units = {FieldElem(F, {Rat(3, 2), Rat(1, 2)})};
    return in;
}

Entry const& entry_for(CriterionReport const& r, weights::Subset J)
{
    for (auto const& e : r.entries)
        if (e.J == J)
            return e;
    FAIL("missing entry");
    return r.entries.front();
}

std::set<Int> as_set(std::vector<Int> const& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("Irr criterion over Q(sqrt 5), k = (4, 2)")
{
    auto const r = irr_excluded_primes(q5_inputs());
    CHECK(r.status == "Certified");
    REQUIRE(r.entries.size() == 4);
    CHECK(entry_for(r, 0).value->value == -1);
    CHECK(entry_for(r, 0).primes.empty());
    CHECK(entry_for(r, 1).value->value == -5);
    CHECK(entry_for(r, 1).primes == std::vector<Int>{5});
    CHECK(entry_for(r, 2).value->value == -5);
    CHECK(entry_for(r, 3).value->value == -1);
    CHECK(r.excluded == std::vector<Int>{5});
    CHECK_FALSE(r.excluded_unknown);
    /* every reported prime divides its certified integer */
    for (auto const& e : r.entries)
        for (auto const& p : e.primes)
            CHECK(e.value->value % p == 0);
}

TEST_CASE("the difference form")
{
    auto const r = irr_excluded_primes(q5_inputs());
    /* J = {0}: the difference form equals N(eps^4 - 1) = -45, the exponent form -5 */
    auto const& e = entry_for(r, 1);
    REQUIRE(e.difference_form);
    CHECK(*e.difference_form == -45);
    CHECK_FALSE(*e.forms_agree);
    CHECK(*entry_for(r, 0).forms_agree);
    CHECK(*entry_for(r, 2).forms_agree);
    CHECK(*entry_for(r, 3).forms_agree);
}

TEST_CASE("Irr edge cases")
{
    auto in = q5_inputs();
    in.units.clear();
    auto const r = irr_excluded_primes(in);
    CHECK(r.status == "Unverifiable");
    for (auto const& e : r.entries)
        CHECK(e.status == EntryStatus::Degenerate);

    /* eps = 1 makes every expression vanish */
    auto in1 = q5_inputs();
    in1.units = {FieldElem::from_rational(in1.field, 1)};
    auto const r1 = irr_excluded_primes(in1);
    CHECK(entry_for(r1, 1).status == EntryStatus::Degenerate);

    auto in2 = q5_inputs();
    in2.weight = weights::make_weight({2, 2});
    auto const r2 = irr_excluded_primes(in2);
    CHECK(r2.status == "Partial (parallel weight)");
    for (auto const& e : r2.entries)
        CHECK((e.J != 0 && e.J != 3));

    auto in3 = q5_inputs();
    in3.units = {FieldElem::generator(in3.field)};
    CHECK_THROWS_AS(irr_excluded_primes(in3), Error);
}

TEST_CASE("dihedral criterion over Q")
{
    Field const Q = Field::make({Int(0), Int(1)});
    CertificationInputs in{Q, weights::make_weight({2})};
    FieldElem const two = FieldElem::from_rational(Q, 2), one = FieldElem::from_rational(Q, 1);
    in.quadratic_extensions = {{two, {{one, one}}}};
    auto r = dihedral_noncm_excluded(in, 0);
    REQUIRE(!r.entries.empty());
    CHECK(r.status == "Certified");
    CHECK(r.excluded == std::vector<Int>{2});
    CHECK(abs(r.entries[0].value->value) == 2);
    /* the square 3 + 2 sqrt 2 */
    in.quadratic_extensions = {{two, {{FieldElem::from_rational(Q, 3), two}}}};
    r = dihedral_noncm_excluded(in, 0);
    CHECK(abs(r.entries[0].value->value) == 4);
    CHECK(r.excluded == std::vector<Int>{2});
    /* 1 + 0 sqrt 2 */
    in.quadratic_extensions = {{two, {{one, FieldElem::from_rational(Q, 0)}}}};
    r = dihedral_noncm_excluded(in, 0);
    CHECK(r.entries[0].status == EntryStatus::Degenerate);
    /* CM and invalid data */
    in.quadratic_extensions = {{FieldElem::from_rational(Q, -1), {{one, one}}}};
    CHECK(dihedral_noncm_excluded(in, 0).status == "Unverifiable");
    in.quadratic_extensions = {{FieldElem::from_rational(Q, 4), {{one, one}}}};
    CHECK(dihedral_noncm_excluded(in, 0).status == "Error");
    in.quadratic_extensions = {{two, {{two, one}}}};
    CHECK(dihedral_noncm_excluded(in, 0).status == "Error");
    CHECK_THROWS_AS(dihedral_noncm_excluded(in, 3), Error);
}

TEST_CASE("dihedral criterion over Q(sqrt 5)")
{
    auto in = q5_inputs();
    Field const& F = in.field;
    /* K = F(sqrt 2), unit 1 + sqrt 2 */
    FieldElem const one = FieldElem::from_rational(F, 1);
    in.quadratic_extensions = {{FieldElem::from_rational(F, 2), {{one, one}}}};
    auto const r = dihedral_noncm_excluded(in, 0);
    CHECK(r.status != "Error");
    CHECK(r.entries.size() == 4);
    for (auto const& e : r.entries)
        if (e.value)
            for (auto const& p : e.primes)
                CHECK(e.value->value % p == 0);
}

TEST_CASE("certification report")
{
    auto const rep = certify(q5_inputs());
    CHECK(rep.B == 13);
    auto const S = as_set(rep.S);
    for (int p : {2, 3, 5, 7})
        CHECK(S.count(Int(p)));
    CHECK(rep.delta_primes == std::vector<Int>{2, 5});
    CHECK(rep.theorem_a_path == "hypothesis (MW) holds");
    CHECK_FALSE(rep.partial());
    auto const j = to_json(rep);
    CHECK(j["B"] == 13);
    CHECK(nlohmann::ordered_json::parse(j.dump()).dump() == j.dump());
    CHECK(render_text(rep).find("B = 13") != std::string::npos);

    auto in = q5_inputs();
    in.weight = weights::make_weight({2, 2});
    CHECK(certify(in).theorem_a_path == "hypothesis (MW) fails");
    CHECK(certify(in).partial());
}

TEST_CASE("reports are deterministic")
{
    CHECK(to_json(certify(q5_inputs())).dump() == to_json(certify(q5_inputs())).dump());
}

TEST_CASE("quadratic fast path matches the generic engine")
{
    for (long D : {2L, 3L, 5L, 13L}) {
        Field const F = Field::make({Int(-D), Int(0), Int(1)});
        FieldElem const eps = nfield::totally_positive_fundamental(nfield::fundamental_unit_quadratic(D));
        for (long k0 = 3; k0 <= 8; ++k0)
            for (long k1 = k0 - 2; k1 >= 2; k1 -= 2) {
                CertificationInputs in{F, weights::make_weight({k0, k1})};
                in.units = {eps};
                auto const fp = quadratic_fast_path(eps, in.weight);
                auto const r = irr_excluded_primes(in);
                CAPTURE(D);
                CAPTURE(k0);
                CAPTURE(k1);
                REQUIRE(r.status == "Certified");
                CHECK(as_set(fp.primes) == as_set(r.excluded));
            }
    }
}

TEST_CASE("cubic fast path on x^3 - 3x - 1")
{
    Field const C = Field::make({Int(-1), Int(-3), Int(0), Int(1)});
    FieldElem const t = FieldElem::generator(C);
    FieldElem const eps = t * t; // totally positive unit
    REQUIRE(nfield::is_totally_positive(eps));
    for (auto const& tau : {nfield::Permutation{1, 2, 0}, nfield::Permutation{2, 0, 1}})
        for (std::vector<long> k : {std::vector<long>{4, 4, 2}, {4, 2, 2}, {6, 4, 2}, {5, 3, 3}}) {
            auto const w = weights::make_weight(k);
            auto const fp = cubic_fast_path(eps, w, tau);
            /* direct evaluation: each factor is a symmetrized norm of eps_tau^a eps^-b - 1 */
            long const m1 = w.m[1], m2 = w.m[2], k0 = w.k0;
            long const pairs[4][2] = {{m1, -m2}, {m1, m2 + 1 - k0}, {m1 + 1 - k0, m2}, {k0 - m1 - 1, m2 + 1 - k0}};
            Int prod = 1;
            bool zero = false;
            for (auto const& pr : pairs) {
                std::vector<long> e(3, 0);
                e[tau[0]] += pr[0];
                e[0] -= pr[1];
                auto const r = nfield::symmetrized_norm(eps, e);
                if (r.status == nfield::NormStatus::Zero)
                    zero = true;
                else
                    prod *= r.cert.value;
            }
            CAPTURE(k[0]);
            CAPTURE(k[1]);
            CAPTURE(k[2]);
            CHECK(fp.zero == zero);
            if (!zero) {
                CHECK(abs(fp.value) == abs(prod));
                for (auto const& p : fp.primes)
                    CHECK(fp.value % p == 0);
            }
        }
    CHECK_THROWS_AS(cubic_fast_path(eps, weights::make_weight({4, 4, 4}), {1, 2, 0}), Error);
}
