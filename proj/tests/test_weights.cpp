#include "hmfcert/arith.hpp"
#include "hmfcert/error.hpp"
#include "hmfcert/weights.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hmfcert;
using namespace hmfcert::weights;

namespace {

ErrorCode code_of(std::vector<long> const& k)
{
    try {
        make_weight(k);
    } catch (Error const& e) {
        return e.code();
    }
    return ErrorCode::Indeterminate;
}

} // namespace

TEST_CASE("weight construction")
{
    auto w = make_weight({2, 2});
    CHECK(w.k0 == 2);
    CHECK(w.n == std::vector<long>{0, 0});
    CHECK(w.m == std::vector<long>{0, 0});
    CHECK(w.parallel());
    w = make_weight({4, 2});
    CHECK(w.k0 == 4);
    CHECK(w.n == std::vector<long>{2, 0});
    CHECK(w.m == std::vector<long>{0, 1});
    CHECK_FALSE(w.parallel());
    CHECK(code_of({3, 2}) == ErrorCode::ParityMismatch);
    CHECK(code_of({4, 0}) == ErrorCode::WeightTooSmall);
    CHECK(code_of({}) == ErrorCode::InvalidArgument);
}

TEST_CASE("p(J)")
{
    auto const w = make_weight({4, 2});
    CHECK(p_of(w, 0).p == std::vector<long>{0, 1});
    CHECK(p_of(w, 0).abs == 1);
    CHECK(p_of(w, 1).p == std::vector<long>{3, 1});
    CHECK(p_of(w, 1).abs == 4);
    CHECK(p_of(w, 3).p == std::vector<long>{3, 2});
    CHECK(p_of(w, 3).abs == 5);
    CHECK(subset_to_string(3, 2) == "{0,1}");
    CHECK(subset_to_string(0, 2) == "{}");
}

TEST_CASE("Hodge multisets")
{
    CHECK(hodge_multiset(make_weight({4, 2})).sorted() == std::vector<long>{1, 2, 4, 5});
    CHECK(hodge_multiset(make_weight({2, 2})).sorted() == std::vector<long>{0, 1, 1, 2});
    CHECK(hodge_multiset(make_weight({2})).sorted() == std::vector<long>{0, 1});
    CHECK(hodge_multiset(make_weight({4, 2})).motivic_weight == 6);
}

TEST_CASE("middle weight hypothesis")
{
    CHECK(mw_check(make_weight({4, 2})).holds);
    auto r = mw_check(make_weight({2, 2}));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(p_of(make_weight({2, 2}), *r.witness).abs == 1);
    CHECK_FALSE(mw_check(make_weight({3, 3})).holds);
    CHECK(mw_check(make_weight({3})).holds); // odd motivic weight
}

TEST_CASE("prime bounds for k = (4, 2)")
{
    auto const b = prime_bounds(make_weight({4, 2}));
    CHECK(b.sigma == 4);
    CHECK(b.large_prime.smallest_prime == 7);
    CHECK(b.theorem_a.smallest_prime == 13);
    CHECK(b.exceptional.smallest_prime == 13);
    REQUIRE(b.corollary);
    CHECK(b.corollary->smallest_prime == 11);
    REQUIRE(b.theorem);
    CHECK(b.theorem->smallest_prime == 13);
    CHECK(b.two_k_minus_one == std::vector<long>{3, 7});
    CHECK(b.pair_sums_minus_one == std::vector<long>{5});
    CHECK(b.admissible == 13);
}

TEST_CASE("bounds are the least primes satisfying their inequality")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        int const d = 1 + int(rng() % 5);
        long const par = long(rng() % 2);
        std::vector<long> k(d);
        for (auto& x : k)
            x = 2 + par + 2 * long(rng() % 5);
        auto const w = make_weight(k);
        auto const b = prime_bounds(w);
        long const s = b.sigma;
        auto ok_a = [&](long p) { return d * (p - 1) > std::max<long>(d, 5) * s; };
        auto ok_e = [&](long p) { return d * (p - 1) > 5 * s; };
        CHECK(ok_a(b.theorem_a.smallest_prime));
        CHECK(ok_e(b.exceptional.smallest_prime));
        CHECK(b.large_prime.smallest_prime - 1 > s);
        for (long p = 2; p < b.theorem_a.smallest_prime; ++p)
            if (is_prime(std::int64_t(p)))
                CHECK_FALSE(ok_a(p));
        CHECK(b.admissible > 3);
        CHECK(b.admissible > w.k0);
    }
}

TEST_CASE("subset sum property on random weights")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        int const d = 1 + int(rng() % 6);
        long const par = long(rng() % 2);
        std::vector<long> k(d);
        for (auto& x : k)
            x = 2 + par + 2 * long(rng() % 5);
        auto const w = make_weight(k);
        auto const h = hodge_multiset(w);
        Subset const full = full_set(d);
        for (Subset J = 0; J <= full; ++J)
            CHECK(p_of(w, J).abs + p_of(w, full & ~J).abs == d * (w.k0 - 1));
        auto s = h.sorted();
        long sig = 0;
        for (long x : k)
            sig += x - 1;
        CHECK(s.back() - s.front() == sig);
    }
}

TEST_CASE("non-induced check")
{
    CHECK(non_induced_check(make_weight({4, 2}), {{0, 1}}));
    CHECK_FALSE(non_induced_check(make_weight({4, 4}), {{0, 1}}));
    CHECK_FALSE(non_induced_check(make_weight({4, 2, 4, 2}), {{0, 2}, {1, 3}}));
    CHECK(non_induced_check(make_weight({4, 2, 4, 2}), {{0, 1}, {2, 3}}));
    CHECK_THROWS_AS(non_induced_check(make_weight({4, 2, 4}), {{0, 1}}), Error);
    CHECK_THROWS_AS(non_induced_check(make_weight({4, 2, 4, 2}), {{0, 1, 2}, {3}}), Error);
}
