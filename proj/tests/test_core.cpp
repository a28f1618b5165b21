#include "hmfcert/arith.hpp"
#include "hmfcert/error.hpp"
#include "hmfcert/factor.hpp"
#include "hmfcert/interval.hpp"
#include "hmfcert/linalg.hpp"
#include "hmfcert/poly.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hmfcert;
using linalg::IntMatrix;
using linalg::RatMatrix;

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat(" 12 ") == 12);
    CHECK(to_string(make_rat(5, -10)) == "-1/2");
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("x"), Error);
    CHECK(floor_rat(Rat(-7, 2)) == -4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(pow2(-3) == Rat(1, 8));
    CHECK(rpow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(valuation(Rat(50, 3), 5) == 2);
    CHECK(valuation(Rat(10, 3), 3) == -1);
}

TEST_CASE("primality")
{
    CHECK(is_prime(std::int64_t(2)));
    CHECK_FALSE(is_prime(std::int64_t(1)));
    CHECK(is_prime(Int("1000000007")));
    CHECK_FALSE(is_prime(Int("1000000007") * 3));
    CHECK(next_prime(13) == 17);
}

TEST_CASE("factorization")
{
    auto f = factor(Int(-360));
    REQUIRE(f.complete());
    CHECK(f.primes == std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}});
    /* two primes beyond the trial division range */
    Int const p("1000003"), q("998244353");
    auto g = factor(p * p * q, 7);
    CHECK(g.primes == std::vector<std::pair<Int, int>>{{p, 2}, {q, 1}});
    CHECK(factor(Int(1)).primes.empty());
    CHECK_THROWS_AS(factor(Int(0)), Error);
}

TEST_CASE("dyadic intervals enclose")
{
    DyadicInterval const a = DyadicInterval::from_bounds(Rat(1), Rat(2));
    DyadicInterval const b = DyadicInterval::from_bounds(Rat(-1, 3), Rat(1, 5));
    auto c = a * b;
    CHECK(c.contains(Rat(-2, 3)));
    CHECK(c.contains(Rat(2, 5)));
    CHECK(c.contains_zero());
    CHECK(c.sign() == 0);
    CHECK((a - a).contains_zero());
    auto r = DyadicInterval(Rat(1, 3)).rounded(10);
    CHECK(r.contains(Rat(1, 3)));
    CHECK(r.width() <= pow2(-9));
    auto s = sqrt_rounded(DyadicInterval(Rat(2)), 40);
    CHECK(s.lo() * s.lo() <= 2);
    CHECK(s.hi() * s.hi() >= 2);
    CHECK(s.width() <= pow2(-38));
    auto p = pow_rounded(DyadicInterval::from_bounds(Rat(3, 2), Rat(3, 2)), 5, 30);
    CHECK(p.contains(rpow(Rat(3, 2), 5)));
}

TEST_CASE("polynomials and Sturm sequences")
{
    auto f = poly::from_ints({-2, 0, 1});
    auto st = poly::sturm_sequence(f);
    CHECK(poly::count_roots(st, Rat(-2), Rat(2)) == 2);
    CHECK(poly::count_roots(st, Rat(0), Rat(2)) == 1);
    auto g = poly::from_ints({-1, 0, 0, 1});
    auto h = poly::gcd(poly::mul(f, g), poly::from_ints({-1, 1}));
    CHECK(poly::degree(h) == 1);
    CHECK(poly::eval(g, Rat(1)) == 0);
    poly::QPoly q, r;
    poly::divmod(g, f, q, r);
    CHECK(poly::add(poly::mul(q, f), r) == g);
    CHECK(poly::root_bound(poly::from_ints({-100, 0, 1})) > 10);
}

TEST_CASE("determinants")
{
    CHECK(linalg::det_bareiss(IntMatrix(0, 0)) == 1);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        std::size_t const n = 1 + t % 5;
        auto m = oracle::random_matrix(rng, n, n, 9);
        Int const d = linalg::det_bareiss(m);
        CHECK(d == oracle::naive_det(m.to_rows()));
        CHECK(Rat(d) == linalg::det(linalg::to_rat(m)));
    }
}

TEST_CASE("rational linear algebra")
{
    RatMatrix a({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
    auto inv = linalg::inverse(a);
    CHECK(a * inv == RatMatrix::identity(2));
    RatMatrix b({{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}});
    CHECK(linalg::rank(b) == 1);
    auto n = linalg::right_null_space(b);
    CHECK(n.rows() == 2);
    for (std::size_t i = 0; i < n.rows(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < 3; ++j)
            s += b(0, j) * n(i, j);
        CHECK(s == 0);
    }
    auto l = linalg::left_null_space(b);
    CHECK(l.rows() == 1);
    CHECK_THROWS_AS(linalg::inverse(b * linalg::RatMatrix({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(0)}})), Error);
}

TEST_CASE("Smith normal form examples")
{
    CHECK(linalg::snf(IntMatrix({{Int(2), Int(0)}, {Int(0), Int(3)}})) == std::vector<Int>{1, 6});
    CHECK(linalg::snf(IntMatrix::identity(4)) == std::vector<Int>(4, Int(1)));
    CHECK(linalg::snf(IntMatrix({{Int(0), Int(7)}, {Int(7), Int(0)}})) == std::vector<Int>{7, 7});
}

TEST_CASE("HNF and SNF agree with the naive oracles")
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        std::size_t const r = 1 + rng() % 6, c = 1 + rng() % 6;
        auto a = oracle::random_matrix(rng, r, c, 50);
        if (t % 7 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                a(r - 1, j) = 2 * a(0, j); // force a rank drop
        if (r * c <= 16 || std::min(r, c) <= 3)
            CHECK(linalg::snf(a) == oracle::snf_by_minors(a));
        auto h = linalg::hnf_with_transform(a);
        CHECK(h.u * a == h.h);
        CHECK(abs(linalg::det_bareiss(h.u)) == 1);
        CHECK(linalg::hnf(a) == oracle::hnf_by_row_ops(a));
    }
}

TEST_CASE("integer left kernel is saturated")
{
    IntMatrix a({{Int(2), Int(4)}, {Int(1), Int(2)}, {Int(3), Int(6)}});
    auto k = linalg::integer_left_kernel(a);
    CHECK(k.rows() == 2);
    CHECK(k * a == IntMatrix(2, 2));
    CHECK(linalg::snf(k) == std::vector<Int>{1, 1});
}
