#include "hmfcert/bgg.hpp"
#include "hmfcert/arith.hpp"
#include "hmfcert/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hmfcert;
using namespace hmfcert::bgg;

namespace {

std::set<std::vector<long>> coords(std::vector<TWeight> const& v)
{
    std::set<std::vector<long>> s;
    for (auto const& w : v)
        s.insert(w.coords);
    return s;
}

} // namespace

TEST_CASE("Kostant weights")
{
    std::vector<long> const n{2, 0};
    auto k0 = kostant_weights(n, 0);
    REQUIRE(k0.size() == 1);
    CHECK(k0[0].first == 0);
    CHECK(k0[0].second.coords == std::vector<long>{2, 0});
    auto k1 = kostant_weights(n, 1);
    REQUIRE(k1.size() == 2);
    CHECK(k1[0].second.coords == std::vector<long>{-4, 0});
    CHECK(k1[1].second.coords == std::vector<long>{2, -2});
    auto k2 = kostant_weights(n, 2);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].second.coords == std::vector<long>{-4, -2});
}

TEST_CASE("torus weights of the Chevalley-Eilenberg terms")
{
    CHECK(coords(omega_weights({2, 0}, 1)) ==
          std::set<std::vector<long>>{{0, 0}, {-2, 0}, {-4, 0}, {2, -2}, {0, -2}, {-2, -2}});
    CHECK(coords(omega_weights({0, 0, 0}, 0)) == std::set<std::vector<long>>{{0, 0, 0}});
    CHECK(coords(omega_weights({1}, 1)) == std::set<std::vector<long>>{{-1}, {-3}});
}

TEST_CASE("central character comparison")
{
    std::vector<long> const n{2, 0};
    auto a = central_char_equiv(TWeight{{-4, 0}, {}}, n, 7);
    CHECK(std::find(a.begin(), a.end(), Subset(1)) != a.end());
    CHECK(central_char_equiv(TWeight{{3, 0}, {}}, n, 7) == std::vector<Subset>{1});
    CHECK(central_char_equiv(TWeight{{1, 1}, {}}, n, 7).empty());
}

TEST_CASE("E1 table for k = (4, 2)")
{
    auto const t = bgg_table(weights::make_weight({4, 2}), 7);
    REQUIRE(t.d == 2);
    CHECK(t.max_i == 5);
    for (long i = 0; i <= t.max_i; ++i)
        CHECK(t.cells[0][i] == (i == 1 ? std::vector<Subset>{0} : std::vector<Subset>{}));
    CHECK(t.cells[2][5] == std::vector<Subset>{3});
    CHECK(t.cells[1][4] == std::vector<Subset>{1});
    CHECK(t.fil[0].size() == 4);
    CHECK(t.fil[5].size() == 1);
    REQUIRE(t.kostant_range);
    CHECK(*t.kostant_range);
    auto const text = render_text(t);
    CHECK(text.find("{0,1}") != std::string::npos);
    CHECK(text.find("Fil:") != std::string::npos);
}

TEST_CASE("Chandra's lemma on small weights")
{
    for (std::vector<long> n : {std::vector<long>{0}, {2}, {0, 0}, {2, 0}, {4, 2}, {1, 3, 1}}) {
        long sum = 0;
        for (long x : n)
            sum += x;
        long p = sum + long(n.size()) + 1;
        while (!is_prime(std::int64_t(p)))
            ++p;
        auto const r = chandra_check(n, p);
        CAPTURE(r.failure);
        CHECK(r.holds);
        CHECK(r.weights_checked > 0);
    }
}

TEST_CASE("small primes can break the equivalence")
{
    auto const r = chandra_check({4, 4}, 2);
    CHECK_FALSE(r.holds);
}
