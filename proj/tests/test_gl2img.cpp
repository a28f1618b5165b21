#include "fixtures.hpp"
#include "tensor_helpers.hpp"
#include "hmfcert/error.hpp"
#include "hmfcert/gl2img.hpp"
#include "hmfcert/linalg.hpp"
#include "hmfcert/tensor.hpp"

#include <doctest.h>

#include <random>

using namespace hmfcert;
using namespace hmfcert::gl2img;

namespace {

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (Error const& e) {
        return e.code();
    }
    return ErrorCode::Indeterminate;
}

} // namespace

TEST_CASE("finite fields")
{
    Fq const F = Fq::make(3, 2);
    CHECK(F.q() == 9);
    for (int a = 1; a < 9; ++a) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, 8) == 1);
        CHECK(F.add(a, F.neg(a)) == 0);
    }
    CHECK(F.in_subfield(2, 1));
    CHECK_FALSE(F.in_subfield(3, 1));
    CHECK(F.from_int(-1) == 2);
    /* x^2 + 1 over F_3 is irreducible but not primitive */
    Fq const G = Fq::with_modulus(3, {1, 0, 1});
    CHECK(G.mul(3, 3) == 2);
    CHECK(code_of([] { Fq::with_modulus(3, {2, 0, 1}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Fq::make(2, 7); }) == ErrorCode::SizeOverflow);
    CHECK(Fq::make(11, 2).q() == 121);
    CHECK(code_of([] { Fq::make(4, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("closure")
{
    Fq const F3 = Fq::make(3);
    auto e = closure({F3, {}});
    CHECK(e.size() == 1);
    CHECK(closure(fixtures::sl2(F3)).size() == 24);
    Fq const F5 = Fq::make(5);
    CHECK(closure({F5, {Mat2{2, 0, 0, 1}, Mat2{1, 0, 0, 2}}}).size() == 16);
    CHECK(code_of([&] { closure(fixtures::sl2(Fq::make(7)), 100); }) == ErrorCode::CapExceeded);
}

TEST_CASE("PSL2 order table")
{
    for (auto [p, r] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        Fq const F = Fq::make(p, r);
        long const q = F.q();
        auto const c = classify_projective_image(fixtures::sl2(F));
        CAPTURE(q);
        CHECK(c.type == ImageType::PSL2);
        CHECK(c.q_prime == q);
        CHECK(long(c.projective_order) == q * (q * q - 1) / (q % 2 ? 2 : 1));
    }
    auto const c = classify_projective_image(fixtures::sl2(Fq::make(7)));
    CHECK(c.label() == "PSL2(7)");
    CHECK(c.projective_order == 168);
}

TEST_CASE("PGL2 and subfield images")
{
    Fq const F = Fq::make(5);
    auto g = fixtures::sl2(F);
    g.generators.push_back(Mat2{2, 0, 0, 1});
    auto const c = classify_projective_image(g);
    CHECK(c.type == ImageType::PGL2);
    CHECK(c.projective_order == 120);
    /* SL2(F_3) inside GL2(F_9) */
    Fq const F9 = Fq::make(3, 2);
    auto const s = classify_projective_image({F9, {fixtures::m(F9, 1, 1, 0, 1), fixtures::m(F9, 1, 0, 1, 1)}});
    CHECK(s.type == ImageType::PSL2);
    CHECK(s.q_prime == 3);
}

TEST_CASE("exceptional and dihedral fixtures")
{
    Fq const F5 = Fq::make(5);
    auto const d = classify_projective_image(fixtures::torus_normalizer(F5, 2));
    CHECK(d.type == ImageType::Dihedral);
    CHECK(d.n == 4);
    CHECK(d.projective_order == 8);
    auto const a4 = fixtures::triangle_group(F5, 3, 12);
    REQUIRE(a4);
    CHECK(classify_projective_image(*a4).type == ImageType::A4);
    Fq const F7 = Fq::make(7);
    auto const s4 = fixtures::triangle_group(F7, 4, 24);
    REQUIRE(s4);
    CHECK(classify_projective_image(*s4).type == ImageType::S4);
    Fq const F11 = Fq::make(11);
    auto const a5 = fixtures::triangle_group(F11, 5, 60);
    REQUIRE(a5);
    CHECK(classify_projective_image(*a5).type == ImageType::A5);
    CHECK(classify_projective_image(*a5).label() == "A5");
}

TEST_CASE("reducible images")
{
    Fq const F7 = Fq::make(7);
    CHECK(classify_projective_image({F7, {Mat2{3, 0, 0, 3}}}).type == ImageType::Reducible);
    CHECK(classify_projective_image({F7, {Mat2{1, 1, 0, 1}, Mat2{3, 0, 0, 1}}}).type == ImageType::Reducible);
    /* irreducible over F_7 but split over F_49: still reducible for the test */
    CHECK(classify_projective_image({F7, {Mat2{0, 6, 1, 0}}}).type == ImageType::Reducible);
}

TEST_CASE("large image check")
{
    Fq const F3 = Fq::make(3);
    auto g = fixtures::sl2(F3);
    g.generators.push_back(fixtures::m(F3, -1, 0, 0, 1));
    CHECK(li_check(g) == std::optional<int>(3));
    CHECK_FALSE(li_check(fixtures::torus_normalizer(Fq::make(5), 2)));
    Fq const F9 = Fq::make(3, 2);
    FqMatrixGroup h{F9, {fixtures::m(F9, 1, 1, 0, 1), fixtures::m(F9, 1, 0, 1, 1), fixtures::m(F9, -1, 0, 0, 1),
                         Mat2{3, 0, 0, 3}}};
    CHECK(li_check(h) == std::optional<int>(3));
    CHECK(li_check(fixtures::sl2(Fq::make(7))) == std::optional<int>(7));
}

using namespace tensor_helpers;

TEST_CASE("tensor induction: examples")
{
    using T = long;
    M2<T> const a{{{1, 2}, {3, 4}}}, b{{{0, 1}, {5, 6}}}, id{{{1, 0}, {0, 1}}};
    auto const k = tensor_induce<T>({a, b}, {0, 1});
    /* bit 0 is slot 0: entry [c][b'] = a[c0][b0] b[c1][b1] */
    for (int c = 0; c < 4; ++c)
        for (int bb = 0; bb < 4; ++bb)
            CHECK(k[c][bb] == a[c & 1][bb & 1] * b[c >> 1][bb >> 1]);
    auto const s = tensor_induce<T>({id, id}, {1, 0});
    long tr = 0;
    for (int i = 0; i < 4; ++i)
        tr += s[i][i];
    CHECK(tr == 2);
    CHECK(code_of([&] { tensor_induce<T>({a, b}, {0, 0}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { tensor_induce<T>(std::vector<M2<T>>(11, id), std::vector<int>(11, 0)); }) ==
          ErrorCode::SizeOverflow);
}

TEST_CASE("tensor induction: cocycle and determinant over Z and F_7")
{
    std::mt19937_64 rng(3);
    Fq const F = Fq::make(7);
    FqRing const R{F};
    for (int t = 0; t < 50; ++t) {
        int const d = 1 + t % 3;
        std::vector<M2<long>> m(d), m2(d);
        for (auto& x : m)
            x = random_m2<long>(rng, -3, 3);
        for (auto& x : m2)
            x = random_m2<long>(rng, -3, 3);
        auto const s = random_perm(rng, d), s2 = random_perm(rng, d);
        auto const [m3, s3] = compose_induced<long>(m, s, m2, s2);
        CHECK(dense_mul<long>(tensor_induce<long>(m, s), tensor_induce<long>(m2, s2)) == tensor_induce<long>(m3, s3));

        std::vector<M2<int>> f(d), f2(d);
        for (auto& x : f)
            x = random_m2<int>(rng, 0, 6);
        for (auto& x : f2)
            x = random_m2<int>(rng, 0, 6);
        auto const [f3, t3] = compose_induced<int>(f, s, f2, s2, R);
        CHECK(dense_mul<int>(tensor_induce<int>(f, s, R), tensor_induce<int>(f2, s2, R), R) ==
              tensor_induce<int>(f3, t3, R));

        /* identity slot permutation: det = prod det^(2^(d-1)) */
        std::vector<int> id(d);
        for (int i = 0; i < d; ++i)
            id[i] = i;
        auto const k = tensor_induce<long>(m, id);
        std::vector<std::vector<Int>> rows;
        for (auto const& r : k)
            rows.emplace_back(r.begin(), r.end());
        Int expect = 1;
        for (auto const& x : m)
            expect *= ipow(Int(x[0][0] * x[1][1] - x[0][1] * x[1][0]), 1UL << (d - 1));
        CHECK(linalg::det_bareiss(linalg::IntMatrix(rows)) == expect);
        long fe = 1;
        for (auto const& x : f)
            fe = F.mul(int(fe), F.pow(F.sub(F.mul(x[0][0], x[1][1]), F.mul(x[0][1], x[1][0])), 1L << (d - 1)));
        CHECK(det_mod(tensor_induce<int>(f, id, R), F) == fe);
    }
}

TEST_CASE("subset-sum weight recovery")
{
    auto r = recover_from_subset_sums({1, 2, 4, 5}, 2);
    CHECK(r.a == 3);
    CHECK(r.parts == std::vector<long>{0, 1});
    r = recover_from_subset_sums({3, 4}, 1);
    CHECK(r.a == 7);
    CHECK(r.parts == std::vector<long>{3});
    CHECK(code_of([] { recover_from_subset_sums({0, 1, 2, 5}, 2); }) == ErrorCode::Inconsistent);
    CHECK(code_of([] { recover_from_subset_sums({0, 1, 2}, 2); }) == ErrorCode::Inconsistent);
    for (long a = 1; a <= 9; ++a)
        for (long p0 = 0; 2 * p0 < a; ++p0)
            for (long p1 = p0; 2 * p1 < a; ++p1) {
                auto const rr = recover_from_subset_sums(subset_sums(a, {p0, p1}), 2);
                CHECK(rr.a == a);
                CHECK(rr.parts == std::vector<long>{p0, p1});
            }
}

TEST_CASE("tame characters")
{
    CHECK(tame_char_order({7, 1, {1}}) == 6);
    CHECK(tame_char_order({3, 2, {1, 1}}) == 2);
    CHECK(tame_char_order({5, 2, {1, 3}}) == 3);
    CHECK(tame_char_order({5, 1, {4}}) == 0);
    auto const ch = exceptional_chain_check(13, 3, 6, true);
    CAPTURE(ch.counterexample);
    CHECK(ch.holds);
    CHECK(ch.characters_checked > 0);
}
