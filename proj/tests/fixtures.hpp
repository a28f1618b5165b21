#pragma once

/* Subgroups of GL2(F_q) used by the classification tests. */

#include "hmfcert/gl2img.hpp"

#include <optional>

namespace fixtures {

using hmfcert::gl2img::Fq;
using hmfcert::gl2img::FqMatrixGroup;
using hmfcert::gl2img::Mat2;

inline Mat2 m(Fq const& F, long a, long b, long c, long d)
{
    return {F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d)};
}

inline FqMatrixGroup sl2(Fq const& F)
{
    /* x generates F_q over F_p when r > 1 (encoding p); for r = 1 use 1 */
    int const gen = F.r() > 1 ? F.p() : 1;
    return {F, {Mat2{1, gen, 0, 1}, m(F, 1, 0, 1, 1)}};
}

inline long projective_order(Fq const& F, Mat2 x)
{
    Mat2 y = x;
    for (long k = 1; k <= 1000; ++k) {
        if (hmfcert::gl2img::is_scalar(y))
            return k;
        y = hmfcert::gl2img::mat_mul(F, y, x);
    }
    return 0;
}

/* a (2, 3, r) triangle pair in SL2(F_p): projective orders 2, 3 and r for
 * x, y and xy, generating a group of projective order `target` */
inline std::optional<FqMatrixGroup> triangle_group(Fq const& F, long r, std::size_t target)
{
    int const q = F.q();
    std::vector<Mat2> sl;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    Mat2 const x{a, b, c, d};
                    if (hmfcert::gl2img::mat_det(F, x) == 1)
                        sl.push_back(x);
                }
    for (auto const& x : sl) {
        if (projective_order(F, x) != 2)
            continue;
        for (auto const& y : sl) {
            if (projective_order(F, y) != 3)
                continue;
            if (projective_order(F, hmfcert::gl2img::mat_mul(F, x, y)) != r)
                continue;
            FqMatrixGroup g{F, {x, y}};
            auto const c = hmfcert::gl2img::classify_projective_image(g);
            if (c.projective_order == target)
                return g;
        }
    }
    return std::nullopt;
}

/* normalizer of the split torus in GL2(F_p), p odd */
inline FqMatrixGroup torus_normalizer(Fq const& F, int primitive)
{
    return {F, {Mat2{primitive, 0, 0, 1}, Mat2{1, 0, 0, primitive}, m(F, 0, 1, 1, 0)}};
}

} // namespace fixtures
