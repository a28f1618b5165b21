#pragma once

/* Random inputs and a reference determinant for tensor induction checks. */

#include "hmfcert/gl2img.hpp"
#include "hmfcert/tensor.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace tensor_helpers {

using hmfcert::gl2img::Fq;
using hmfcert::gl2img::DenseMatrix;
using hmfcert::gl2img::M2;

template <class T>
inline M2<T> random_m2(std::mt19937_64& rng, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    return {{{T(d(rng)), T(d(rng))}, {T(d(rng)), T(d(rng))}}};
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int d)
{
    std::vector<int> p(d);
    for (int i = 0; i < d; ++i)
        p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline long det_mod(DenseMatrix<int> a, Fq const& F)
{
    std::size_t const n = a.size();
    int det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && a[r][c] == 0)
            ++r;
        if (r == n)
            return 0;
        if (r != c) {
            std::swap(a[r], a[c]);
            det = F.neg(det);
        }
        det = F.mul(det, a[c][c]);
        int const inv = F.inv(a[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            int const f = F.mul(a[i][c], inv);
            for (std::size_t j = c; j < n; ++j)
                a[i][j] = F.sub(a[i][j], F.mul(f, a[c][j]));
        }
    }
    return det;
}

} // namespace tensor_helpers
