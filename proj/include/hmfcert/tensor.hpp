#pragma once

#include "hmfcert/error.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace hmfcert::gl2img {

template <class T>
using M2 = std::array<std::array<T, 2>, 2>;

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/* Default ring operations for types with arithmetic operators. */
template <class T>
struct NativeRing {
    T zero() const { return T(0); }
    T one() const { return T(1); }
    T add(T const& a, T const& b) const { return a + b; }
    T mul(T const& a, T const& b) const { return a * b; }
};

/* Matrix on the tensor basis e_b, b in {0,1}^d (bit t of b is the slot-t
 * index): entry [c][b] = prod_t mats[t][c_t][b_perm(t)]. Slot t of the output
 * draws from slot perm(t) of the input. */
template <class T, class Ring = NativeRing<T>>
DenseMatrix<T> tensor_induce(std::vector<M2<T>> const& mats, std::vector<int> const& perm, Ring const& R = {})
{
    std::size_t const d = mats.size();
    if (d > 10)
        raise(ErrorCode::SizeOverflow, "tensor induction is limited to d <= 10");
    if (perm.size() != d)
        raise(ErrorCode::InvalidArgument, "permutation length differs from the number of matrices");
    std::vector<bool> seen(d, false);
    for (int x : perm) {
        if (x < 0 || static_cast<std::size_t>(x) >= d || seen[x])
            raise(ErrorCode::InvalidArgument, "not a permutation");
        seen[x] = true;
    }
    std::size_t const n = std::size_t(1) << d;
    DenseMatrix<T> out(n, std::vector<T>(n, R.zero()));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t b = 0; b < n; ++b) {
            T acc = R.one();
            for (std::size_t t = 0; t < d; ++t)
                acc = R.mul(acc, mats[t][c >> t & 1U][b >> perm[t] & 1U]);
            out[c][b] = acc;
        }
    return out;
}

/* Cocycle rule: TI(m, s) * TI(m2, s2) = TI(m3, s2 o s), m3[t] = m[t] * m2[s(t)]. */
template <class T, class Ring = NativeRing<T>>
std::pair<std::vector<M2<T>>, std::vector<int>> compose_induced(std::vector<M2<T>> const& m, std::vector<int> const& s,
                                                                std::vector<M2<T>> const& m2,
                                                                std::vector<int> const& s2, Ring const& R = {})
{
    std::size_t const d = m.size();
    std::vector<M2<T>> m3(d);
    std::vector<int> s3(d);
    for (std::size_t t = 0; t < d; ++t) {
        M2<T> const& a = m[t];
        M2<T> const& b = m2[s[t]];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                m3[t][i][j] = R.add(R.mul(a[i][0], b[0][j]), R.mul(a[i][1], b[1][j]));
        s3[t] = s2[s[t]];
    }
    return {m3, s3};
}

template <class T, class Ring = NativeRing<T>>
DenseMatrix<T> dense_mul(DenseMatrix<T> const& a, DenseMatrix<T> const& b, Ring const& R = {})
{
    std::size_t const n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    DenseMatrix<T> c(n, std::vector<T>(m, R.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] = R.add(c[i][j], R.mul(a[i][l], b[l][j]));
    return c;
}

} // namespace hmfcert::gl2img
