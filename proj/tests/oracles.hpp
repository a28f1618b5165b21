#pragma once

/* Independent brute-force oracles shared by the unit tests and the acceptance suite. */

#include "hmfcert/arith.hpp"
#include "hmfcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using hmfcert::Int;
using hmfcert::Rat;
using hmfcert::linalg::IntMatrix;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

/* cofactor expansion, only for tiny matrices */
inline Int naive_det(std::vector<std::vector<Int>> const& a)
{
    std::size_t const n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Int>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(a[i][k]);
            minor.push_back(row);
        }
        Int const t = a[0][j] * naive_det(minor);
        s += (j % 2 ? -t : t);
    }
    return s;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/* Smith invariants from determinantal divisors: d_k / d_(k-1), gcd of k x k minors */
inline std::vector<Int> snf_by_minors(IntMatrix const& a)
{
    std::vector<Int> dk{Int(1)};
    std::size_t const kmax = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        combinations(a.rows(), k, 0, cur, rs);
        combinations(a.cols(), k, 0, cur, cs);
        Int g = 0;
        for (auto const& r : rs)
            for (auto const& c : cs) {
                std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        m[i][j] = a(r[i], c[j]);
                g = hmfcert::gcd(g, naive_det(m));
            }
        if (g == 0)
            break;
        dk.push_back(g);
    }
    std::vector<Int> inv;
    for (std::size_t k = 1; k < dk.size(); ++k)
        inv.push_back(dk[k] / dk[k - 1]);
    return inv;
}

/* Row HNF by repeated Euclidean row operations, nonzero rows only. */
inline IntMatrix hnf_by_row_ops(IntMatrix a)
{
    std::size_t const R = a.rows(), C = a.cols();
    std::size_t piv_row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < C && piv_row < R; ++c) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = piv_row; i < R; ++i)
                if (a(i, c) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c))))
                    best = i;
            if (!best)
                break;
            for (std::size_t j = 0; j < C; ++j)
                std::swap(a(piv_row, j), a(*best, j));
            bool done = true;
            for (std::size_t i = piv_row + 1; i < R; ++i) {
                if (a(i, c) == 0)
                    continue;
                Int const q = a(i, c) / a(piv_row, c);
                for (std::size_t j = 0; j < C; ++j)
                    a(i, j) -= q * a(piv_row, j);
                if (a(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a(piv_row, c) == 0)
            continue;
        if (a(piv_row, c) < 0)
            for (std::size_t j = 0; j < C; ++j)
                a(piv_row, j) = -a(piv_row, j);
        for (std::size_t i = 0; i < piv_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(piv_row, c).get_mpz_t());
            for (std::size_t j = 0; j < C; ++j)
                a(i, j) -= q * a(piv_row, j);
        }
        pivots.push_back(c);
        ++piv_row;
    }
    IntMatrix h(piv_row, C);
    for (std::size_t i = 0; i < piv_row; ++i)
        for (std::size_t j = 0; j < C; ++j)
            h(i, j) = a(i, j);
    return h;
}

/* Fundamental unit of Z[w] (w = (1+sqrt D)/2 when D = 1 mod 4, else sqrt D) by
 * exhaustive search: the smallest y >= 1 with x^2 - D y^2 = +-4 (resp. +-1). */
struct PellSolution {
    Int x, y; // unit (x + y sqrt D)/2 when D = 1 mod 4, x + y sqrt D otherwise
};

struct SquareFilter {
    std::vector<unsigned char> m64 = std::vector<unsigned char>(64), m45045 = std::vector<unsigned char>(45045);
    SquareFilter()
    {
        for (std::uint64_t i = 0; i < 45045; ++i) {
            m64[(i * i) % 64] = true;
            m45045[(i * i) % 45045] = true;
        }
    }
};

inline bool is_square_u128(unsigned __int128 t, std::uint64_t& root)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(t)));
    while (static_cast<unsigned __int128>(r) * r > t)
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= t)
        ++r;
    root = r;
    return static_cast<unsigned __int128>(r) * r == t;
}

inline PellSolution pell_brute_force(long D)
{
    static SquareFilter const f;
    long const c = D % 4 == 1 ? 4 : 1;
    /* D y^2 modulo 64 and 45045, updated by differences */
    long const M = 45045;
    long r64 = 0, r45 = 0, inc64 = D % 64, inc45 = D % M;
    long const step64 = (2 * D) % 64, step45 = (2 * D) % M;
    for (std::uint64_t y = 1;; ++y) {
        r64 = (r64 + inc64) & 63;
        inc64 = (inc64 + step64) & 63;
        r45 += inc45;
        if (r45 >= M)
            r45 -= M;
        inc45 += step45;
        if (inc45 >= M)
            inc45 -= M;
        for (long sgn : {-1L, 1L}) {
            long b = r45 + sgn * c;
            b = b < 0 ? b + M : (b >= M ? b - M : b);
            if (!f.m45045[b] || !f.m64[(r64 + sgn * c + 64) & 63])
                continue;
            unsigned __int128 const dy2 = static_cast<unsigned __int128>(D) * y * y;
            if (sgn < 0 && dy2 <= static_cast<unsigned __int128>(c))
                continue;
            std::uint64_t x = 0;
            if (is_square_u128(sgn < 0 ? dy2 - c : dy2 + c, x))
                return {Int(std::to_string(x)), Int(std::to_string(y))};
        }
    }
}

} // namespace oracle
