#include "hmfcert/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hmfcert::linalg {

RatMatrix to_rat(IntMatrix const& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rat(m(i, j));
    return r;
}

IntMatrix clear_denominators(RatMatrix const& m, Int& den)
{
    den = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            den = lcm(den, m(i, j).get_den());
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat const v = m(i, j) * den;
            r(i, j) = v.get_num();
        }
    return r;
}

Int det_bareiss(IntMatrix m)
{
    std::size_t const n = m.rows();
    if (n != m.cols())
        raise(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    if (n == 0)
        return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Rat det(RatMatrix const& m)
{
    if (m.rows() != m.cols())
        raise(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    /* scale row by row so the denominator bookkeeping stays exact */
    Rat scale = 1;
    IntMatrix im(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            den = lcm(den, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            im(i, j) = Rat(m(i, j) * den).get_num();
        scale *= den;
    }
    return Rat(det_bareiss(im)) / scale;
}

RatMatrix row_echelon(RatMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(r, piv);
        Rat const inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rat const f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return m.block(0, r, 0, m.cols());
}

std::size_t rank(RatMatrix m)
{
    return row_echelon(std::move(m)).rows();
}

RatMatrix inverse(RatMatrix const& m)
{
    std::size_t const n = m.rows();
    if (n != m.cols())
        raise(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RatMatrix e = row_echelon(aug);
    if (e.rows() < n)
        raise(ErrorCode::DivisionByZero, "singular matrix");
    for (std::size_t i = 0; i < n; ++i)
        if (e(i, i) != 1)
            raise(ErrorCode::DivisionByZero, "singular matrix");
    return e.block(0, n, n, 2 * n);
}

RatMatrix right_null_space(RatMatrix const& m)
{
    RatMatrix e = row_echelon(m);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < e.rows(); ++i) {
        std::size_t c = 0;
        while (e(i, c) == 0)
            ++c;
        pivots.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.rows(); ++i)
            v[pivots[i]] = -e(i, f);
        basis.push_back(v);
    }
    if (basis.empty())
        return RatMatrix(0, m.cols());
    return RatMatrix(basis);
}

RatMatrix left_null_space(RatMatrix const& m)
{
    return right_null_space(m.transpose());
}

namespace {

/* row_i <- a*row_i + b*row_j, row_j <- c*row_i + d*row_j */
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, Int const& a, Int const& b, Int const& c,
                  Int const& d)
{
    for (std::size_t col = 0; col < m.cols(); ++col) {
        Int const x = m(i, col), y = m(j, col);
        m(i, col) = a * x + b * y;
        m(j, col) = c * x + d * y;
    }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, Int const& f)
{
    if (f == 0)
        return;
    for (std::size_t col = 0; col < m.cols(); ++col)
        m(dst, col) += f * m(src, col);
}

} // namespace

HnfResult hnf_with_transform(IntMatrix const& a)
{
    HnfResult res;
    res.h = a;
    res.u = IntMatrix::identity(a.rows());
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h(i, c) == 0)
                continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
            Int const x = h(r, c) / g, y = h(i, c) / g;
            /* [s t; -y x] has determinant s*x + t*y = 1 */
            combine_rows(h, r, i, s, t, -y, x);
            combine_rows(u, r, i, s, t, -y, x);
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0) {
            for (std::size_t col = 0; col < h.cols(); ++col)
                h(r, col) = -h(r, col);
            for (std::size_t col = 0; col < u.cols(); ++col)
                u(r, col) = -u(r, col);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            add_row_multiple(h, i, r, -q);
            add_row_multiple(u, i, r, -q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

IntMatrix hnf(IntMatrix const& a)
{
    HnfResult res = hnf_with_transform(a);
    return res.h.block(0, res.rank, 0, a.cols());
}

IntMatrix integer_left_kernel(IntMatrix const& a)
{
    HnfResult res = hnf_with_transform(a);
    return res.u.block(res.rank, a.rows(), 0, a.rows());
}

std::vector<Int> snf(IntMatrix const& a)
{
    IntMatrix m = a;
    std::size_t const rows = m.rows(), cols = m.cols();
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        /* choose the entry of least nonzero absolute value as pivot */
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found)
            break;
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m(i, t) == 0)
                continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
            add_row_multiple(m, i, t, -q);
            if (m(i, t) != 0)
                clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m(t, j) == 0)
                continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) -= q * m(i, t);
            if (m(t, j) != 0)
                clean = false;
        }
        if (!clean)
            continue; // a smaller remainder appeared; pick a new pivot
        diag.push_back(abs(m(t, t)));
        ++t;
    }
    /* enforce the divisibility chain */
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Int const g = gcd(diag[i], diag[j]);
            Int const l = lcm(diag[i], diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

std::string to_string(IntMatrix const& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << m(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace hmfcert::linalg
