#include "hmfcert/lattice.hpp"
#include "hmfcert/error.hpp"
#include "hmfcert/factor.hpp"

#include <algorithm>
#include <set>

namespace hmfcert::lattice {

using linalg::det;
using linalg::inverse;
using linalg::to_rat;

namespace {

RatMatrix stack(RatMatrix const& a, RatMatrix const& b)
{
    if (a.rows() && b.rows() && a.cols() != b.cols())
        raise(ErrorCode::InvalidArgument, "stacked matrices differ in width");
    std::size_t const cols = a.rows() ? a.cols() : b.cols();
    RatMatrix s(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            s(a.rows() + i, j) = b(i, j);
    return s;
}

IntMatrix stack(IntMatrix const& a, IntMatrix const& b, std::size_t cols)
{
    IntMatrix s(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            s(a.rows() + i, j) = b(i, j);
    return s;
}

IntMatrix to_int(RatMatrix const& m, char const* what)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                raise(ErrorCode::NotStable, what);
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

Int p_part(Int d, Int const& p)
{
    Int pp = 1;
    d = abs(d);
    while (d != 0 && d % p == 0) {
        d /= p;
        pp *= p;
    }
    return pp;
}

/* all the intermediate data of the splitting */
struct Decomposition {
    std::size_t n = 0, r1 = 0;
    RatMatrix binv;       // inverse of [V1; V2]
    RatMatrix c1, c2;     // coordinates of the rows of L in V1 and V2
    IntMatrix k1, k2;     // integer left kernels of c1, c2
    RatMatrix p1, p2;     // bases of the projections
    RatMatrix l1, l2;     // bases of L cap V_j
};

RatMatrix integer_span(RatMatrix const& rows)
{
    Int den;
    IntMatrix const m = linalg::clear_denominators(rows, den);
    RatMatrix h = to_rat(linalg::hnf(m));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            h(i, j) /= den;
    return h;
}

IntMatrix rational_kernel(RatMatrix const& c)
{
    Int den;
    return linalg::integer_left_kernel(linalg::clear_denominators(c, den));
}

Decomposition decompose(Lattice const& L, Split const& s)
{
    Decomposition dc;
    dc.n = L.basis.cols();
    dc.r1 = s.v1.rows();
    if (L.basis.rows() != dc.n || det(to_rat(L.basis)) == 0)
        raise(ErrorCode::DegenerateSplit, "L must be a full-rank lattice in Q^n");
    if (s.v1.rows() + s.v2.rows() != dc.n || (s.v1.rows() && s.v1.cols() != dc.n) ||
        (s.v2.rows() && s.v2.cols() != dc.n))
        raise(ErrorCode::DegenerateSplit, "dim V1 + dim V2 must equal n");
    RatMatrix const b = stack(s.v1, s.v2);
    if (det(b) == 0)
        raise(ErrorCode::DegenerateSplit, "V1 and V2 are not complementary");
    dc.binv = inverse(b);
    RatMatrix const c = to_rat(L.basis) * dc.binv;
    dc.c1 = c.block(0, dc.n, 0, dc.r1);
    dc.c2 = c.block(0, dc.n, dc.r1, dc.n);
    dc.p1 = integer_span(dc.c1);
    dc.p2 = integer_span(dc.c2);
    dc.k1 = rational_kernel(dc.c1);
    dc.k2 = rational_kernel(dc.c2);
    dc.l1 = to_rat(dc.k2) * dc.c1;
    dc.l2 = to_rat(dc.k1) * dc.c2;
    return dc;
}

/* rows of `sub` in the basis `basis` (square, invertible) */
IntMatrix relative(RatMatrix const& sub, RatMatrix const& basis)
{
    if (basis.rows() == 0)
        return IntMatrix(sub.rows(), 0);
    return to_int(sub * inverse(basis), "sublattice is not contained in the lattice");
}

std::size_t rank_mod_p(IntMatrix m, Int const& p)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(r, piv);
        Int inv;
        mpz_invert(inv.get_mpz_t(), m(r, c).get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Int const f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) -= f * m(r, j);
                mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());
            }
        }
        ++r;
    }
    return r;
}

} // namespace

std::vector<Int> local_invariants(IntMatrix const& rel, Int const& p)
{
    std::vector<Int> const f = linalg::snf(rel);
    if (f.size() < rel.cols())
        raise(ErrorCode::DegenerateSplit, "quotient is infinite");
    std::vector<Int> out;
    for (auto const& d : f) {
        Int const pp = p_part(d, p);
        if (pp > 1)
            out.push_back(pp);
    }
    return out;
}

SplitLattices split_lattice(Lattice const& L, Split const& s)
{
    Decomposition const dc = decompose(L, s);
    return {dc.l1, dc.l2, dc.p1, dc.p2};
}

CongruenceModule congruence_module(Lattice const& L, Split const& s, Int const& p)
{
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, "p must be prime");
    Decomposition const dc = decompose(L, s);
    IntMatrix const t1 = relative(dc.l1, dc.p1);
    IntMatrix const t2 = relative(dc.l2, dc.p2);
    IntMatrix const inner = stack(dc.k2, dc.k1, dc.n);

    CongruenceModule cm;
    cm.p = p;
    cm.three_way = {local_invariants(t1, p), local_invariants(inner, p), local_invariants(t2, p)};
    if (cm.three_way[0] != cm.three_way[1] || cm.three_way[1] != cm.three_way[2])
        raise(ErrorCode::FusionMismatch, "the three quotients have different invariants");
    cm.invariant_factors = cm.three_way[0];
    cm.order_c0 = t1.rows() ? abs(linalg::det_bareiss(t1)) : Int(1);
    cm.index_inner = abs(linalg::det_bareiss(inner));
    {
        RatMatrix outer(dc.n, dc.n);
        RatMatrix const a = dc.r1 ? dc.c1 * inverse(dc.p1) : RatMatrix(dc.n, 0);
        RatMatrix const b = dc.r1 < dc.n ? dc.c2 * inverse(dc.p2) : RatMatrix(dc.n, 0);
        for (std::size_t i = 0; i < dc.n; ++i) {
            for (std::size_t j = 0; j < dc.r1; ++j)
                outer(i, j) = a(i, j);
            for (std::size_t j = dc.r1; j < dc.n; ++j)
                outer(i, j) = b(i, j - dc.r1);
        }
        cm.index_outer = abs(linalg::det_bareiss(to_int(outer, "L is not inside L^1 + L^2")));
    }
    return cm;
}

Discriminant disc_pairing(RatMatrix const& gram, int d)
{
    if (d < 0 || d > 12)
        raise(ErrorCode::SizeOverflow, "d out of range");
    std::size_t const size = std::size_t(1) << d;
    if (gram.rows() != size || gram.cols() != size)
        raise(ErrorCode::InvalidArgument, "gram matrix must be 2^d x 2^d");
    std::size_t const full = size - 1;
    for (std::size_t J = 0; J < size; ++J)
        for (std::size_t K = 0; K < size; ++K)
            if (K != (full ^ J) && gram(J, K) != 0)
                raise(ErrorCode::SupportViolation, "entry outside the complementary pairs");
    Discriminant r;
    r.det = det(gram);
    r.pair_product = 1;
    for (std::size_t J = 0; J < size; ++J) {
        std::size_t const Jc = full ^ J;
        if (J < Jc)
            r.pair_product *= -gram(J, Jc) * gram(Jc, J);
    }
    if (r.det != r.pair_product)
        raise(ErrorCode::Inconsistent, "determinant differs from the pair product");
    return r;
}

std::vector<Rat> charpoly(RatMatrix const& a)
{
    std::size_t const n = a.rows();
    if (a.cols() != n)
        raise(ErrorCode::InvalidArgument, "characteristic polynomial of a non-square matrix");
    Int den;
    IntMatrix const ai = linalg::clear_denominators(a, den);
    Rat const scale = rpow(Rat(den), static_cast<long>(n));
    /* values at x = 0..n by fraction-free determinants, then Newton interpolation */
    std::vector<Rat> xs, dd;
    for (std::size_t k = 0; k <= n; ++k) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = (i == j ? den * Int(static_cast<long>(k)) : Int(0)) - ai(i, j);
        xs.push_back(Rat(static_cast<long>(k)));
        dd.push_back(Rat(linalg::det_bareiss(m)) / scale);
    }
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Rat> poly{dd[n]};
    for (std::size_t i = n; i-- > 0;) {
        /* poly = poly * (x - xs[i]) + dd[i] */
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * xs[i];
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    return poly;
}

std::vector<Int> integer_roots(std::vector<Rat> const& poly_in)
{
    std::vector<Int> roots;
    std::vector<Rat> poly = poly_in;
    while (!poly.empty() && poly.back() == 0)
        poly.pop_back();
    if (poly.size() <= 1)
        return roots;
    while (poly.size() > 1 && poly[0] == 0) {
        roots.push_back(0);
        poly.erase(poly.begin());
    }
    if (poly.size() > 1) {
        Int l = 1;
        for (auto const& c : poly)
            l = lcm(l, c.get_den());
        Int const c0 = abs(Rat(poly[0] * l).get_num());
        std::vector<Int> divisors{1};
        for (auto const& [q, e] : factor(c0).primes) {
            std::size_t const count = divisors.size();
            Int pw = 1;
            for (int i = 0; i < e; ++i) {
                pw *= q;
                for (std::size_t j = 0; j < count; ++j)
                    divisors.push_back(divisors[j] * pw);
            }
        }
        for (auto const& dv : divisors) {
            for (Int r : {dv, Int(-dv)}) {
                for (;;) {
                    /* synthetic division by (x - r) */
                    std::vector<Rat> q(poly.size() - 1);
                    Rat acc = 0;
                    for (std::size_t i = poly.size(); i-- > 0;) {
                        acc = acc * r + poly[i];
                        if (i > 0)
                            q[i - 1] = acc;
                    }
                    if (acc != 0)
                        break;
                    roots.push_back(r);
                    poly = std::move(q);
                    if (poly.size() <= 1)
                        break;
                }
                if (poly.size() <= 1)
                    break;
            }
            if (poly.size() <= 1)
                break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

struct JointState {
    std::vector<Int> values;
    RatMatrix basis; // rows in reduced echelon form
};

std::vector<std::size_t> pivots(RatMatrix const& e)
{
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < e.rows(); ++i) {
        std::size_t j = 0;
        while (j < e.cols() && e(i, j) == 0)
            ++j;
        piv.push_back(j);
    }
    return piv;
}

std::vector<Eigensystem> joint_eigensystems(std::vector<RatMatrix> const& actions, std::size_t dim,
                                            bool& needs_extension)
{
    std::vector<JointState> states{{{}, RatMatrix::identity(dim)}};
    if (dim == 0)
        states.clear();
    for (auto const& a : actions) {
        std::vector<JointState> next;
        for (auto const& st : states) {
            std::size_t const k = st.basis.rows();
            if (k > 12)
                raise(ErrorCode::SizeOverflow, "eigenspace dimension above the degree cap 12");
            auto const piv = pivots(st.basis);
            RatMatrix const image = st.basis * a;
            RatMatrix r(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    r(i, j) = image(i, piv[j]);
            std::vector<Int> roots = integer_roots(charpoly(r));
            if (roots.size() < k)
                needs_extension = true;
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            for (auto const& lambda : roots) {
                RatMatrix shifted = r;
                for (std::size_t i = 0; i < k; ++i)
                    shifted(i, i) -= lambda;
                RatMatrix const null = linalg::left_null_space(shifted);
                if (null.rows() == 0)
                    continue;
                JointState ns{st.values, linalg::row_echelon(null * st.basis)};
                ns.values.push_back(lambda);
                next.push_back(std::move(ns));
            }
        }
        states = std::move(next);
    }
    std::vector<Eigensystem> out;
    for (auto const& st : states)
        out.push_back({st.values, st.basis.rows()});
    return out;
}

} // namespace

CongruenceReport find_congruences(std::vector<IntMatrix> const& ops, Lattice const& L, Split const& s,
                                  Int const& p)
{
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, "p must be prime");
    Decomposition const dc = decompose(L, s);
    std::size_t const n = dc.n, r1 = dc.r1;
    for (auto const& t : ops)
        if (t.rows() != n || t.cols() != n)
            raise(ErrorCode::InvalidArgument, "operator has the wrong size");
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (!(ops[i] * ops[j] == ops[j] * ops[i]))
                raise(ErrorCode::NotCommuting, "operators " + std::to_string(i) + " and " + std::to_string(j));

    RatMatrix const lb = to_rat(L.basis);
    RatMatrix const lbinv = inverse(lb);
    std::vector<RatMatrix> act1, act2, on_proj1;
    for (auto const& t : ops) {
        RatMatrix const tt = to_rat(t.transpose());
        to_int(lb * tt * lbinv, "operator does not preserve L");
        RatMatrix const im1 = s.v1 * tt * dc.binv;
        RatMatrix const im2 = s.v2 * tt * dc.binv;
        for (std::size_t i = 0; i < im1.rows(); ++i)
            for (std::size_t j = r1; j < n; ++j)
                if (im1(i, j) != 0)
                    raise(ErrorCode::NotStable, "operator does not preserve V1");
        for (std::size_t i = 0; i < im2.rows(); ++i)
            for (std::size_t j = 0; j < r1; ++j)
                if (im2(i, j) != 0)
                    raise(ErrorCode::NotStable, "operator does not preserve V2");
        act1.push_back(im1.block(0, r1, 0, r1));
        act2.push_back(im2.block(0, n - r1, r1, n));
        if (r1)
            on_proj1.push_back(dc.p1 * act1.back() * inverse(dc.p1));
    }

    CongruenceReport rep;
    rep.v1_systems = joint_eigensystems(act1, r1, rep.needs_extension);
    rep.v2_systems = joint_eigensystems(act2, n - r1, rep.needs_extension);
    for (std::size_t i = 0; i < rep.v1_systems.size(); ++i)
        for (std::size_t j = 0; j < rep.v2_systems.size(); ++j) {
            bool ok = true;
            for (std::size_t o = 0; o < ops.size() && ok; ++o)
                ok = (rep.v1_systems[i].values[o] - rep.v2_systems[j].values[o]) % p == 0;
            if (ok)
                rep.pairs.emplace_back(i, j);
        }
    rep.module = congruence_module(L, s, p);

    /* C0 / m C0 with m = (p, T - theta(T)) for each system on V1 */
    IntMatrix const t1 = r1 ? relative(dc.l1, dc.p1) : IntMatrix();
    std::vector<IntMatrix> x;
    for (auto const& a : on_proj1)
        x.push_back(to_int(a, "operator does not preserve the projection of L"));
    for (std::size_t i = 0; i < rep.v1_systems.size(); ++i) {
        IntMatrix rel = t1;
        for (std::size_t o = 0; o < x.size(); ++o) {
            IntMatrix shifted = x[o];
            for (std::size_t k = 0; k < r1; ++k)
                shifted(k, k) -= rep.v1_systems[i].values[o];
            rel = stack(rel, shifted, r1);
        }
        bool const nonzero = rank_mod_p(rel, p) < r1;
        rep.localized_nonzero.push_back(nonzero);
        bool has_pair = std::any_of(rep.pairs.begin(), rep.pairs.end(), [&](auto const& pr) { return pr.first == i; });
        if (nonzero && !has_pair)
            rep.deligne_serre_consistent = false;
    }
    return rep;
}

} // namespace hmfcert::lattice
