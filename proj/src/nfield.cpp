#include "hmfcert/nfield.hpp"
#include "hmfcert/error.hpp"
#include "hmfcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace hmfcert::nfield {

namespace {

/* Deepest bisection state of one isolating interval [a, a + w]. The interval
 * at level L is [a + k*w/2^L, a + (k+1)*w/2^L]; shallower levels are recovered
 * from the deepest one by shifting k. */
struct RootCache {
    Rat a, w;
    int sign_at_a = 0;
    long level = 0;
    Int k = 0;
    std::mutex mu;
};

} // namespace

struct FieldData {
    std::vector<Int> coeffs;
    poly::QPoly f;
    int d = 0;
    std::vector<std::unique_ptr<RootCache>> roots;
    std::optional<std::vector<Permutation>> galois;
};

namespace {

std::vector<Permutation> close_group(std::vector<Permutation> const& gens, int d)
{
    Permutation id(d);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> seen{id};
    std::vector<Permutation> queue{id};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto const& g : gens) {
            Permutation h(d);
            for (int t = 0; t < d; ++t)
                h[t] = g[queue[i][t]];
            if (seen.insert(h).second)
                queue.push_back(h);
        }
    }
    return {seen.begin(), seen.end()};
}

void validate_permutation(Permutation const& p, int d)
{
    if (static_cast<int>(p.size()) != d)
        raise(ErrorCode::InvalidArgument, "galois permutation has wrong length");
    std::vector<bool> hit(d, false);
    for (int x : p) {
        if (x < 0 || x >= d || hit[x])
            raise(ErrorCode::InvalidArgument, "galois entry is not a permutation");
        hit[x] = true;
    }
}

bool is_transitive(std::vector<Permutation> const& group, int d)
{
    std::set<int> orbit;
    for (auto const& g : group)
        orbit.insert(g[0]);
    return static_cast<int>(orbit.size()) == d;
}

Int cubic_discriminant(std::vector<Int> const& c)
{
    /* x^3 + a x^2 + b x + e */
    Int const& e = c[0];
    Int const& b = c[1];
    Int const& a = c[2];
    return a * a * b * b - 4 * b * b * b - 4 * a * a * a * e - 27 * e * e + 18 * a * b * e;
}

bool is_square(Int const& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::vector<std::pair<Rat, Rat>> isolate_roots(poly::QPoly const& f, std::vector<poly::QPoly> const& sturm,
                                               Rat const& bound)
{
    struct Piece {
        Rat a, b;
        int count;
    };
    std::vector<std::pair<Rat, Rat>> out;
    std::vector<Piece> stack{{-bound, bound, poly::count_roots(sturm, -bound, bound)}};
    while (!stack.empty()) {
        Piece p = stack.back();
        stack.pop_back();
        if (p.count == 0)
            continue;
        if (p.count == 1 && poly::sign_at(f, p.b) != 0) {
            out.emplace_back(p.a, p.b);
            continue;
        }
        Rat const mid = (p.a + p.b) / 2;
        if (poly::sign_at(f, mid) == 0)
            raise(ErrorCode::NotIrreducible, "rational root " + to_string(mid));
        int const left = poly::count_roots(sturm, p.a, mid);
        stack.push_back({mid, p.b, p.count - left});
        stack.push_back({p.a, mid, left});
    }
    std::sort(out.begin(), out.end());
    return out;
}

DyadicInterval refine(RootCache& rc, poly::QPoly const& f, long level)
{
    std::lock_guard<std::mutex> lock(rc.mu);
    while (rc.level < level) {
        Rat const step = rc.w * pow2(-(rc.level + 1));
        Rat const mid = rc.a + step * Rat(2 * rc.k + 1);
        int const s = poly::sign_at(f, mid);
        if (s == 0)
            raise(ErrorCode::NotIrreducible, "root hit a bisection point");
        rc.k = (s == rc.sign_at_a) ? Int(2 * rc.k + 1) : Int(2 * rc.k);
        ++rc.level;
    }
    Int k = rc.k;
    if (level < rc.level)
        mpz_fdiv_q_2exp(k.get_mpz_t(), rc.k.get_mpz_t(), static_cast<mp_bitcnt_t>(rc.level - level));
    Rat const step = rc.w * pow2(-level);
    Rat const lo = rc.a + step * Rat(k);
    return DyadicInterval::from_bounds(lo, lo + step);
}

/* Searches a monic integer factor of degree <= d/2 among products of root
 * subsets. Throws NotIrreducible when one divides f. */
void check_irreducible(FieldData& fd)
{
    int const d = fd.d;
    if (d < 2)
        return;
    std::vector<std::vector<int>> pending;
    for (int s = 1; s <= d / 2; ++s) {
        std::vector<bool> pick(d, false);
        std::fill(pick.begin(), pick.begin() + s, true);
        do {
            std::vector<int> subset;
            for (int i = 0; i < d; ++i)
                if (pick[i])
                    subset.push_back(i);
            pending.push_back(subset);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    for (long level = 32; !pending.empty(); level *= 2) {
        if (level > (1L << 16))
            raise(ErrorCode::Indeterminate, "irreducibility test did not converge");
        std::vector<DyadicInterval> roots;
        for (int i = 0; i < d; ++i)
            roots.push_back(refine(*fd.roots[i], fd.f, level));
        std::vector<std::vector<int>> undecided;
        for (auto const& subset : pending) {
            std::vector<DyadicInterval> g{DyadicInterval(Rat(1))};
            for (int idx : subset) {
                std::vector<DyadicInterval> next(g.size() + 1, DyadicInterval(Rat(0)));
                for (std::size_t i = 0; i < g.size(); ++i) {
                    next[i + 1] = next[i + 1] + g[i];
                    next[i] = next[i] - g[i] * roots[idx];
                }
                g = std::move(next);
            }
            bool rejected = false, narrow = true;
            poly::QPoly candidate;
            for (auto const& c : g) {
                Int const lo = ceil_rat(c.lo()), hi = floor_rat(c.hi());
                if (lo > hi) {
                    rejected = true;
                    break;
                }
                if (c.width() >= Rat(1, 2))
                    narrow = false;
                candidate.push_back(Rat(lo));
            }
            if (rejected)
                continue;
            if (!narrow) {
                undecided.push_back(subset);
                continue;
            }
            if (poly::rem(fd.f, candidate).empty())
                raise(ErrorCode::NotIrreducible, "factor of degree " + std::to_string(subset.size()));
        }
        pending = std::move(undecided);
    }
}

} // namespace

Field Field::make(std::vector<Int> const& coeffs, std::optional<std::vector<Permutation>> galois)
{
    std::vector<Int> c = coeffs;
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    if (c.size() < 2)
        raise(ErrorCode::InvalidArgument, "minimal polynomial must have degree >= 1");
    if (c.back() != 1)
        raise(ErrorCode::InvalidArgument, "minimal polynomial must be monic");

    auto fd = std::make_shared<FieldData>();
    fd->coeffs = c;
    fd->f = poly::from_ints(c);
    fd->d = static_cast<int>(c.size()) - 1;
    int const d = fd->d;

    if (poly::degree(poly::gcd(fd->f, poly::derivative(fd->f))) > 0)
        raise(ErrorCode::NotIrreducible, "polynomial is not squarefree");

    std::vector<std::pair<Rat, Rat>> isolated;
    if (d == 1) {
        Rat const r = -Rat(c[0]);
        isolated.emplace_back(r, r);
    } else {
        auto const sturm = poly::sturm_sequence(fd->f);
        Rat const bound = poly::root_bound(fd->f);
        int const real_roots = poly::count_roots(sturm, -bound, bound);
        if (real_roots < d)
            raise(ErrorCode::NotTotallyReal,
                  std::to_string(real_roots) + " real roots for degree " + std::to_string(d));
        isolated = isolate_roots(fd->f, sturm, bound);
    }
    for (auto const& [a, b] : isolated) {
        auto rc = std::make_unique<RootCache>();
        rc->a = a;
        rc->w = b - a;
        rc->sign_at_a = poly::sign_at(fd->f, a);
        fd->roots.push_back(std::move(rc));
    }
    check_irreducible(*fd);

    if (galois) {
        for (auto const& g : *galois)
            validate_permutation(g, d);
        auto group = close_group(*galois, d);
        if (!is_transitive(group, d) || static_cast<int>(group.size()) < d)
            raise(ErrorCode::InvalidArgument, "galois data is not a transitive group of order >= d");
        fd->galois = std::move(group);
    } else if (d == 1) {
        fd->galois = std::vector<Permutation>{{0}};
    } else if (d == 2) {
        fd->galois = std::vector<Permutation>{{0, 1}, {1, 0}};
    } else if (d == 3 && is_square(cubic_discriminant(c))) {
        fd->galois = std::vector<Permutation>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    }

    Field field;
    field.data_ = std::move(fd);
    return field;
}

int Field::degree() const { return data_->d; }
std::vector<Int> const& Field::min_poly() const { return data_->coeffs; }
poly::QPoly const& Field::min_poly_q() const { return data_->f; }

DyadicInterval Field::isolating_interval(int idx) const
{
    return root_interval(idx, 0);
}

DyadicInterval Field::root_interval(int idx, long level) const
{
    if (idx < 0 || idx >= data_->d)
        raise(ErrorCode::InvalidArgument, "embedding index out of range");
    return refine(*data_->roots[idx], data_->f, level);
}

DyadicInterval Field::root(int idx, long bits) const
{
    DyadicInterval const iso = isolating_interval(idx);
    if (iso.width() == 0)
        return iso;
    long level = 0;
    Rat const target = pow2(-bits);
    Rat w = iso.width();
    while (w > target) {
        w /= 2;
        ++level;
    }
    return root_interval(idx, level);
}

std::optional<std::vector<Permutation>> const& Field::galois() const { return data_->galois; }

std::vector<Permutation> Field::symmetrization_group() const
{
    if (data_->galois)
        return *data_->galois;
    int const d = data_->d;
    if (d > 8)
        raise(ErrorCode::SizeOverflow, "symmetric-group symmetrization limited to degree 8");
    Permutation p(d);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

bool Field::operator==(Field const& other) const
{
    return data_ == other.data_ || data_->coeffs == other.data_->coeffs;
}

/* ---------------------------------------------------------------- elements */

namespace {

std::vector<Rat> reduce(poly::QPoly const& p, Field const& field)
{
    poly::QPoly r = poly::rem(p, field.min_poly_q());
    r.resize(field.degree(), Rat(0));
    return r;
}

poly::QPoly as_poly(std::vector<Rat> const& c)
{
    poly::QPoly p = c;
    poly::trim(p);
    return p;
}

} // namespace

FieldElem::FieldElem(Field field, std::vector<Rat> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (static_cast<int>(coeffs_.size()) > field_.degree())
        coeffs_ = reduce(as_poly(coeffs_), field_);
    coeffs_.resize(field_.degree(), Rat(0));
    for (auto& q : coeffs_)
        q.canonicalize();
}

FieldElem FieldElem::from_rational(Field const& field, Rat const& value)
{
    return FieldElem(field, {value});
}

FieldElem FieldElem::generator(Field const& field)
{
    if (field.degree() == 1)
        return from_rational(field, -Rat(field.min_poly()[0]));
    return FieldElem(field, {Rat(0), Rat(1)});
}

bool FieldElem::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Rat const& q) { return q == 0; });
}

bool FieldElem::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Rat const& q) { return q == 0; });
}

Rat FieldElem::rational_value() const
{
    if (!is_rational())
        raise(ErrorCode::InvalidArgument, "element is not rational");
    return coeffs_[0];
}

FieldElem FieldElem::operator+(FieldElem const& o) const
{
    std::vector<Rat> r = coeffs_;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += o.coeffs_[i];
    return FieldElem(field_, r);
}

FieldElem FieldElem::operator-(FieldElem const& o) const
{
    return *this + (-o);
}

FieldElem FieldElem::operator-() const
{
    std::vector<Rat> r = coeffs_;
    for (auto& q : r)
        q = -q;
    return FieldElem(field_, r);
}

FieldElem FieldElem::operator*(FieldElem const& o) const
{
    return FieldElem(field_, reduce(poly::mul(as_poly(coeffs_), as_poly(o.coeffs_)), field_));
}

FieldElem FieldElem::inverse() const
{
    if (is_zero())
        raise(ErrorCode::DivisionByZero, "inverse of zero");
    /* extended Euclid: s*a + t*f = g */
    poly::QPoly r0 = field_.min_poly_q(), r1 = as_poly(coeffs_);
    poly::QPoly s0, s1{Rat(1)};
    while (!r1.empty()) {
        poly::QPoly q, r;
        poly::divmod(r0, r1, q, r);
        poly::QPoly s = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (poly::degree(r0) != 0)
        raise(ErrorCode::DivisionByZero, "element is not invertible");
    return FieldElem(field_, reduce(poly::scale(s0, 1 / r0[0]), field_));
}

FieldElem FieldElem::pow(long e) const
{
    FieldElem base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElem result = from_rational(field_, 1);
    while (n) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

bool FieldElem::operator==(FieldElem const& o) const
{
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::vector<std::vector<Rat>> multiplication_matrix(FieldElem const& a)
{
    int const d = a.field().degree();
    std::vector<std::vector<Rat>> m;
    FieldElem x = a;
    FieldElem const theta = FieldElem::generator(a.field());
    for (int i = 0; i < d; ++i) {
        m.push_back(x.coeffs());
        if (i + 1 < d)
            x = x * theta;
    }
    return m;
}

Rat norm(FieldElem const& a)
{
    return linalg::det(linalg::RatMatrix(multiplication_matrix(a)));
}

Rat trace(FieldElem const& a)
{
    auto const m = multiplication_matrix(a);
    Rat t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        t += m[i][i];
    return t;
}

DyadicInterval embed(FieldElem const& a, int idx, long bits)
{
    Field const& field = a.field();
    if (idx < 0 || idx >= field.degree())
        raise(ErrorCode::InvalidArgument, "embedding index out of range");
    if (a.is_rational() || field.degree() == 1) {
        Rat const v = a.is_rational() ? a.rational_value()
                                      : poly::eval(as_poly(a.coeffs()), -Rat(field.min_poly()[0]));
        Int den = v.get_den();
        if (mpz_popcount(den.get_mpz_t()) == 1)
            return DyadicInterval(v);
        return DyadicInterval(v).rounded(bits + 2);
    }
    poly::QPoly const p = as_poly(a.coeffs());
    Rat const target = pow2(-(bits + 1));
    /* levels run over powers of two so that the chosen level is monotone in
     * bits, which makes the returned enclosures nested */
    long level = 8;
    while (level < bits + 8)
        level *= 2;
    for (;; level *= 2) {
        DyadicInterval const exact = poly::eval(p, field.root_interval(idx, level));
        if (exact.width() <= target)
            return exact.rounded(bits + 2);
        if (level > (1L << 22))
            raise(ErrorCode::Indeterminate, "embedding refinement did not converge");
    }
}

int embedding_sign(FieldElem const& a, int idx)
{
    if (a.is_zero())
        return 0;
    for (long bits = 16;; bits *= 2) {
        int const s = embed(a, idx, bits).sign();
        if (s != 0)
            return s;
    }
}

bool is_totally_positive(FieldElem const& a)
{
    for (int i = 0; i < a.field().degree(); ++i)
        if (embedding_sign(a, i) <= 0)
            return false;
    return true;
}

/* ------------------------------------------------------------ quadratic units */

FieldElem fundamental_unit_quadratic(long D)
{
    if (D <= 1)
        raise(ErrorCode::InvalidArgument, "D must be > 1");
    for (long p = 2; p * p <= D; ++p)
        if (D % (p * p) == 0)
            raise(ErrorCode::NotSquarefree, std::to_string(D) + " is divisible by " + std::to_string(p * p));
    Field const field = Field::make({Int(-D), Int(0), Int(1)});
    FieldElem const theta = FieldElem::generator(field);
    Int s;
    {
        Int dd = D;
        mpz_sqrt(s.get_mpz_t(), dd.get_mpz_t());
    }
    /* complete quotients (P + sqrt D) / Q of omega = (1 + sqrt D)/2 or sqrt D */
    Int P = (D % 4 == 1) ? 1 : 0;
    Int Q = (D % 4 == 1) ? 2 : 1;
    auto step = [&](Int& p, Int& q) {
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), Int(p + s).get_mpz_t(), q.get_mpz_t());
        Int const p2 = a * q - p;
        Int const q2 = (Int(D) - p2 * p2) / q;
        p = p2;
        q = q2;
    };
    step(P, Q);
    Int const P1 = P, Q1 = Q;
    FieldElem unit = FieldElem::from_rational(field, 1);
    do {
        unit = unit * FieldElem(field, {make_rat(P, Q), make_rat(1, Q)});
        step(P, Q);
    } while (P != P1 || Q != Q1);
    Rat const n = norm(unit);
    if (n != 1 && n != -1)
        raise(ErrorCode::Inconsistent, "continued fraction product is not a unit");
    (void)theta;
    return unit;
}

FieldElem totally_positive_fundamental(FieldElem const& eps)
{
    if (norm(eps) == 1 && is_totally_positive(eps))
        return eps;
    return eps * eps;
}

FieldElem orbit_reduce(FieldElem const& xi, FieldElem const& eps0)
{
    long j = 0;
    return orbit_reduce(xi, eps0, j);
}

FieldElem orbit_reduce(FieldElem const& xi, FieldElem const& eps0, long& j)
{
    if (xi.field().degree() != 2)
        raise(ErrorCode::UnsupportedDegree, "orbit reduction is implemented for quadratic fields");
    if (!is_totally_positive(xi))
        raise(ErrorCode::NotTotallyPositive, "xi is not totally positive");
    if (!is_totally_positive(eps0) || norm(eps0) != 1)
        raise(ErrorCode::NotTotallyPositive, "eps0 must be a totally positive unit");
    if (embed(eps0, 1, 32).lo() <= 1)
        raise(ErrorCode::InvalidArgument, "eps0 must exceed 1 under the second embedding");

    FieldElem const e2 = eps0 * eps0;
    FieldElem const e2inv = e2.inverse();
    /* r(xi) >= 1 iff the theta-coordinate of xi is >= 0, since theta_1 > theta_0 */
    auto ratio_at_least_one = [](FieldElem const& x) { return x.coeffs()[1] >= 0; };

    double const lr_xi = std::log(embed(xi, 1, 64).to_double() / embed(xi, 0, 64).to_double());
    double const lr_e2 = std::log(embed(e2, 1, 64).to_double() / embed(e2, 0, 64).to_double());
    j = -static_cast<long>(std::floor(lr_xi / lr_e2));
    FieldElem x = xi * e2.pow(j);
    while (!ratio_at_least_one(x)) {
        x = x * e2;
        ++j;
    }
    while (ratio_at_least_one(x * e2inv)) {
        x = x * e2inv;
        --j;
    }
    return x;
}

} // namespace hmfcert::nfield
