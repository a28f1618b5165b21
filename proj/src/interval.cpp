#include "hmfcert/interval.hpp"
#include "hmfcert/error.hpp"

#include <algorithm>
#include <ostream>

namespace hmfcert {

DyadicInterval::DyadicInterval(Rat const& point) : center_(point), radius_(0) {}

DyadicInterval DyadicInterval::from_bounds(Rat const& lo, Rat const& hi)
{
    if (hi < lo)
        raise(ErrorCode::InvalidArgument, "interval with hi < lo");
    DyadicInterval x;
    x.center_ = (lo + hi) / 2;
    x.radius_ = (hi - lo) / 2;
    return x;
}

bool DyadicInterval::contains(Rat const& x) const
{
    return lo() <= x && x <= hi();
}

bool DyadicInterval::contains(DyadicInterval const& other) const
{
    return lo() <= other.lo() && other.hi() <= hi();
}

int DyadicInterval::sign() const
{
    if (lo() > 0)
        return 1;
    if (hi() < 0)
        return -1;
    return 0;
}

DyadicInterval DyadicInterval::rounded(long bits) const
{
    if (radius_ == 0 && center_.get_den() == 1)
        return *this;
    Rat const scale = pow2(bits);
    Rat const lo_s = lo() * scale, hi_s = hi() * scale;
    return from_bounds(Rat(floor_rat(lo_s)) / scale, Rat(ceil_rat(hi_s)) / scale);
}

DyadicInterval operator+(DyadicInterval const& a, DyadicInterval const& b)
{
    DyadicInterval r;
    r.center_ = a.center_ + b.center_;
    r.radius_ = a.radius_ + b.radius_;
    return r;
}

DyadicInterval operator-(DyadicInterval const& a)
{
    DyadicInterval r;
    r.center_ = -a.center_;
    r.radius_ = a.radius_;
    return r;
}

DyadicInterval operator-(DyadicInterval const& a, DyadicInterval const& b)
{
    return a + (-b);
}

DyadicInterval operator*(DyadicInterval const& a, DyadicInterval const& b)
{
    if (a.radius_ == 0 && b.radius_ == 0)
        return DyadicInterval(a.center_ * b.center_);
    Rat const al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
    Rat const p[4] = {al * bl, al * bh, ah * bl, ah * bh};
    return DyadicInterval::from_bounds(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

DyadicInterval mul_rounded(DyadicInterval const& a, DyadicInterval const& b, long bits)
{
    return (a * b).rounded(bits);
}

DyadicInterval pow_rounded(DyadicInterval const& a, unsigned long e, long bits)
{
    DyadicInterval result(Rat(1));
    DyadicInterval base = a;
    while (e) {
        if (e & 1)
            result = mul_rounded(result, base, bits);
        e >>= 1;
        if (e)
            base = mul_rounded(base, base, bits);
    }
    return result;
}

namespace {

/* floor(sqrt(x)) and ceil(sqrt(x)) on the grid 2^-bits */
Rat sqrt_floor(Rat const& x, long bits)
{
    if (x <= 0)
        return 0;
    Rat const s = x * pow2(2 * bits);
    Int const f = floor_rat(s);
    Int r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return Rat(r) / pow2(bits);
}

Rat sqrt_ceil(Rat const& x, long bits)
{
    if (x <= 0)
        return 0;
    Rat const s = x * pow2(2 * bits);
    Int const c = ceil_rat(s);
    Int r;
    mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
    if (r * r < c)
        r += 1;
    return Rat(r) / pow2(bits);
}

} // namespace

DyadicInterval sqrt_rounded(DyadicInterval const& a, long bits)
{
    if (a.hi() < 0)
        raise(ErrorCode::InvalidArgument, "square root of a negative interval");
    return DyadicInterval::from_bounds(sqrt_floor(a.lo(), bits), sqrt_ceil(a.hi(), bits));
}

std::ostream& operator<<(std::ostream& os, DyadicInterval const& x)
{
    return os << "[" << x.lo().get_d() << ", " << x.hi().get_d() << "]";
}

} // namespace hmfcert
