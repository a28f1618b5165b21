#include "hmfcert/poly.hpp"
#include "hmfcert/error.hpp"

#include <algorithm>

namespace hmfcert::poly {

void trim(QPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int degree(QPoly const& f)
{
    QPoly g = f;
    trim(g);
    return static_cast<int>(g.size()) - 1;
}

QPoly from_ints(std::vector<Int> const& c)
{
    QPoly f(c.begin(), c.end());
    trim(f);
    return f;
}

QPoly derivative(QPoly const& f)
{
    QPoly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * static_cast<long>(i));
    trim(d);
    return d;
}

QPoly add(QPoly const& a, QPoly const& b)
{
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(QPoly const& a, QPoly const& b)
{
    return add(a, scale(b, -1));
}

QPoly mul(QPoly const& a, QPoly const& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly scale(QPoly const& a, Rat const& c)
{
    QPoly r = a;
    for (auto& x : r)
        x *= c;
    trim(r);
    return r;
}

void divmod(QPoly const& a, QPoly const& b, QPoly& quot, QPoly& rem)
{
    QPoly bb = b;
    trim(bb);
    if (bb.empty())
        raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    rem = a;
    trim(rem);
    quot.assign(rem.size() >= bb.size() ? rem.size() - bb.size() + 1 : 0, Rat(0));
    Rat const lead = bb.back();
    while (rem.size() >= bb.size()) {
        std::size_t const shift = rem.size() - bb.size();
        Rat const c = rem.back() / lead;
        quot[shift] = c;
        for (std::size_t i = 0; i < bb.size(); ++i)
            rem[shift + i] -= c * bb[i];
        rem.pop_back();
        trim(rem);
    }
    trim(quot);
}

QPoly rem(QPoly const& a, QPoly const& b)
{
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

QPoly monic(QPoly const& f)
{
    QPoly g = f;
    trim(g);
    if (g.empty())
        return g;
    return scale(g, 1 / g.back());
}

QPoly gcd(QPoly a, QPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Rat eval(QPoly const& f, Rat const& x)
{
    Rat acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int sign_at(QPoly const& f, Rat const& x)
{
    return sgn(eval(f, x));
}

DyadicInterval eval(QPoly const& f, DyadicInterval const& x)
{
    DyadicInterval acc(Rat(0));
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = acc * x + DyadicInterval(*it);
    return acc;
}

std::vector<QPoly> sturm_sequence(QPoly const& f)
{
    std::vector<QPoly> seq;
    QPoly a = f, b = derivative(f);
    trim(a);
    seq.push_back(a);
    while (!b.empty()) {
        seq.push_back(b);
        QPoly r = scale(rem(a, b), -1);
        a = std::move(b);
        b = std::move(r);
    }
    return seq;
}

namespace {

int sign_changes(std::vector<QPoly> const& seq, Rat const& x)
{
    int changes = 0, last = 0;
    for (auto const& p : seq) {
        int const s = sign_at(p, x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int count_roots(std::vector<QPoly> const& sturm, Rat const& a, Rat const& b)
{
    return sign_changes(sturm, a) - sign_changes(sturm, b);
}

Rat root_bound(QPoly const& f)
{
    QPoly g = monic(f);
    Rat m = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        m = std::max(m, Rat(abs(g[i])));
    Rat b = 1;
    while (b <= m + 1)
        b *= 2;
    return b;
}

} // namespace hmfcert::poly
