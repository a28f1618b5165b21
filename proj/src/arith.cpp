#include "hmfcert/arith.hpp"
#include "hmfcert/error.hpp"

#include <cctype>

namespace hmfcert {

Rat make_rat(Int const& num, Int const& den)
{
    if (den == 0)
        raise(ErrorCode::DivisionByZero, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(std::string const& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        raise(ErrorCode::InvalidArgument, "empty rational literal");
    auto const slash = s.find('/');
    auto parse_int = [&](std::string const& t) {
        Int v;
        if (t.empty() || v.set_str(t, 10) != 0)
            raise(ErrorCode::InvalidArgument, "bad rational literal '" + text + "'");
        return v;
    };
    if (slash == std::string::npos)
        return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(Rat const& q)
{
    return q.get_str(10);
}

std::string to_string(Int const& n)
{
    return n.get_str(10);
}

Int floor_rat(Rat const& q)
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_rat(Rat const& q)
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ipow(Int base, unsigned long exponent)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rat rpow(Rat const& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            raise(ErrorCode::DivisionByZero, "negative power of zero");
        return rpow(Rat(base.get_den(), base.get_num()), -exponent);
    }
    Rat r(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
          ipow(base.get_den(), static_cast<unsigned long>(exponent)));
    r.canonicalize();
    return r;
}

Rat pow2(long e)
{
    Int one = 1;
    Int p;
    mpz_mul_2exp(p.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    if (e >= 0)
        return Rat(p);
    return make_rat(1, p);
}

long valuation(Rat const& q, Int const& p)
{
    if (q == 0)
        raise(ErrorCode::InvalidArgument, "valuation of zero");
    long v = 0;
    Int num = q.get_num(), den = q.get_den();
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        num /= p;
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        den /= p;
        --v;
    }
    return v;
}

bool is_prime(Int const& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t next_prime(std::int64_t n)
{
    std::int64_t c = n < 1 ? 2 : n + 1;
    while (!is_prime(c))
        ++c;
    return c;
}

Int gcd(Int const& a, Int const& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(Int const& a, Int const& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace hmfcert
