#include "hmfcert/fq.hpp"
#include "hmfcert/arith.hpp"
#include "hmfcert/error.hpp"

namespace hmfcert::gl2img {

struct FqTables {
    int p = 0, r = 0, q = 0;
    std::vector<int> modulus; // monic, degree r
    std::vector<int> add, mul;
    std::vector<int> inv;
};

namespace {

std::vector<int> digits(int a, int p, int r)
{
    std::vector<int> d(r);
    for (int i = 0; i < r; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int encode(std::vector<int> const& d, int p)
{
    int a = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        a = a * p + d[i];
    return a;
}

/* product of polynomials a, b reduced by the monic modulus */
int poly_mulmod(int a, int b, std::vector<int> const& mod, int p, int r)
{
    auto const x = digits(a, p, r), y = digits(b, p, r);
    std::vector<int> prod(2 * r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (int deg = 2 * r - 1; deg >= r; --deg) {
        int const c = prod[deg];
        if (c == 0)
            continue;
        for (int i = 0; i <= r; ++i)
            prod[deg - r + i] = ((prod[deg - r + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(r);
    return encode(prod, p);
}

std::shared_ptr<FqTables> build(int p, std::vector<int> const& modulus)
{
    auto t = std::make_shared<FqTables>();
    t->p = p;
    t->r = static_cast<int>(modulus.size()) - 1;
    t->modulus = modulus;
    t->q = 1;
    for (int i = 0; i < t->r; ++i)
        t->q *= p;
    int const q = t->q, r = t->r;
    t->add.resize(q * q);
    t->mul.resize(q * q);
    t->inv.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        auto const x = digits(a, p, r);
        for (int b = 0; b < q; ++b) {
            auto const y = digits(b, p, r);
            std::vector<int> s(r);
            for (int i = 0; i < r; ++i)
                s[i] = (x[i] + y[i]) % p;
            t->add[a * q + b] = encode(s, p);
            t->mul[a * q + b] = r == 1 ? (a * b) % p : poly_mulmod(a, b, modulus, p, r);
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b)
            if (t->mul[a * q + b] == 1) {
                t->inv[a] = b;
                break;
            }
        if (t->inv[a] == 0)
            raise(ErrorCode::InvalidArgument, "modulus is not irreducible");
    }
    return t;
}

bool is_primitive(FqTables const& t)
{
    int const x = t.r == 1 ? (t.p - t.modulus[0]) % t.p : t.p; // the class of x
    if (x == 0)
        return false;
    long const n = t.q - 1;
    auto power = [&](long e) {
        int acc = 1, b = x;
        while (e) {
            if (e & 1)
                acc = t.mul[acc * t.q + b];
            b = t.mul[b * t.q + b];
            e >>= 1;
        }
        return acc;
    };
    if (power(n) != 1)
        return false;
    for (long l = 2; l <= n; ++l) {
        if (n % l != 0 || !is_prime(std::int64_t(l)))
            continue;
        if (power(n / l) == 1)
            return false;
    }
    return true;
}

} // namespace

Fq Fq::make(int p, int r)
{
    if (p < 2 || !is_prime(std::int64_t(p)) || r < 1)
        raise(ErrorCode::InvalidArgument, "F_q needs a prime p and r >= 1");
    long q = 1;
    for (int i = 0; i < r; ++i)
        q *= p;
    if (q > 121)
        raise(ErrorCode::SizeOverflow, "q is limited to 121");
    for (int code = 0; code < q; ++code) {
        std::vector<int> mod = digits(code, p, r);
        mod.push_back(1);
        std::shared_ptr<FqTables> t;
        /* reducible moduli have no inverse table; skip them */
        bool reducible = false;
        for (int a = 0; a < p && !reducible; ++a) {
            long v = 0;
            for (std::size_t i = mod.size(); i-- > 0;)
                v = (v * a + mod[i]) % p;
            reducible = r > 1 && v == 0;
        }
        if (reducible)
            continue;
        try {
            t = build(p, mod);
        } catch (Error const&) {
            continue;
        }
        if (is_primitive(*t)) {
            Fq f;
            f.t_ = t;
            return f;
        }
    }
    raise(ErrorCode::Inconsistent, "no primitive modulus found");
}

Fq Fq::with_modulus(int p, std::vector<int> const& modulus)
{
    if (p < 2 || !is_prime(std::int64_t(p)))
        raise(ErrorCode::InvalidArgument, "p must be prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        raise(ErrorCode::InvalidArgument, "modulus must be monic of degree >= 1");
    std::vector<int> m = modulus;
    for (auto& c : m)
        c = ((c % p) + p) % p;
    long q = 1;
    for (std::size_t i = 1; i < m.size(); ++i)
        q *= p;
    if (q > 121)
        raise(ErrorCode::SizeOverflow, "q is limited to 121");
    Fq f;
    f.t_ = build(p, m);
    return f;
}

int Fq::p() const { return t_->p; }
int Fq::r() const { return t_->r; }
int Fq::q() const { return t_->q; }
std::vector<int> const& Fq::modulus() const { return t_->modulus; }
int Fq::add(int a, int b) const { return t_->add[a * t_->q + b]; }
int Fq::mul(int a, int b) const { return t_->mul[a * t_->q + b]; }
int Fq::neg(int a) const
{
    auto d = digits(a, t_->p, t_->r);
    for (auto& x : d)
        x = (t_->p - x) % t_->p;
    return encode(d, t_->p);
}
int Fq::sub(int a, int b) const { return add(a, neg(b)); }
int Fq::inv(int a) const
{
    if (a == 0)
        raise(ErrorCode::DivisionByZero, "inverse of zero in F_q");
    return t_->inv[a];
}
int Fq::pow(int a, long e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int acc = 1;
    while (e) {
        if (e & 1)
            acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}
int Fq::from_int(long n) const { return static_cast<int>(((n % t_->p) + t_->p) % t_->p); }
bool Fq::in_subfield(int a, int sub_r) const
{
    long e = 1;
    for (int i = 0; i < sub_r; ++i)
        e *= t_->p;
    return pow(a, e) == a;
}
bool Fq::operator==(Fq const& o) const { return t_ == o.t_ || (t_->p == o.t_->p && t_->modulus == o.t_->modulus); }

} // namespace hmfcert::gl2img
