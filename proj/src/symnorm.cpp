#include "hmfcert/symnorm.hpp"
#include "hmfcert/error.hpp"

#include <map>

namespace hmfcert::nfield {

std::string to_string(NormStatus s)
{
    switch (s) {
    case NormStatus::Certified: return "Certified";
    case NormStatus::Zero: return "Zero";
    case NormStatus::Indeterminate: return "Indeterminate";
    }
    return "?";
}

namespace {

std::vector<long> permuted(std::vector<long> const& e, Permutation const& s, int n)
{
    std::vector<long> out(n, 0);
    if (e.empty())
        return out;
    for (int t = 0; t < n; ++t)
        out[s[t]] += e[t];
    return out;
}

struct Term {
    std::vector<long> a, b;
    std::optional<Rat> exact_a, exact_b;
};

DyadicInterval monomial(std::vector<long> const& e, std::vector<DyadicInterval> const& x,
                        std::vector<DyadicInterval> const& inv, long bits,
                        std::map<std::pair<int, long>, DyadicInterval>& cache)
{
    DyadicInterval acc(Rat(1));
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        auto key = std::make_pair(static_cast<int>(i), e[i]);
        auto it = cache.find(key);
        if (it == cache.end()) {
            DyadicInterval const& base = e[i] > 0 ? x[i] : inv[i];
            unsigned long const n = static_cast<unsigned long>(e[i] > 0 ? e[i] : -e[i]);
            it = cache.emplace(key, pow_rounded(base, n, bits)).first;
        }
        acc = mul_rounded(acc, it->second, bits);
    }
    return acc;
}

} // namespace

NormResult certified_symmetric_product(SymmetricProduct const& pr, NormOptions const& opt)
{
    int const n = pr.positions;
    if (static_cast<int>(pr.exp_a.size()) != n || (!pr.exp_b.empty() && static_cast<int>(pr.exp_b.size()) != n))
        raise(ErrorCode::InvalidArgument, "exponent vector length does not match the number of positions");

    std::vector<Term> terms;
    bool all_exact = true;
    Rat exact_product = 1;
    for (auto const& s : pr.group) {
        Term t;
        t.a = permuted(pr.exp_a, s, n);
        t.b = permuted(pr.exp_b, s, n);
        if (pr.exact) {
            t.exact_a = pr.exact(t.a);
            t.exact_b = pr.exact(t.b);
        }
        if (t.exact_a && t.exact_b) {
            Rat const diff = *t.exact_a - *t.exact_b;
            if (diff == 0) {
                NormResult r;
                r.status = NormStatus::Zero;
                r.reason = "a factor vanishes exactly";
                return r;
            }
            exact_product *= diff;
        } else {
            all_exact = false;
        }
        terms.push_back(std::move(t));
    }
    if (all_exact) {
        if (exact_product.get_den() != 1)
            raise(ErrorCode::Inconsistent, "exact symmetric product is not an integer");
        NormResult r;
        r.status = NormStatus::Certified;
        r.cert = {exact_product.get_num(), Rat(0), 0};
        return r;
    }

    NormResult r;
    for (long bits = opt.start_bits; bits <= opt.cap_bits; bits *= 2) {
        r.bits = bits;
        /* headroom for the cancellation inside each factor */
        long const work = bits + 16;
        std::vector<DyadicInterval> x, inv;
        pr.values(work, x, inv);
        std::map<std::pair<int, long>, DyadicInterval> cache;
        DyadicInterval prod(Rat(1));
        for (auto const& t : terms) {
            DyadicInterval const A = t.exact_a ? DyadicInterval(*t.exact_a) : monomial(t.a, x, inv, work, cache);
            DyadicInterval const B = t.exact_b ? DyadicInterval(*t.exact_b) : monomial(t.b, x, inv, work, cache);
            prod = mul_rounded(prod, A - B, work);
        }
        if (prod.width() >= Rat(1, 2) || prod.contains_zero())
            continue;
        Int const lo = ceil_rat(prod.lo()), hi = floor_rat(prod.hi());
        if (lo == hi) {
            r.status = NormStatus::Certified;
            r.cert = {lo, prod.width(), bits};
            return r;
        }
        if (lo > hi) {
            r.status = NormStatus::Indeterminate;
            r.reason = "enclosure contains no integer; the symmetrization group does not preserve the product";
            return r;
        }
    }
    r.status = NormStatus::Indeterminate;
    r.reason = "enclosure still meets zero at " + std::to_string(opt.cap_bits) + " bits";
    return r;
}

namespace {

SymmetricProduct field_problem(FieldElem const& eps, std::vector<long> const& a, std::vector<long> const& b)
{
    Field const& field = eps.field();
    int const d = field.degree();
    Rat const n = norm(eps);
    if (n != 1 && n != -1)
        raise(ErrorCode::InvalidArgument, "eps is not a unit");
    SymmetricProduct pr;
    pr.positions = d;
    pr.group = field.symmetrization_group();
    pr.exp_a = a;
    pr.exp_b = b;
    FieldElem const inv = eps.inverse();
    pr.values = [eps, inv, d](long bits, std::vector<DyadicInterval>& x, std::vector<DyadicInterval>& xi) {
        x.clear();
        xi.clear();
        for (int i = 0; i < d; ++i) {
            x.push_back(embed(eps, i, bits));
            xi.push_back(embed(inv, i, bits));
        }
    };
    bool const rational = eps.is_rational();
    Rat const q = rational ? eps.rational_value() : Rat(0);
    pr.exact = [rational, q, n](std::vector<long> const& e) -> std::optional<Rat> {
        bool constant = true, zero = true;
        long sum = 0;
        for (long v : e) {
            constant = constant && v == e[0];
            zero = zero && v == 0;
            sum += v;
        }
        if (zero)
            return Rat(1);
        if (rational)
            return rpow(q, sum);
        if (constant)
            return rpow(n, e[0]);
        return std::nullopt;
    };
    return pr;
}

} // namespace

NormResult symmetrized_norm(FieldElem const& eps, std::vector<long> const& e, NormOptions const& opt)
{
    if (static_cast<int>(e.size()) != eps.field().degree())
        raise(ErrorCode::InvalidArgument, "exponent vector must have length d");
    return certified_symmetric_product(field_problem(eps, e, {}), opt);
}

NormResult symmetrized_difference_norm(FieldElem const& eps, std::vector<long> const& a, std::vector<long> const& b,
                                       NormOptions const& opt)
{
    int const d = eps.field().degree();
    if (static_cast<int>(a.size()) != d || static_cast<int>(b.size()) != d)
        raise(ErrorCode::InvalidArgument, "exponent vectors must have length d");
    return certified_symmetric_product(field_problem(eps, a, b), opt);
}

} // namespace hmfcert::nfield
