#include "hmfcert/weights.hpp"
#include "hmfcert/arith.hpp"
#include "hmfcert/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hmfcert::weights {

std::vector<int> subset_indices(Subset J, int d)
{
    std::vector<int> out;
    for (int t = 0; t < d; ++t)
        if (J >> t & 1U)
            out.push_back(t);
    return out;
}

std::string subset_to_string(Subset J, int d)
{
    std::string s = "{";
    bool first = true;
    for (int t : subset_indices(J, d)) {
        if (!first)
            s += ",";
        s += std::to_string(t);
        first = false;
    }
    return s + "}";
}

bool Weight::parallel() const
{
    return std::all_of(k.begin(), k.end(), [&](long x) { return x == k0; });
}

Weight make_weight(std::vector<long> const& k)
{
    if (k.empty())
        raise(ErrorCode::InvalidArgument, "weight vector is empty");
    if (k.size() > 20)
        raise(ErrorCode::SizeOverflow, "weight vectors are limited to 20 places");
    for (long x : k)
        if (x < 2)
            raise(ErrorCode::WeightTooSmall, "every k_tau must be >= 2");
    Weight w;
    w.k = k;
    w.d = static_cast<int>(k.size());
    w.k0 = *std::max_element(k.begin(), k.end());
    for (long x : k) {
        if ((w.k0 - x) % 2 != 0)
            raise(ErrorCode::ParityMismatch, "all k_tau must have the same parity");
        w.n.push_back(x - 2);
        w.m.push_back((w.k0 - x) / 2);
    }
    return w;
}

PJ p_of(Weight const& w, Subset J)
{
    PJ r;
    for (int t = 0; t < w.d; ++t) {
        long const v = (J >> t & 1U) ? w.k0 - w.m[t] - 1 : w.m[t];
        r.p.push_back(v);
        r.abs += v;
    }
    return r;
}

std::vector<long> HodgeMultiset::sorted() const
{
    std::vector<long> s = by_subset;
    std::sort(s.begin(), s.end());
    return s;
}

HodgeMultiset hodge_multiset(Weight const& w)
{
    HodgeMultiset h;
    h.motivic_weight = w.d * (w.k0 - 1);
    for (Subset J = 0; J <= full_set(w.d); ++J)
        h.by_subset.push_back(p_of(w, J).abs);
    return h;
}

MWResult mw_check(Weight const& w)
{
    MWResult r;
    long const mot = w.d * (w.k0 - 1);
    if (mot % 2 != 0) {
        r.holds = true;
        return r;
    }
    auto const h = hodge_multiset(w);
    for (Subset J = 0; J < h.by_subset.size(); ++J) {
        if (2 * h.by_subset[J] == mot) {
            r.witness = J;
            return r;
        }
    }
    r.holds = true;
    return r;
}

namespace {

long smallest_prime(std::function<bool(long)> const& ok)
{
    for (long p = 2;; p = next_prime(p))
        if (ok(p))
            return p;
}

std::vector<long> primes_of(std::set<long> const& s)
{
    std::vector<long> out;
    for (long x : s)
        if (is_prime(std::int64_t(x)))
            out.push_back(x);
    return out;
}

} // namespace

BoundsReport prime_bounds(Weight const& w)
{
    BoundsReport b;
    for (long x : w.k)
        b.sigma += x - 1;
    {
        auto const h = hodge_multiset(w).sorted();
        if (h.back() - h.front() != b.sigma)
            raise(ErrorCode::Inconsistent, "Hodge spread differs from sum of (k - 1)");
    }
    long const d = w.d, s = b.sigma;
    long const c = std::max(d, 5L);
    b.large_prime = {"(II)", "p - 1 > " + std::to_string(s), smallest_prime([&](long p) { return p - 1 > s; })};
    b.theorem_a = {"Theorem A", std::to_string(d) + "(p - 1) > " + std::to_string(c * s),
                   smallest_prime([&](long p) { return d * (p - 1) > c * s; })};
    b.exceptional = {"exceptional image", std::to_string(d) + "(p - 1) > " + std::to_string(5 * s),
                     smallest_prime([&](long p) { return d * (p - 1) > 5 * s; })};
    b.above_k0 = {"p > k0", "p > " + std::to_string(w.k0), smallest_prime([&](long p) { return p > w.k0; })};
    if (d == 2) {
        long const m1 = std::max(w.m[0], w.m[1]);
        long const e = w.k0 - m1 - 1;
        b.corollary = Bound{"corollary bound", "p - 1 > " + std::to_string(4 * e),
                            smallest_prime([&](long p) { return p - 1 > 4 * e; })};
        b.theorem = Bound{"theorem bound", "p - 1 > " + std::to_string(5 * e),
                          smallest_prime([&](long p) { return p - 1 > 5 * e; })};
    }
    std::set<long> twok, pairs;
    for (int t = 0; t < w.d; ++t) {
        twok.insert(2 * w.k[t] - 1);
        for (int u = t + 1; u < w.d; ++u)
            pairs.insert(w.k[t] + w.k[u] - 1);
    }
    b.two_k_minus_one = primes_of(twok);
    b.pair_sums_minus_one = primes_of(pairs);
    b.admissible = smallest_prime(
        [&](long p) { return p > 3 && p - 1 > s && d * (p - 1) > c * s && p > w.k0; });
    return b;
}

bool non_induced_check(Weight const& w, std::vector<std::vector<int>> const& fibers)
{
    if (fibers.empty())
        raise(ErrorCode::InvalidPartition, "no blocks");
    std::size_t const size = fibers[0].size();
    if (size <= 1 || w.d % static_cast<int>(size) != 0)
        raise(ErrorCode::InvalidPartition, "block size must exceed 1 and divide d");
    std::vector<int> seen(w.d, 0);
    for (auto const& block : fibers) {
        if (block.size() != size)
            raise(ErrorCode::InvalidPartition, "blocks have different sizes");
        for (int t : block) {
            if (t < 0 || t >= w.d || seen[t]++)
                raise(ErrorCode::InvalidPartition, "blocks must partition the places");
        }
    }
    if (fibers.size() * size != static_cast<std::size_t>(w.d))
        raise(ErrorCode::InvalidPartition, "blocks do not cover every place");
    for (auto const& block : fibers)
        for (int t : block)
            if (w.k[t] != w.k[block[0]])
                return true;
    return false;
}

} // namespace hmfcert::weights
