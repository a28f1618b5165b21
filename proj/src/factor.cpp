#include "hmfcert/factor.hpp"
#include "hmfcert/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace hmfcert {

namespace {

constexpr long trial_limit = 1000000;

/* Brent's cycle variant; returns a nontrivial divisor or 0 */
Int pollard_brent(Int const& n, std::mt19937_64& rng, long max_steps)
{
    if (n % 2 == 0)
        return 2;
    std::uniform_int_distribution<unsigned long> dist(1, 1UL << 62);
    for (int attempt = 0; attempt < 20; ++attempt) {
        Int const c = Int(dist(rng)) % n;
        Int y = Int(dist(rng)) % n, x, ys, q = 1, g = 1;
        long const m = 128;
        long steps = 0;
        for (long r = 1; g == 1 && steps < max_steps; r *= 2) {
            x = y;
            for (long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (long k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                steps += m;
            }
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n && g != 1)
            return g;
    }
    return 0;
}

} // namespace

Factorization factor(Int const& n_in, std::uint64_t seed)
{
    if (n_in == 0)
        raise(ErrorCode::InvalidArgument, "cannot factor zero");
    Int n = abs(n_in);
    std::map<Int, int> found;
    for (long p = 2; p <= trial_limit && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++found[Int(p)];
            n /= p;
        }
    }
    Factorization f;
    std::mt19937_64 rng(seed);
    Int const cap = Int(1) << 128;
    std::vector<Int> work;
    if (n > 1)
        work.push_back(n);
    while (!work.empty()) {
        Int m = work.back();
        work.pop_back();
        if (is_prime(m)) {
            ++found[m];
            continue;
        }
        Int const g = m <= cap ? pollard_brent(m, rng, 1L << 22) : Int(0);
        if (g == 0) {
            f.unfactored *= m;
            continue;
        }
        work.push_back(g);
        work.push_back(m / g);
    }
    for (auto const& [p, e] : found)
        f.primes.emplace_back(p, e);
    return f;
}

} // namespace hmfcert
