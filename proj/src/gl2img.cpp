#include "hmfcert/gl2img.hpp"
#include "hmfcert/arith.hpp"
#include "hmfcert/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace hmfcert::gl2img {

Mat2 mat_mul(Fq const& F, Mat2 const& x, Mat2 const& y)
{
    return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
            F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

int mat_det(Fq const& F, Mat2 const& x) { return F.sub(F.mul(x.a, x.d), F.mul(x.b, x.c)); }
int mat_trace(Fq const& F, Mat2 const& x) { return F.add(x.a, x.d); }

Mat2 mat_inverse(Fq const& F, Mat2 const& x)
{
    int const di = F.inv(mat_det(F, x));
    return {F.mul(x.d, di), F.mul(F.neg(x.b), di), F.mul(F.neg(x.c), di), F.mul(x.a, di)};
}

bool is_scalar(Mat2 const& x) { return x.b == 0 && x.c == 0 && x.a == x.d; }

Mat2 projective_normal(Fq const& F, Mat2 const& x)
{
    int const lead = x.a ? x.a : x.b;
    int const s = F.inv(lead);
    return {F.mul(x.a, s), F.mul(x.b, s), F.mul(x.c, s), F.mul(x.d, s)};
}

std::uint32_t encode(Fq const& F, Mat2 const& x)
{
    std::uint32_t const q = static_cast<std::uint32_t>(F.q());
    return ((static_cast<std::uint32_t>(x.d) * q + x.c) * q + x.b) * q + x.a;
}

std::vector<Mat2> closure(FqMatrixGroup const& g, std::size_t cap)
{
    Fq const& F = g.field;
    for (auto const& m : g.generators)
        if (mat_det(F, m) == 0)
            raise(ErrorCode::InvalidArgument, "generator is not invertible");
    std::vector<Mat2> elems{Mat2{}};
    std::unordered_set<std::uint32_t> seen{encode(F, Mat2{})};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (auto const& s : g.generators) {
            Mat2 const x = mat_mul(F, elems[i], s);
            if (seen.insert(encode(F, x)).second) {
                if (elems.size() >= cap)
                    raise(ErrorCode::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
                elems.push_back(x);
            }
        }
    }
    return elems;
}

namespace {

std::size_t algebra_dimension(Fq const& F, std::vector<Mat2> const& elems)
{
    /* F_q-span of the elements as vectors of length 4 */
    std::vector<std::array<int, 4>> basis;
    for (auto const& m : elems) {
        std::array<int, 4> v{m.a, m.b, m.c, m.d};
        for (auto const& b : basis) {
            int piv = 0;
            while (b[piv] == 0)
                ++piv;
            if (v[piv] == 0)
                continue;
            int const f = F.mul(v[piv], F.inv(b[piv]));
            for (int i = 0; i < 4; ++i)
                v[i] = F.sub(v[i], F.mul(f, b[i]));
        }
        int piv = 0;
        while (piv < 4 && v[piv] == 0)
            ++piv;
        if (piv == 4)
            continue;
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), [](auto const& x, auto const& y) {
            auto lead = [](auto const& z) {
                int i = 0;
                while (i < 4 && z[i] == 0)
                    ++i;
                return i;
            };
            return lead(x) < lead(y);
        });
        if (basis.size() == 4)
            break;
    }
    return basis.size();
}

long projective_order_of(Fq const& F, Mat2 const& x)
{
    Mat2 y = x;
    long k = 1;
    while (!is_scalar(y)) {
        y = mat_mul(F, y, x);
        ++k;
    }
    return k;
}

std::map<long, long> const& fixture(ImageType t)
{
    static std::map<long, long> const a4{{1, 1}, {2, 3}, {3, 8}};
    static std::map<long, long> const s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    static std::map<long, long> const a5{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
    return t == ImageType::A4 ? a4 : t == ImageType::S4 ? s4 : a5;
}

int generated_subfield(Fq const& F, std::vector<int> const& values)
{
    for (int s = 1; s <= F.r(); ++s) {
        if (F.r() % s != 0)
            continue;
        if (std::all_of(values.begin(), values.end(), [&](int v) { return F.in_subfield(v, s); })) {
            int q = 1;
            for (int i = 0; i < s; ++i)
                q *= F.p();
            return q;
        }
    }
    return F.q();
}

std::size_t psl2_order(long q) { return static_cast<std::size_t>(q * (q * q - 1) / std::gcd(2L, q - 1)); }
std::size_t pgl2_order(long q) { return static_cast<std::size_t>(q * (q * q - 1)); }

} // namespace

std::string Classification::label() const
{
    switch (type) {
    case ImageType::Reducible: return "Reducible";
    case ImageType::Dihedral: return "Dihedral(" + std::to_string(n) + ")";
    case ImageType::A4: return "A4";
    case ImageType::S4: return "S4";
    case ImageType::A5: return "A5";
    case ImageType::PSL2: return "PSL2(" + std::to_string(q_prime) + ")";
    case ImageType::PGL2: return "PGL2(" + std::to_string(q_prime) + ")";
    case ImageType::LargeIntermediate: return "LargeIntermediate";
    }
    return "?";
}

Classification classify_projective_image(FqMatrixGroup const& g)
{
    Fq const& F = g.field;
    std::vector<Mat2> const elems = closure(g);
    Classification c;
    c.order = elems.size();

    std::unordered_set<std::uint32_t> proj;
    std::vector<Mat2> reps;
    std::vector<int> invariants;
    for (auto const& m : elems) {
        Mat2 const n = projective_normal(F, m);
        if (proj.insert(encode(F, n)).second)
            reps.push_back(n);
        int const t = mat_trace(F, m);
        invariants.push_back(F.mul(F.mul(t, t), F.inv(mat_det(F, m))));
    }
    c.projective_order = reps.size();
    c.q_prime = generated_subfield(F, invariants);
    for (auto const& m : reps)
        ++c.element_orders[projective_order_of(F, m)];

    if (algebra_dimension(F, elems) < 4) {
        c.type = ImageType::Reducible;
        return c;
    }
    long const N = static_cast<long>(c.projective_order);
    long const p = F.p();
    auto dihedral = [&]() {
        if (N % 2 == 0 && N >= 4 && c.element_orders.count(N / 2)) {
            c.type = ImageType::Dihedral;
            c.n = N / 2;
            return true;
        }
        return false;
    };
    auto exceptional = [&]() {
        for (auto t : {ImageType::A4, ImageType::S4, ImageType::A5}) {
            std::size_t const size = t == ImageType::A4 ? 12 : t == ImageType::S4 ? 24 : 60;
            if (c.projective_order == size && c.element_orders == fixture(t)) {
                c.type = t;
                return true;
            }
        }
        return false;
    };
    if (N % p != 0) {
        if (dihedral() || exceptional())
            return c;
        raise(ErrorCode::Inconsistent, "irreducible image of order prime to p outside the Dickson list");
    }
    if (c.projective_order == psl2_order(c.q_prime)) {
        c.type = ImageType::PSL2;
        return c;
    }
    if (c.projective_order == pgl2_order(c.q_prime)) {
        c.type = ImageType::PGL2;
        return c;
    }
    if (dihedral() || exceptional())
        return c;
    c.type = ImageType::LargeIntermediate;
    return c;
}

namespace {

Mat2 commutator(Fq const& F, Mat2 const& x, Mat2 const& y)
{
    return mat_mul(F, mat_mul(F, x, y), mat_mul(F, mat_inverse(F, x), mat_inverse(F, y)));
}

bool over_subfield(Fq const& F, Mat2 const& m, int s)
{
    return F.in_subfield(m.a, s) && F.in_subfield(m.b, s) && F.in_subfield(m.c, s) && F.in_subfield(m.d, s);
}

Mat2 conjugate(Fq const& F, Mat2 const& c, Mat2 const& cinv, Mat2 const& x)
{
    return mat_mul(F, mat_mul(F, c, x), cinv);
}

} // namespace

std::optional<int> li_check(FqMatrixGroup const& g)
{
    Fq const& F = g.field;
    /* derived subgroup: normal closure of commutators of generators */
    FqMatrixGroup derived{F, {}};
    for (auto const& x : g.generators)
        for (auto const& y : g.generators) {
            Mat2 const k = commutator(F, x, y);
            if (!(k == Mat2{}))
                derived.generators.push_back(k);
        }
    std::vector<Mat2> delems = closure(derived);
    for (bool grew = true; grew;) {
        grew = false;
        std::unordered_set<std::uint32_t> in;
        for (auto const& e : delems)
            in.insert(encode(F, e));
        std::vector<Mat2> const gens = derived.generators;
        for (auto const& s : g.generators)
            for (auto const& x : gens) {
                Mat2 const y = conjugate(F, s, mat_inverse(F, s), x);
                if (!in.count(encode(F, y))) {
                    derived.generators.push_back(y);
                    grew = true;
                }
            }
        if (grew)
            delems = closure(derived);
    }

    int sub = 0, qp = 0;
    for (int s = 1; s <= F.r(); ++s) {
        if (F.r() % s != 0)
            continue;
        long q = 1;
        for (int i = 0; i < s; ++i)
            q *= F.p();
        if (delems.size() == static_cast<std::size_t>(q * (q * q - 1))) {
            sub = s;
            qp = static_cast<int>(q);
        }
    }
    if (sub == 0)
        return std::nullopt;
    if (sub == F.r())
        return qp; // SL2(F_q) is the only subgroup of GL2(F_q) of its order
    if (F.q() > 9)
        raise(ErrorCode::CapExceeded, "conjugacy search over GL2 is limited to q <= 9");

    int const q = F.q();
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    Mat2 const C{a, b, c, d};
                    if (mat_det(F, C) == 0 || !(projective_normal(F, C) == C))
                        continue;
                    Mat2 const Ci = mat_inverse(F, C);
                    bool ok = true;
                    for (auto const& x : derived.generators) {
                        Mat2 const y = conjugate(F, C, Ci, x);
                        if (!over_subfield(F, y, sub) || mat_det(F, y) != 1) {
                            ok = false;
                            break;
                        }
                    }
                    for (std::size_t i = 0; ok && i < g.generators.size(); ++i) {
                        Mat2 const y = projective_normal(F, conjugate(F, C, Ci, g.generators[i]));
                        ok = over_subfield(F, y, sub);
                    }
                    if (ok)
                        return qp;
                }
    return std::nullopt;
}

std::vector<long> subset_sums(long a, std::vector<long> const& parts)
{
    std::size_t const d = parts.size();
    std::vector<long> out;
    for (std::size_t J = 0; J < (std::size_t(1) << d); ++J) {
        long s = 0;
        for (std::size_t t = 0; t < d; ++t)
            s += (J >> t & 1U) ? a - parts[t] : parts[t];
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Recovery recover_from_subset_sums(std::vector<long> const& S_in, int d)
{
    if (d < 1 || d > 20 || S_in.size() != (std::size_t(1) << d))
        raise(ErrorCode::Inconsistent, "multiset size is not 2^d");
    std::vector<long> S = S_in;
    std::sort(S.begin(), S.end());
    long const lo = S.front(), hi = S.back();
    if ((lo + hi) % d != 0)
        raise(ErrorCode::Inconsistent, "(min + max) / d is not an integer");
    Recovery r;
    r.a = (lo + hi) / d;

    std::multiset<long> rest;
    for (std::size_t i = 1; i < S.size(); ++i)
        rest.insert(S[i] - lo);
    std::vector<long> sums{0}, gaps;
    while (static_cast<int>(gaps.size()) < d) {
        if (rest.empty())
            raise(ErrorCode::Inconsistent, "ran out of subset sums");
        long const g = *rest.begin();
        if (g <= 0)
            raise(ErrorCode::Inconsistent, "gaps must be positive");
        gaps.push_back(g);
        std::vector<long> added;
        for (long s : sums) {
            auto it = rest.find(s + g);
            if (it == rest.end())
                raise(ErrorCode::Inconsistent, "multiset is not a subset-sum multiset");
            rest.erase(it);
            added.push_back(s + g);
        }
        sums.insert(sums.end(), added.begin(), added.end());
    }
    for (long g : gaps) {
        if ((r.a - g) % 2 != 0)
            raise(ErrorCode::Inconsistent, "parity failure");
        long const part = (r.a - g) / 2;
        if (part < 0 || 2 * part >= r.a)
            raise(ErrorCode::Inconsistent, "part outside [0, a/2)");
        r.parts.push_back(part);
    }
    std::sort(r.parts.begin(), r.parts.end());
    if (subset_sums(r.a, r.parts) != S)
        raise(ErrorCode::Inconsistent, "regenerated subset sums differ");
    return r;
}

long tame_char_order(TameChar const& c)
{
    if (c.p < 2 || c.h < 1 || static_cast<int>(c.e.size()) != c.h)
        raise(ErrorCode::InvalidArgument, "tame character needs p >= 2 and h exponents");
    Int const N = ipow(Int(c.p), static_cast<unsigned long>(c.h)) - 1;
    Int E = 0, pw = 1;
    for (long x : c.e) {
        E += Int(x) * pw;
        pw *= c.p;
    }
    mpz_fdiv_r(E.get_mpz_t(), E.get_mpz_t(), N.get_mpz_t());
    if (E == 0)
        return 0;
    Int const o = N / gcd(E, N);
    return o.get_si();
}

ChainReport exceptional_chain_check(long p_max, int h_max, long k0_max, bool require_p_above_k0)
{
    ChainReport rep;
    for (long p = 2; p <= p_max; p = next_prime(p)) {
        for (int h = 1; h <= h_max; ++h) {
            for (long k0 = 2; k0 <= k0_max; ++k0) {
                if (require_p_above_k0 && p <= k0)
                    continue;
                /* weights of the block: same parity as k0, 2 <= k <= k0, max = k0 */
                std::vector<long> k(h, k0 % 2 == 0 ? 2 : 3);
                for (;;) {
                    bool const has_max = std::find(k.begin(), k.end(), k0) != k.end();
                    if (has_max && std::all_of(k.begin(), k.end(), [](long x) { return x >= 2; })) {
                        long sigma = 0;
                        for (long x : k)
                            sigma += x - 1;
                        for (unsigned signs = 0; signs < (1U << h); ++signs) {
                            TameChar ch{p, h, {}};
                            for (int i = 0; i < h; ++i)
                                ch.e.push_back((signs >> i & 1U) ? -(k[i] - 1) : k[i] - 1);
                            long const o = tame_char_order(ch);
                            ++rep.characters_checked;
                            if (o > 0 && o <= 5 && 5 * sigma < h * (p - 1)) {
                                std::ostringstream os;
                                os << "p=" << p << " h=" << h << " e=(";
                                for (int i = 0; i < h; ++i)
                                    os << (i ? "," : "") << ch.e[i];
                                os << ") order " << o;
                                rep.holds = false;
                                rep.counterexample = os.str();
                                return rep;
                            }
                        }
                    }
                    int i = 0;
                    while (i < h && k[i] >= k0) {
                        k[i] = k0 % 2 == 0 ? 2 : 3;
                        ++i;
                    }
                    if (i == h)
                        break;
                    k[i] += 2;
                }
            }
        }
    }
    return rep;
}

} // namespace hmfcert::gl2img
