#include "hmfcert/criteria.hpp"
#include "hmfcert/error.hpp"
#include "hmfcert/factor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hmfcert::criteria {

using nfield::NormResult;
using nfield::NormStatus;
using nfield::Permutation;
using weights::full_set;
using weights::subset_to_string;
using json = nlohmann::ordered_json;
using hmfcert::to_string;

std::string to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::Excludes: return "Excludes";
    case EntryStatus::Degenerate: return "Degenerate";
    case EntryStatus::Indeterminate: return "Indeterminate";
    }
    return "?";
}

namespace {

void record_value(Entry& e, nfield::CertifiedInteger const& v, std::uint64_t seed)
{
    e.status = EntryStatus::Excludes;
    e.value = v;
    Factorization const f = factor(v.value, seed);
    for (auto const& [p, mult] : f.primes) {
        if (v.value % p != 0)
            raise(ErrorCode::Inconsistent, "reported prime does not divide its integer");
        e.primes.push_back(p);
    }
    e.unfactored = f.unfactored;
}

void finish(CriterionReport& r)
{
    std::set<Int> all;
    bool any_indeterminate = false, any_degenerate = false;
    for (auto const& e : r.entries) {
        if (e.status == EntryStatus::Excludes) {
            all.insert(e.primes.begin(), e.primes.end());
            if (e.unfactored != 1)
                r.excluded_unknown = true;
        }
        any_indeterminate = any_indeterminate || e.status == EntryStatus::Indeterminate;
        any_degenerate = any_degenerate || e.status == EntryStatus::Degenerate;
    }
    r.excluded.assign(all.begin(), all.end());
    if (any_indeterminate)
        r.status = "Indeterminate";
    else if (any_degenerate)
        r.status = "Partial";
    else
        r.status = "Certified";
}

/* unit index and result of the first supplied unit with a nonzero value */
template <class Eval>
void first_nonzero(Entry& entry, std::size_t unit_count, Eval&& eval, std::uint64_t seed)
{
    bool indeterminate = false;
    std::string reason;
    for (std::size_t u = 0; u < unit_count; ++u) {
        NormResult const r = eval(u);
        if (r.status == NormStatus::Zero)
            continue;
        if (r.status == NormStatus::Indeterminate) {
            indeterminate = true;
            reason = r.reason;
            continue;
        }
        entry.unit_index = static_cast<int>(u);
        record_value(entry, r.cert, seed);
        return;
    }
    entry.status = indeterminate ? EntryStatus::Indeterminate : EntryStatus::Degenerate;
    entry.note = indeterminate ? reason : "every supplied unit gives zero";
}

} // namespace

CriterionReport irr_excluded_primes(CertificationInputs const& in)
{
    auto const& w = in.weight;
    CriterionReport rep;
    rep.id = "Irr";
    if (w.d != in.field.degree())
        raise(ErrorCode::InvalidArgument, "weight length differs from the field degree");
    bool const parallel = w.parallel();
    Subset const all = full_set(w.d);
    for (Subset J = 0; J <= all; ++J) {
        if (parallel && (J == 0 || J == all))
            continue;
        Entry entry;
        entry.J = J;
        auto const pj = weights::p_of(w, J);
        first_nonzero(
            entry, in.units.size(), [&](std::size_t u) { return nfield::symmetrized_norm(in.units[u], pj.p, in.norm); },
            in.seed);
        if (entry.unit_index >= 0) {
            std::vector<long> a(w.d, 0), b(w.d, 0);
            for (int t = 0; t < w.d; ++t) {
                if (J >> t & 1U)
                    a[t] = w.k0 - w.m[t] - 1;
                else
                    b[t] = w.m[t];
            }
            NormResult const diff =
                nfield::symmetrized_difference_norm(in.units[entry.unit_index], a, b, in.norm);
            if (diff.status == NormStatus::Certified) {
                entry.difference_form = diff.cert.value;
                entry.forms_agree = abs(diff.cert.value) == abs(entry.value->value);
            } else if (diff.status == NormStatus::Zero) {
                entry.difference_form = Int(0);
                entry.forms_agree = false;
            }
            if (entry.forms_agree && !*entry.forms_agree)
                entry.note = "difference form gives " + to_string(*entry.difference_form) + ", exponent form gives " +
                             to_string(entry.value->value);
        }
        rep.entries.push_back(std::move(entry));
    }
    finish(rep);
    if (in.units.empty()) {
        rep.status = "Unverifiable";
        rep.notes.push_back("no units supplied");
    } else if (parallel && rep.status == "Certified") {
        rep.status = "Partial (parallel weight)";
    }
    if (parallel)
        rep.notes.push_back("parallel weight: only proper nonempty J are evaluated");
    for (auto const& e : rep.entries)
        if (e.forms_agree && !*e.forms_agree) {
            rep.notes.push_back("exclusion uses the exponent form p(J); the difference form disagrees for some J");
            break;
        }
    rep.notes.push_back("units are assumed congruent to 1 modulo the level; this is not verified");
    return rep;
}

namespace {

struct KUnit {
    FieldElem a, b;
};

nfield::SymmetricProduct dihedral_problem(nfield::Field const& F, FieldElem const& delta, KUnit const& u,
                                          std::vector<long> const& exps)
{
    int const d = F.degree();
    FieldElem const nkf = u.a * u.a - u.b * u.b * delta;
    FieldElem const ninv = nkf.inverse();
    KUnit const inv{u.a * ninv, -(u.b * ninv)};

    nfield::SymmetricProduct pr;
    pr.positions = 2 * d;
    pr.exp_a = exps;
    for (auto const& g : F.symmetrization_group()) {
        for (Subset f = 0; f <= full_set(d); ++f) {
            Permutation p(2 * d);
            for (int t = 0; t < d; ++t)
                for (int s = 0; s < 2; ++s)
                    p[2 * t + s] = 2 * g[t] + (s ^ static_cast<int>(f >> t & 1U));
            pr.group.push_back(std::move(p));
        }
    }
    pr.values = [u, inv, delta, d](long bits, std::vector<DyadicInterval>& x, std::vector<DyadicInterval>& xi) {
        x.assign(2 * d, DyadicInterval());
        xi.assign(2 * d, DyadicInterval());
        long const guard = bits + 16;
        for (int t = 0; t < d; ++t) {
            DyadicInterval const sq = sqrt_rounded(nfield::embed(delta, t, 2 * guard), guard);
            auto fill = [&](KUnit const& v, std::vector<DyadicInterval>& out) {
                DyadicInterval const a = nfield::embed(v.a, t, guard);
                DyadicInterval const bs = mul_rounded(nfield::embed(v.b, t, guard), sq, guard);
                out[2 * t] = a + bs;
                out[2 * t + 1] = a - bs;
            };
            fill(u, x);
            fill(inv, xi);
        }
    };
    bool const b_zero = u.b.is_zero();
    Rat const norm_k = nfield::norm(nkf);
    Rat const norm_a = nfield::norm(u.a);
    std::optional<Rat> const nkf_rational = nkf.is_rational() ? std::optional<Rat>(nkf.rational_value()) : std::nullopt;
    std::optional<Rat> const a_rational =
        u.a.is_rational() ? std::optional<Rat>(u.a.rational_value()) : std::nullopt;
    Rat const norm_nkf = nfield::norm(nkf);
    pr.exact = [=](std::vector<long> const& e) -> std::optional<Rat> {
        bool zero = true, constant = true, paired = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            zero = zero && e[i] == 0;
            constant = constant && e[i] == e[0];
        }
        if (zero)
            return Rat(1);
        if (constant)
            return rpow(norm_k, e[0]);
        std::vector<long> v(d), c(d);
        bool v_const = true, c_const = true;
        long v_sum = 0, c_sum = 0;
        for (int t = 0; t < d; ++t) {
            paired = paired && e[2 * t] == e[2 * t + 1];
            v[t] = e[2 * t];
            c[t] = e[2 * t] + e[2 * t + 1];
            v_const = v_const && v[t] == v[0];
            c_const = c_const && c[t] == c[0];
            v_sum += v[t];
            c_sum += c[t];
        }
        if (paired && v_const)
            return rpow(norm_nkf, v[0]);
        if (paired && nkf_rational)
            return rpow(*nkf_rational, v_sum);
        if (b_zero && c_const)
            return rpow(norm_a, c[0]);
        if (b_zero && a_rational)
            return rpow(*a_rational, c_sum);
        return std::nullopt;
    };
    return pr;
}

} // namespace

CriterionReport dihedral_noncm_excluded(CertificationInputs const& in, std::size_t k_index)
{
    if (k_index >= in.quadratic_extensions.size())
        raise(ErrorCode::InvalidArgument, "no such quadratic extension");
    auto const& K = in.quadratic_extensions[k_index];
    auto const& w = in.weight;
    nfield::Field const& F = in.field;
    int const d = F.degree();
    CriterionReport rep;
    rep.id = "Dihedral[" + std::to_string(k_index) + "]";

    bool const pos = nfield::is_totally_positive(K.delta);
    bool const neg = !pos && nfield::is_totally_positive(-K.delta);
    if (neg) {
        rep.status = "Unverifiable";
        rep.notes.push_back("CM extension: requires theta-series congruence data");
        return rep;
    }
    if (!pos) {
        rep.status = "Error";
        rep.notes.push_back("delta is neither totally positive nor totally negative");
        return rep;
    }
    if (K.delta.is_rational()) {
        Rat const q = K.delta.rational_value();
        if (mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t())) {
            rep.status = "Error";
            rep.notes.push_back("delta is a square");
            return rep;
        }
    }
    std::vector<KUnit> units;
    for (auto const& [a, b] : K.units) {
        Rat const n = nfield::norm(a * a - b * b * K.delta);
        if (n != 1 && n != -1) {
            rep.status = "Error";
            rep.notes.push_back("a supplied element of K is not a unit");
            return rep;
        }
        units.push_back({a, b});
    }
    for (Subset s = 0; s <= full_set(d); ++s) {
        std::vector<long> exps(2 * d);
        for (int t = 0; t < d; ++t) {
            int const lift = static_cast<int>(s >> t & 1U);
            exps[2 * t + lift] = w.m[t];
            exps[2 * t + (1 - lift)] = w.k0 - w.m[t] - 1;
        }
        Entry entry;
        entry.J = s;
        first_nonzero(
            entry, units.size(),
            [&](std::size_t u) {
                return nfield::certified_symmetric_product(dihedral_problem(F, K.delta, units[u], exps), in.norm);
            },
            in.seed);
        rep.entries.push_back(std::move(entry));
    }
    finish(rep);
    if (units.empty()) {
        rep.status = "Unverifiable";
        rep.notes.push_back("no units of K supplied");
    }
    if (d > 1 || !F.galois())
        rep.notes.push_back("symmetrized over the full wreath group: the integer is a multiple of the relative norm");
    return rep;
}

FastPath quadratic_fast_path(FieldElem const& eps, weights::Weight const& w, std::uint64_t seed)
{
    if (w.d != 2 || eps.field().degree() != 2)
        raise(ErrorCode::UnsupportedDegree, "quadratic fast path needs d = 2");
    long const m1 = std::max(w.m[0], w.m[1]);
    if (m1 == 0)
        raise(ErrorCode::InvalidArgument, "quadratic fast path needs a nonzero m");
    FieldElem const one = FieldElem::from_rational(eps.field(), 1);
    Rat const n = nfield::norm((eps.pow(m1) - one) * (eps.pow(w.k0 - m1 - 1) - one));
    FastPath fp;
    if (n.get_den() != 1)
        raise(ErrorCode::InvalidArgument, "eps is not integral");
    fp.value = n.get_num();
    fp.zero = fp.value == 0;
    if (!fp.zero)
        for (auto const& [p, e] : factor(fp.value, seed).primes)
            fp.primes.push_back(p);
    return fp;
}

FastPath cubic_fast_path(FieldElem const& eps, weights::Weight const& w, Permutation const& tau,
                         nfield::NormOptions const& opt, std::uint64_t seed)
{
    if (w.d != 3 || eps.field().degree() != 3)
        raise(ErrorCode::UnsupportedDegree, "cubic fast path needs d = 3");
    long const m1 = w.m[1], m2 = w.m[2], k0 = w.k0;
    if (w.m[0] != 0 || m1 > m2 || m2 == 0)
        raise(ErrorCode::InvalidArgument, "cubic fast path needs k = (k0, k0 - 2m1, k0 - 2m2), m1 <= m2 != 0");
    if (tau.size() != 3 || tau[0] == 0)
        raise(ErrorCode::InvalidArgument, "tau must be a nontrivial automorphism");
    /* (tau(eps)^a - eps^b) under embedding 0 is eps_{tau(0)}^a - eps_0^b */
    long const pairs[4][2] = {{m1, -m2}, {m1, m2 + 1 - k0}, {m1 + 1 - k0, m2}, {k0 - m1 - 1, m2 + 1 - k0}};
    FastPath fp;
    fp.value = 1;
    for (auto const& pr : pairs) {
        std::vector<long> a(3, 0), b(3, 0);
        a[tau[0]] = pr[0];
        b[0] = pr[1];
        NormResult const r = nfield::symmetrized_difference_norm(eps, a, b, opt);
        if (r.status == NormStatus::Zero) {
            fp.zero = true;
            fp.value = 0;
            return fp;
        }
        if (r.status == NormStatus::Indeterminate)
            raise(ErrorCode::Indeterminate, r.reason);
        fp.value *= r.cert.value;
    }
    for (auto const& [p, e] : factor(fp.value, seed).primes)
        fp.primes.push_back(p);
    return fp;
}

bool CertificationReport::partial() const
{
    auto incomplete = [](CriterionReport const& r) {
        return r.status == "Indeterminate" || r.status.rfind("Partial", 0) == 0 || r.status == "Unverifiable" ||
               r.status == "Error";
    };
    if (incomplete(irr))
        return true;
    for (auto const& r : dihedral)
        if (r.status != "Unverifiable" && incomplete(r))
            return true;
    return false;
}

CertificationReport certify(CertificationInputs const& in)
{
    CertificationReport rep;
    auto const& w = in.weight;
    rep.d = w.d;
    rep.k = w.k;
    rep.Delta = in.Delta;
    if (in.Delta < 1)
        raise(ErrorCode::InvalidArgument, "Delta must be positive");
    {
        Factorization const f = factor(in.Delta, in.seed);
        for (auto const& [p, e] : f.primes)
            rep.delta_primes.push_back(p);
        if (!f.complete())
            rep.notes.push_back("Delta has an unfactored cofactor " + to_string(f.unfactored));
    }
    rep.bounds = weights::prime_bounds(w);
    rep.mw = weights::mw_check(w);
    rep.theorem_a_path = rep.mw.holds ? "hypothesis (MW) holds" : "hypothesis (MW) fails";

    try {
        rep.irr = irr_excluded_primes(in);
    } catch (Error const& e) {
        rep.irr.id = "Irr";
        rep.irr.status = "Error";
        rep.irr.notes.push_back(e.what());
    }
    for (std::size_t i = 0; i < in.quadratic_extensions.size(); ++i) {
        try {
            rep.dihedral.push_back(dihedral_noncm_excluded(in, i));
        } catch (Error const& e) {
            CriterionReport r;
            r.id = "Dihedral[" + std::to_string(i) + "]";
            r.status = "Error";
            r.notes.push_back(e.what());
            rep.dihedral.push_back(std::move(r));
        }
    }
    for (std::size_t i = 0; i < in.fibers.size(); ++i) {
        CheckResult c{"non-induced[" + std::to_string(i) + "]", "", ""};
        try {
            bool const ok = weights::non_induced_check(w, in.fibers[i]);
            c.status = ok ? "Pass" : "Fail";
            c.detail = ok ? "k is not constant on every fiber" : "k is constant on every fiber";
        } catch (Error const& e) {
            c.status = "Error";
            c.detail = e.what();
        }
        rep.non_induced.push_back(c);
    }
    if (in.fibers.empty())
        rep.notes.push_back("no subfield fibers supplied; the non-induced condition is not checked");

    rep.B = std::max({rep.bounds.admissible, rep.bounds.exceptional.smallest_prime, 5L});
    std::set<Int> S(rep.delta_primes.begin(), rep.delta_primes.end());
    S.insert(Int(2));
    S.insert(Int(3));
    for (long p : rep.bounds.two_k_minus_one)
        S.insert(Int(p));
    for (long p : rep.bounds.pair_sums_minus_one)
        S.insert(Int(p));
    S.insert(rep.irr.excluded.begin(), rep.irr.excluded.end());
    rep.S_has_unknown = rep.irr.excluded_unknown;
    for (auto const& r : rep.dihedral) {
        S.insert(r.excluded.begin(), r.excluded.end());
        rep.S_has_unknown = rep.S_has_unknown || r.excluded_unknown;
    }
    rep.S.assign(S.begin(), S.end());

    rep.assumption_only.push_back("(LI): large image of the residual representation");
    rep.assumption_only.push_back("CM quadratic extensions: theta-series congruence condition");
    rep.assumption_only.push_back("supplied units are congruent to 1 modulo the level");
    if (in.quadratic_extensions.empty())
        rep.assumption_only.push_back("dihedral image: no quadratic extensions supplied");
    return rep;
}

/* ----------------------------------------------------------------- output */

namespace {

json ints(std::vector<Int> const& v)
{
    json a = json::array();
    for (auto const& x : v)
        a.push_back(to_string(x));
    return a;
}

json bound_json(weights::Bound const& b)
{
    return json{{"label", b.label}, {"condition", b.condition}, {"smallest_prime", b.smallest_prime}};
}

} // namespace

json to_json(weights::BoundsReport const& b)
{
    json bounds;
    bounds["sigma"] = b.sigma;
    bounds["II"] = bound_json(b.large_prime);
    bounds["theorem_a"] = bound_json(b.theorem_a);
    bounds["exceptional"] = bound_json(b.exceptional);
    bounds["above_k0"] = bound_json(b.above_k0);
    if (b.corollary)
        bounds["corollary_bound"] = bound_json(*b.corollary);
    if (b.theorem)
        bounds["theorem_bound"] = bound_json(*b.theorem);
    bounds["admissible"] = b.admissible;
    return bounds;
}

json to_json(CriterionReport const& r, int d)
{
    json j;
    j["id"] = r.id;
    j["status"] = r.status;
    json entries = json::array();
    for (auto const& e : r.entries) {
        json x;
        x["J"] = subset_to_string(e.J, d);
        x["status"] = to_string(e.status);
        x["unit"] = e.unit_index >= 0 ? json(e.unit_index) : json(nullptr);
        if (e.value)
            x["value"] = json{{"integer", to_string(e.value->value)},
                              {"final_width", to_string(e.value->final_width)},
                              {"bits", e.value->bits}};
        else
            x["value"] = nullptr;
        x["primes"] = ints(e.primes);
        if (e.unfactored != 1)
            x["unfactored"] = to_string(e.unfactored);
        if (e.difference_form)
            x["difference_form"] = to_string(*e.difference_form);
        if (e.forms_agree)
            x["forms_agree"] = *e.forms_agree;
        if (!e.note.empty())
            x["note"] = e.note;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    j["excluded"] = ints(r.excluded);
    j["excluded_unknown"] = r.excluded_unknown;
    j["notes"] = r.notes;
    return j;
}

json to_json(CertificationReport const& r)
{
    json j;
    j["report"] = "certification";
    j["degree"] = r.d;
    j["k"] = r.k;
    j["Delta"] = to_string(r.Delta);
    json crit;
    crit["I"] = json{{"description", "p does not divide 6 Delta"}, {"excluded", ints(r.delta_primes)}};
    crit["bounds"] = to_json(r.bounds);
    crit["MW"] = json{{"holds", r.mw.holds},
                      {"witness", r.mw.witness ? json(subset_to_string(*r.mw.witness, r.d)) : json(nullptr)},
                      {"theorem_a_path", r.theorem_a_path}};
    crit["Irr"] = to_json(r.irr, r.d);
    json dih = json::array();
    for (auto const& x : r.dihedral)
        dih.push_back(to_json(x, r.d));
    crit["dihedral"] = std::move(dih);
    crit["special_sets"] = json{{"2k-1", r.bounds.two_k_minus_one}, {"k+k'-1", r.bounds.pair_sums_minus_one}};
    json ni = json::array();
    for (auto const& c : r.non_induced)
        ni.push_back(json{{"id", c.id}, {"status", c.status}, {"detail", c.detail}});
    crit["non_induced"] = std::move(ni);
    j["criteria"] = std::move(crit);
    j["B"] = r.B;
    j["S"] = ints(r.S);
    j["S_has_unknown"] = r.S_has_unknown;
    j["statement"] = "every prime p >= " + std::to_string(r.B) +
                     " with p not in S passes all machine-checkable hypotheses";
    j["assumption_only"] = r.assumption_only;
    j["partial"] = r.partial();
    j["notes"] = r.notes;
    return j;
}

namespace {

std::string join(std::vector<Int> const& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + "}";
}

void render_criterion(std::ostream& os, CriterionReport const& r, int d)
{
    os << r.id << ": " << r.status << ", excluded " << join(r.excluded) << (r.excluded_unknown ? " + unknown" : "")
       << "\n";
    for (auto const& e : r.entries) {
        os << "  " << subset_to_string(e.J, d) << "  " << to_string(e.status);
        if (e.value)
            os << "  N = " << to_string(e.value->value) << "  primes " << join(e.primes);
        if (e.difference_form)
            os << "  difference form " << to_string(*e.difference_form);
        os << "\n";
    }
    for (auto const& n : r.notes)
        os << "  note: " << n << "\n";
}

} // namespace

std::string render_text(CertificationReport const& r)
{
    std::ostringstream os;
    os << "k = (";
    for (std::size_t i = 0; i < r.k.size(); ++i)
        os << (i ? "," : "") << r.k[i];
    os << "), Delta = " << to_string(r.Delta) << "\n";
    os << "(I) primes of Delta: " << join(r.delta_primes) << "\n";
    auto const& b = r.bounds;
    os << "(II) " << b.large_prime.condition << ": p >= " << b.large_prime.smallest_prime << "\n";
    os << "Theorem A " << b.theorem_a.condition << ": p >= " << b.theorem_a.smallest_prime << "\n";
    os << "exceptional " << b.exceptional.condition << ": p >= " << b.exceptional.smallest_prime << "\n";
    if (b.corollary)
        os << "corollary bound " << b.corollary->condition << ": p >= " << b.corollary->smallest_prime << "\n";
    if (b.theorem)
        os << "theorem bound " << b.theorem->condition << ": p >= " << b.theorem->smallest_prime << "\n";
    os << "(MW): " << r.theorem_a_path << "\n";
    render_criterion(os, r.irr, r.d);
    for (auto const& x : r.dihedral)
        render_criterion(os, x, r.d);
    for (auto const& c : r.non_induced)
        os << c.id << ": " << c.status << " (" << c.detail << ")\n";
    os << "B = " << r.B << ", S = " << join(r.S) << (r.S_has_unknown ? " + unknown" : "") << "\n";
    os << "every prime p >= " << r.B << " with p not in S passes all machine-checkable hypotheses\n";
    os << "assumption-only:\n";
    for (auto const& a : r.assumption_only)
        os << "  " << a << "\n";
    for (auto const& n : r.notes)
        os << "note: " << n << "\n";
    return os.str();
}

} // namespace hmfcert::criteria
