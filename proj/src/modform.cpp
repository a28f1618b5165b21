#include "hmfcert/modform.hpp"
#include "hmfcert/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hmfcert::modform {

using nfield::FieldElem;
constexpr double pi = std::numbers::pi;

EulerParams ramanujan_sample(double theta, cplx psi0, long q, long k0)
{
    EulerParams e;
    e.q = q;
    e.k0 = k0;
    e.psi0 = psi0;
    e.alpha = std::pow(double(q), (k0 - 1) / 2.0) * std::polar(1.0, theta);
    e.beta = psi0 * std::pow(double(q), double(k0 - 1)) / e.alpha;
    return e;
}

namespace {

void check_nonzero(EulerParams const& e)
{
    if (e.alpha == cplx(0) || e.beta == cplx(0))
        raise(ErrorCode::ZeroEigenvalue, "alpha and beta must be nonzero");
}

std::vector<cplx> poly_mul(std::vector<cplx> const& a, std::vector<cplx> const& b)
{
    std::vector<cplx> c(a.size() + b.size() - 1, cplx(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

struct DRoots {
    cplx num2; // coefficient of -X^2 in the numerator
    cplx den[4];
};

DRoots d_roots(EulerParams const& e, Conjugation c)
{
    cplx const a = e.alpha, b = e.beta;
    cplx const ac = std::conj(a);
    cplx const bc = c == Conjugation::Genuine ? std::conj(b) : b;
    return {a * b * ac * bc, {a * ac, a * bc, b * ac, b * bc}};
}

} // namespace

cplx poly_eval(std::vector<cplx> const& p, cplx x)
{
    cplx acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

cplx RationalFunction::operator()(cplx x) const
{
    return poly_eval(num, x) / poly_eval(den, x);
}

std::vector<cplx> adjoint_local_factor(EulerParams const& e)
{
    check_nonzero(e);
    cplx const r = e.alpha / e.beta;
    return poly_mul(poly_mul({1.0, -r}, {1.0, -1.0}), {1.0, -1.0 / r});
}

RationalFunction d_local_factor(EulerParams const& e, Conjugation c)
{
    check_nonzero(e);
    DRoots const d = d_roots(e, c);
    RationalFunction f;
    f.num = {1.0, 0.0, -d.num2};
    f.den = {1.0};
    for (cplx const& r : d.den)
        f.den = poly_mul(f.den, {1.0, -r});
    return f;
}

cplx d_local_direct(EulerParams const& e, cplx x, Conjugation c)
{
    check_nonzero(e);
    DRoots const d = d_roots(e, c);
    cplx v = 1.0 - d.num2 * x * x;
    for (cplx const& r : d.den)
        v /= 1.0 - r * x;
    return v;
}

double verify_dnaive(EulerParams const& e, std::vector<cplx> const& s_samples, Conjugation c)
{
    check_nonzero(e);
    RationalFunction const D = d_local_factor(e, c);
    std::vector<cplx> const L = adjoint_local_factor(e);
    double const q = double(e.q);
    double worst = 0;
    constexpr double tiny = 1e-14;
    for (cplx const& s : s_samples) {
        cplx const X = std::pow(cplx(q), -s);
        cplx const Y = std::pow(cplx(q), -(s + double(e.k0 - 1)));
        cplx const z2 = 1.0 - X * X;
        cplx const z1 = 1.0 - X;
        cplx const l = poly_eval(L, X);
        cplx const dd = poly_eval(D.den, Y);
        if (std::abs(z2) < tiny || std::abs(z1) < tiny || std::abs(l) < tiny || std::abs(dd) < tiny)
            raise(ErrorCode::SamplePole, "sample meets a zero of a local factor");
        cplx const lhs = poly_eval(D.num, Y) / (dd * z2);
        cplx const rhs = 1.0 / (z1 * l);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return worst;
}

std::vector<Rat> lstar_correction(LocalType t, long q)
{
    if (q < 2)
        raise(ErrorCode::InvalidArgument, "q must be >= 2");
    switch (t) {
    case LocalType::PrincipalMinimal: return {Rat(1), Rat(-1)};
    case LocalType::SpecialMinimal: return {Rat(1), -Rat(1, q)};
    case LocalType::Other: return {Rat(1)};
    }
    return {Rat(1)};
}

cplx gamma(cplx z)
{
    if (z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real())
        raise(ErrorCode::PoleAtS, "Gamma has a pole at a non-positive integer");
    if (z.real() < 0.5)
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    if (z.imag() == 0)
        return std::tgamma(z.real());
    /* shift to Re z >= 15, then Stirling */
    cplx prod = 1.0;
    while (z.real() < 15) {
        prod *= z;
        z += 1.0;
    }
    static double const b[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188, -691.0 / 360360, 1.0 / 156};
    cplx const zi = 1.0 / z, zi2 = zi * zi;
    cplx series = 0, p = zi;
    for (double c : b) {
        series += c * p;
        p *= zi2;
    }
    cplx const lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi) + series;
    return std::exp(lg) / prod;
}

cplx gamma_adjoint(cplx s, std::vector<long> const& k, GammaConvention c)
{
    cplx acc = 1.0;
    double const sign = c == GammaConvention::AsPrinted ? 1.0 : -1.0;
    for (long kt : k) {
        cplx const a = (s + 1.0) / 2.0;
        cplx const b = s + double(kt - 1);
        acc *= std::pow(cplx(pi), -a) * gamma(a) * std::pow(cplx(2 * pi), sign * b) * gamma(b);
    }
    return acc;
}

Rat lambda_star(AdjointInputs const& in)
{
    if (in.Delta < 1 || in.h_F < 1)
        raise(ErrorCode::InvalidArgument, "Delta and h_F must be >= 1");
    if (in.abs_k < 1)
        raise(ErrorCode::InvalidArgument, "|k| must be >= 1");
    return pow2(in.abs_k - 1) * in.petersson / Rat(in.Delta * in.h_F);
}

double lambda_star(long abs_k, double Delta, double h_F, double petersson)
{
    return std::ldexp(1.0, static_cast<int>(abs_k - 1)) * petersson / (Delta * h_F);
}

bool theorem_a_predicate(AdjointInputs const& in, Int const& p)
{
    if (!in.ratio)
        raise(ErrorCode::MissingRatio, "the exact ratio is required");
    if (*in.ratio == 0)
        raise(ErrorCode::InvalidArgument, "ratio must be nonzero");
    return valuation(*in.ratio, p) > 0;
}

/* ------------------------------------------------------------- q-expansions */

QExpansion::QExpansion(nfield::Field field, weights::Weight weight, FieldElem eps0, std::string ideal_label)
    : field_(std::move(field)), weight_(std::move(weight)), eps0_(std::move(eps0)), label_(std::move(ideal_label))
{
    if (field_.degree() != 2 || weight_.d != 2)
        raise(ErrorCode::UnsupportedDegree, "q-expansion bookkeeping is implemented for d = 2");
}

double QExpansion::unit_factor(FieldElem const& eps) const
{
    /* eps^(k + m - t) */
    double logv = 0;
    for (int t = 0; t < 2; ++t) {
        long const e = weight_.k[t] + weight_.m[t] - 1;
        if (e == 0)
            continue;
        logv += double(e) * std::log(nfield::embed(eps, t, 64).to_double());
    }
    return std::exp(logv);
}

void QExpansion::set(FieldElem const& xi, cplx value)
{
    long j = 0;
    FieldElem const x = nfield::orbit_reduce(xi, eps0_, j);
    coeffs_[x.coeffs()] = value * unit_factor(eps0_.pow(2 * j));
}

cplx QExpansion::coefficient_of(FieldElem const& xi) const
{
    long j = 0;
    FieldElem const x = nfield::orbit_reduce(xi, eps0_, j);
    if (auto it = coeffs_.find(x.coeffs()); it != coeffs_.end())
        return it->second / unit_factor(eps0_.pow(2 * j));
    FieldElem const y = nfield::orbit_reduce(eps0_ * xi, eps0_, j);
    if (auto it = coeffs_.find(y.coeffs()); it != coeffs_.end())
        return it->second / unit_factor(eps0_.pow(2 * j + 1));
    raise(ErrorCode::MissingCoefficient, "no stored coefficient in the orbit of xi");
}

cplx QExpansion::c_of_ideal(FieldElem const& xi) const
{
    cplx const a = coefficient_of(xi);
    double logv = 0;
    for (int t = 0; t < 2; ++t)
        if (weight_.m[t] != 0)
            logv += double(weight_.m[t]) * std::log(nfield::embed(xi, t, 64).to_double());
    return std::exp(logv) * a;
}

QExpansion QExpansion::from_json(nlohmann::ordered_json const& j, nfield::Field field, weights::Weight weight,
                                 FieldElem eps0)
{
    QExpansion qe(field, std::move(weight), std::move(eps0), j.value("ideal", std::string("c")));
    for (auto const& entry : j.at("coefficients")) {
        std::vector<Rat> c;
        for (auto const& x : entry.at("xi"))
            c.push_back(parse_rat(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>())));
        qe.set(FieldElem(field, c), cplx(entry.value("re", 0.0), entry.value("im", 0.0)));
    }
    return qe;
}

/* ---------------------------------------------------------------- residues */

Monomial Monomial::operator*(Monomial const& o) const
{
    Monomial r = *this;
    r.coefficient *= o.coefficient;
    for (auto const& [s, e] : o.exponents) {
        r.exponents[s] += e;
        if (r.exponents[s] == 0)
            r.exponents.erase(s);
    }
    return r;
}

Monomial Monomial::inverse() const
{
    Monomial r;
    r.coefficient = 1 / coefficient;
    for (auto const& [s, e] : exponents)
        r.exponents[s] = -e;
    return r;
}

std::string Monomial::to_string() const
{
    std::ostringstream os;
    os << hmfcert::to_string(coefficient);
    for (auto const& [s, e] : exponents)
        os << " " << s << "^" << hmfcert::to_string(e);
    return os.str();
}

namespace {

Monomial sym(std::string const& s, Rat e = 1)
{
    Monomial m;
    m.exponents[s] = e;
    return m;
}

Monomial num(Rat c)
{
    Monomial m;
    m.coefficient = c;
    return m;
}

long abs_weight(weights::Weight const& w)
{
    long s = 0;
    for (long x : w.k)
        s += x;
    return s;
}

} // namespace

Monomial shimura_coefficient(weights::Weight const& w)
{
    long const k = abs_weight(w);
    return num(pow2(w.d - 1)) * num(rpow(Rat(4), k)) * sym("pi", k) * sym("Gamma", -1);
}

ResidueCheck residue_identity(weights::Weight const& w, std::vector<long> const& level_norms, LevelReading reading)
{
    long const k = abs_weight(w);
    long const d = w.d;
    Rat zeta2_local = 1, zeta1_local = 1, mu_level = 1;
    for (long N : level_norms) {
        if (N < 2)
            raise(ErrorCode::InvalidArgument, "prime norms must be >= 2");
        zeta2_local *= 1 - Rat(1, N * N);
        zeta1_local *= 1 - Rat(1, N);
        mu_level *= reading == LevelReading::AsPrinted ? Rat(1 / Rat(1 + N)) : Rat(1 / (1 + Rat(1, N)));
    }
    Monomial const ff = sym("ff");
    /* volume of the quotient */
    Monomial const mu = num(2) * sym("Nd", Rat(3, 2)) * sym("zeta2") * sym("Nn") *
                        (sym("pi", d) * sym("I") * num(mu_level)).inverse();
    Monomial const res_d = shimura_coefficient(w) * sym("RF") * sym("I") * ff * mu.inverse();
    /* residue of the level-stripped Dedekind zeta */
    Monomial const res_zeta0 = num(pow2(d - 1)) * sym("hF") * sym("RF") * sym("Nd", Rat(-1, 2)) * num(zeta1_local);
    Monomial const delta = sym("Nn") * sym("Nd");

    ResidueCheck rc;
    rc.lhs = sym("zeta2") * num(zeta2_local) * res_d;
    rc.rhs = num(rpow(Rat(4), k)) * sym("pi", k + d) * res_zeta0 * ff *
             (num(2) * delta * sym("hF") * sym("Gamma")).inverse();
    rc.ratio = rc.lhs * rc.rhs.inverse();
    rc.pi_matches = rc.ratio.exponents.count("pi") == 0;
    rc.two_matches = rc.ratio.coefficient == 1;
    rc.residual = rc.ratio.exponents;
    rc.residual.erase("pi");
    return rc;
}

} // namespace hmfcert::modform
