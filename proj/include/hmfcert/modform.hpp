#pragma once

#include "hmfcert/nfield.hpp"
#include "hmfcert/weights.hpp"

#include <json.hpp>

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hmfcert::modform {

using cplx = std::complex<double>;

struct EulerParams {
    cplx alpha, beta;
    cplx psi0{1.0, 0.0};
    long q = 2;
    long k0 = 2;
};

/* alpha = q^((k0-1)/2) e^(i theta), beta = psi0 q^(k0-1) / alpha */
EulerParams ramanujan_sample(double theta, cplx psi0, long q, long k0);

/* (1 - (alpha/beta) X)(1 - X)(1 - (beta/alpha) X), low degree first */
std::vector<cplx> adjoint_local_factor(EulerParams const& e);

struct RationalFunction {
    std::vector<cplx> num, den;
    cplx operator()(cplx x) const;
};

enum class Conjugation { Genuine, Broken };

/* numerator 1 - a b a' b' X^2, denominator (1 - a a' X)(1 - a b' X)(1 - b a' X)(1 - b b' X),
 * primes denoting complex conjugates (Broken replaces b' by b) */
RationalFunction d_local_factor(EulerParams const& e, Conjugation c = Conjugation::Genuine);
/* the same value computed factor by factor */
cplx d_local_direct(EulerParams const& e, cplx x, Conjugation c = Conjugation::Genuine);

cplx poly_eval(std::vector<cplx> const& p, cplx x);

/* max over samples of the relative error of
 * (1 - q^-2s)^-1 D_v(s + k0 - 1) = (1 - q^-s)^-1 L_v(s) */
double verify_dnaive(EulerParams const& e, std::vector<cplx> const& s_samples, Conjugation c = Conjugation::Genuine);

enum class LocalType { PrincipalMinimal, SpecialMinimal, Other };
/* polynomial in Y = q^-s, low degree first */
std::vector<Rat> lstar_correction(LocalType t, long q);

cplx gamma(cplx z);

enum class GammaConvention { AsPrinted, Standard };
/* prod over places of pi^(-(s+1)/2) Gamma((s+1)/2) (2 pi)^(+-(s+k-1)) Gamma(s+k-1) */
cplx gamma_adjoint(cplx s, std::vector<long> const& k, GammaConvention c);

struct AdjointInputs {
    long abs_k = 0;
    Int Delta = 1;
    Int h_F = 1;
    Rat petersson = 1;
    std::optional<cplx> W_f;
    std::optional<Rat> ratio; // W(f) Lambda* / (Omega+ Omega-)
};

/* 2^(|k| - 1) (f,f) / (Delta h_F) */
Rat lambda_star(AdjointInputs const& in);
double lambda_star(long abs_k, double Delta, double h_F, double petersson);
bool theorem_a_predicate(AdjointInputs const& in, Int const& p);

/* Totally positive xi up to unit squares; d = 2. Coefficients are stored on
 * orbit_reduce representatives and transported by a(eps xi) = eps^(k+m-t) a(xi). */
class QExpansion {
  public:
    QExpansion(nfield::Field field, weights::Weight weight, nfield::FieldElem eps0, std::string ideal_label = "c");

    void set(nfield::FieldElem const& xi, cplx value);
    cplx coefficient_of(nfield::FieldElem const& xi) const;
    /* xi^m a(xi), xi^m = prod embed(xi)^m */
    cplx c_of_ideal(nfield::FieldElem const& xi) const;

    std::string const& ideal_label() const { return label_; }
    std::size_t size() const { return coeffs_.size(); }

    /* {"ideal": "...", "coefficients": [{"xi": ["a", "b"], "re": x, "im": y}, ...]} */
    static QExpansion from_json(nlohmann::ordered_json const& j, nfield::Field field, weights::Weight weight,
                                nfield::FieldElem eps0);

  private:
    double unit_factor(nfield::FieldElem const& eps) const;

    nfield::Field field_;
    weights::Weight weight_;
    nfield::FieldElem eps0_;
    std::string label_;
    std::map<std::vector<Rat>, cplx> coeffs_;
};

/* c * prod symbol^exponent */
struct Monomial {
    Rat coefficient = 1;
    std::map<std::string, Rat> exponents;

    Monomial operator*(Monomial const& o) const;
    Monomial inverse() const;
    std::string to_string() const;
};

/* 2^(d-1) (4 pi)^|k| prod Gamma(k)^-1 */
Monomial shimura_coefficient(weights::Weight const& w);

enum class LevelReading { AsPrinted, ReciprocalNorm };

struct ResidueCheck {
    Monomial lhs, rhs, ratio; // ratio = lhs / rhs
    bool pi_matches = false;  // no pi left in the ratio
    bool two_matches = false; // the rational part of the ratio is 1
    std::map<std::string, Rat> residual;
};

/* zeta^0(2) Res D against the displayed right-hand side, with symbols pi, Nd,
 * Nn, hF, RF, I (the unit index), zeta2 and Gamma; the squarefree level is
 * given by the norms of its primes. */
ResidueCheck residue_identity(weights::Weight const& w, std::vector<long> const& level_norms, LevelReading reading);

} // namespace hmfcert::modform
