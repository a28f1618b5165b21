#pragma once

#include "hmfcert/nfield.hpp"
#include "hmfcert/symnorm.hpp"
#include "hmfcert/weights.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hmfcert::criteria {

using nfield::FieldElem;
using weights::Subset;

/* K = F(sqrt(delta)); a unit of K is a + b sqrt(delta) given as (a, b) */
struct QuadraticExtension {
    FieldElem delta;
    std::vector<std::pair<FieldElem, FieldElem>> units;
};

struct CertificationInputs {
    CertificationInputs(nfield::Field f, weights::Weight w) : field(std::move(f)), weight(std::move(w)) {}

    nfield::Field field;
    weights::Weight weight;
    Int Delta = 1;
    std::optional<Int> h_F;
    std::vector<FieldElem> units; // totally positive, congruent to 1 mod the level by assertion
    std::vector<QuadraticExtension> quadratic_extensions;
    std::vector<std::vector<std::vector<int>>> fibers;
    nfield::NormOptions norm;
    std::uint64_t seed = 0;
};

enum class EntryStatus { Excludes, Degenerate, Indeterminate };
std::string to_string(EntryStatus s);

struct Entry {
    Subset J = 0; // for dihedral criteria: the mask of places using the second lift
    EntryStatus status = EntryStatus::Degenerate;
    int unit_index = -1;
    std::optional<nfield::CertifiedInteger> value;
    std::vector<Int> primes;
    Int unfactored = 1;
    /* Irr only: the difference form evaluated with the same unit */
    std::optional<Int> difference_form;
    std::optional<bool> forms_agree;
    std::string note;
};

struct CriterionReport {
    std::string id;
    /* Certified, Partial, Indeterminate, Unverifiable, Error */
    std::string status;
    std::vector<Entry> entries;
    std::vector<Int> excluded;
    bool excluded_unknown = false; // some certified integer kept an unfactored cofactor
    std::vector<std::string> notes;
};

CriterionReport irr_excluded_primes(CertificationInputs const& in);
CriterionReport dihedral_noncm_excluded(CertificationInputs const& in, std::size_t k_index);

/* d = 2: Nm((eps^m1 - 1)(eps^(k0 - m1 - 1) - 1)) with m1 the nonzero m-entry */
struct FastPath {
    bool zero = false;
    Int value;
    std::vector<Int> primes;
};
FastPath quadratic_fast_path(FieldElem const& eps, weights::Weight const& w, std::uint64_t seed = 0);
/* cyclic cubic with k = (k0, k0 - 2 m1, k0 - 2 m2): the four-factor product
 * with tau given by its permutation of embedding indices */
FastPath cubic_fast_path(FieldElem const& eps, weights::Weight const& w, nfield::Permutation const& tau,
                         nfield::NormOptions const& opt = {}, std::uint64_t seed = 0);

struct CheckResult {
    std::string id;
    std::string status; // Pass, Fail, Skipped, Error
    std::string detail;
};

struct CertificationReport {
    int d = 0;
    std::vector<long> k;
    Int Delta;
    std::vector<Int> delta_primes;
    weights::BoundsReport bounds;
    weights::MWResult mw;
    std::string theorem_a_path;
    CriterionReport irr;
    std::vector<CriterionReport> dihedral;
    std::vector<CheckResult> non_induced;
    long B = 0;              // every prime p >= B outside S passes
    std::vector<Int> S;
    bool S_has_unknown = false;
    std::vector<std::string> assumption_only;
    std::vector<std::string> notes;

    /* true when some criterion is only partially certified */
    bool partial() const;
};

CertificationReport certify(CertificationInputs const& in);

nlohmann::ordered_json to_json(weights::BoundsReport const& b);
nlohmann::ordered_json to_json(CriterionReport const& r, int d);
nlohmann::ordered_json to_json(CertificationReport const& r);
std::string render_text(CertificationReport const& r);

} // namespace hmfcert::criteria
