#pragma once

#include "hmfcert/criteria.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hmfcert::config {

using json = nlohmann::ordered_json;
using ElemCoeffs = std::vector<Rat>;

struct ExtensionSpec {
    ElemCoeffs delta;
    std::vector<std::pair<ElemCoeffs, ElemCoeffs>> units; // a + b sqrt(delta)
};

struct Config {
    std::vector<Int> min_poly;
    std::optional<std::vector<nfield::Permutation>> galois;
    std::vector<ElemCoeffs> units;
    std::vector<long> k;
    Int Delta = 1;
    std::optional<Int> h_F;
    std::vector<ExtensionSpec> quadratic_extensions;
    std::vector<std::vector<std::vector<int>>> fibers;
    std::string format = "text";
    long precision_cap = 1L << 16;
};

/* integers and rationals may be JSON numbers or strings such as "-3/2" */
Int json_int(json const& j, std::string const& where);
Rat json_rat(json const& j, std::string const& where);
ElemCoeffs json_elem(json const& j, std::string const& where);

/* ConfigError on unknown keys, missing required keys or ill-typed values */
Config parse_config(json const& j);
Config load_config(std::string const& path);
json read_json_file(std::string const& path);

/* builds the field and elements; module preconditions raise their own codes */
criteria::CertificationInputs to_inputs(Config const& c, std::uint64_t seed);

} // namespace hmfcert::config
