#include "hmfcert/config.hpp"
#include "hmfcert/error.hpp"

#include <fstream>
#include <set>

namespace hmfcert::config {

namespace {

[[noreturn]] void bad(std::string const& where, std::string const& what)
{
    raise(ErrorCode::ConfigError, where + ": " + what);
}

void only_keys(json const& j, std::string const& where, std::set<std::string> const& allowed)
{
    if (!j.is_object())
        bad(where, "expected an object");
    for (auto const& [key, _] : j.items())
        if (!allowed.count(key))
            bad(where, "unknown key \"" + key + "\"");
}

json const& require(json const& j, std::string const& key, std::string const& where)
{
    if (!j.contains(key))
        bad(where, "missing key \"" + key + "\"");
    return j.at(key);
}

json const& require_array(json const& j, std::string const& where)
{
    if (!j.is_array())
        bad(where, "expected an array");
    return j;
}

long json_long(json const& j, std::string const& where)
{
    if (!j.is_number_integer())
        bad(where, "expected an integer");
    return j.get<long>();
}

ElemCoeffs parse_unit_part(json const& j, std::string const& where)
{
    return json_elem(j, where);
}

} // namespace

Int json_int(json const& j, std::string const& where)
{
    if (j.is_number_integer())
        return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Rat const q = json_rat(j, where);
        if (q.get_den() != 1)
            bad(where, "expected an integer");
        return q.get_num();
    }
    bad(where, "expected an integer");
}

Rat json_rat(json const& j, std::string const& where)
{
    if (j.is_number_integer())
        return Rat(Int(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (Error const&) {
            bad(where, "malformed rational \"" + j.get<std::string>() + "\"");
        }
    }
    bad(where, "expected an integer or a rational string");
}

ElemCoeffs json_elem(json const& j, std::string const& where)
{
    require_array(j, where);
    ElemCoeffs c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(json_rat(j[i], where + "[" + std::to_string(i) + "]"));
    return c;
}

Config parse_config(json const& j)
{
    Config c;
    only_keys(j, "config", {"field", "weight", "level", "criteria", "output"});

    json const& f = require(j, "field", "config");
    only_keys(f, "field", {"min_poly", "galois", "units"});
    for (auto const& x : require_array(require(f, "min_poly", "field"), "field.min_poly"))
        c.min_poly.push_back(json_int(x, "field.min_poly"));
    if (f.contains("galois")) {
        std::vector<nfield::Permutation> gens;
        for (auto const& g : require_array(f.at("galois"), "field.galois")) {
            nfield::Permutation p;
            for (auto const& x : require_array(g, "field.galois"))
                p.push_back(static_cast<int>(json_long(x, "field.galois")));
            gens.push_back(p);
        }
        c.galois = gens;
    }
    if (f.contains("units"))
        for (auto const& u : require_array(f.at("units"), "field.units"))
            c.units.push_back(json_elem(u, "field.units"));

    json const& w = require(j, "weight", "config");
    only_keys(w, "weight", {"k"});
    for (auto const& x : require_array(require(w, "k", "weight"), "weight.k"))
        c.k.push_back(json_long(x, "weight.k"));

    if (j.contains("level")) {
        json const& l = j.at("level");
        only_keys(l, "level", {"Delta", "h_F"});
        if (l.contains("Delta"))
            c.Delta = json_int(l.at("Delta"), "level.Delta");
        if (l.contains("h_F"))
            c.h_F = json_int(l.at("h_F"), "level.h_F");
    }

    if (j.contains("criteria")) {
        json const& cr = j.at("criteria");
        only_keys(cr, "criteria", {"quadratic_extensions", "fibers"});
        if (cr.contains("quadratic_extensions"))
            for (auto const& e : require_array(cr.at("quadratic_extensions"), "criteria.quadratic_extensions")) {
                only_keys(e, "quadratic_extension", {"delta", "units"});
                ExtensionSpec spec;
                spec.delta = json_elem(require(e, "delta", "quadratic_extension"), "quadratic_extension.delta");
                if (e.contains("units"))
                    for (auto const& u : require_array(e.at("units"), "quadratic_extension.units")) {
                        only_keys(u, "quadratic_extension.unit", {"a", "b"});
                        spec.units.emplace_back(parse_unit_part(require(u, "a", "unit"), "unit.a"),
                                                parse_unit_part(require(u, "b", "unit"), "unit.b"));
                    }
                c.quadratic_extensions.push_back(std::move(spec));
            }
        if (cr.contains("fibers"))
            for (auto const& part : require_array(cr.at("fibers"), "criteria.fibers")) {
                std::vector<std::vector<int>> blocks;
                for (auto const& b : require_array(part, "criteria.fibers")) {
                    std::vector<int> block;
                    for (auto const& x : require_array(b, "criteria.fibers"))
                        block.push_back(static_cast<int>(json_long(x, "criteria.fibers")));
                    blocks.push_back(block);
                }
                c.fibers.push_back(blocks);
            }
    }

    if (j.contains("output")) {
        json const& o = j.at("output");
        only_keys(o, "output", {"format", "precision_cap"});
        if (o.contains("format")) {
            if (!o.at("format").is_string())
                bad("output.format", "expected a string");
            c.format = o.at("format").get<std::string>();
            if (c.format != "text" && c.format != "json")
                bad("output.format", "expected text or json");
        }
        if (o.contains("precision_cap")) {
            c.precision_cap = json_long(o.at("precision_cap"), "output.precision_cap");
            if (c.precision_cap < 64)
                bad("output.precision_cap", "must be >= 64");
        }
    }
    return c;
}

json read_json_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        raise(ErrorCode::ConfigError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (json::parse_error const& e) {
        raise(ErrorCode::ConfigError, path + ": " + e.what());
    }
}

Config load_config(std::string const& path)
{
    return parse_config(read_json_file(path));
}

criteria::CertificationInputs to_inputs(Config const& c, std::uint64_t seed)
{
    nfield::Field const F = nfield::Field::make(c.min_poly, c.galois);
    criteria::CertificationInputs in(F, weights::make_weight(c.k));
    if (static_cast<int>(c.k.size()) != F.degree())
        raise(ErrorCode::InvalidArgument, "weight length differs from the field degree");
    if (c.Delta < 1)
        raise(ErrorCode::InvalidArgument, "Delta must be positive");
    in.Delta = c.Delta;
    in.h_F = c.h_F;
    for (auto const& u : c.units)
        in.units.emplace_back(F, u);
    for (auto const& e : c.quadratic_extensions) {
        criteria::QuadraticExtension q{nfield::FieldElem(F, e.delta), {}};
        for (auto const& [a, b] : e.units)
            q.units.emplace_back(nfield::FieldElem(F, a), nfield::FieldElem(F, b));
        in.quadratic_extensions.push_back(std::move(q));
    }
    in.fibers = c.fibers;
    in.norm.cap_bits = c.precision_cap;
    in.seed = seed;
    return in;
}

} // namespace hmfcert::config
