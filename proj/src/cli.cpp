#include "hmfcert/cli.hpp"
#include "hmfcert/bgg.hpp"
#include "hmfcert/config.hpp"
#include "hmfcert/criteria.hpp"
#include "hmfcert/error.hpp"
#include "hmfcert/gl2img.hpp"
#include "hmfcert/lattice.hpp"
#include "hmfcert/modform.hpp"
#include "hmfcert/weights.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace hmfcert::cli {

using json = nlohmann::ordered_json;

namespace {

struct Globals {
    std::string format = "text";
    bool format_given = false;
    std::uint64_t seed = 0;
    long precision_cap = 0; // 0: not given
};

struct Output {
    json j;
    std::string text;
    int code = kOk;
};

std::vector<long> parse_longs(std::string const& s, std::string const& what)
{
    std::vector<long> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long x = 0;
        try {
            x = std::stol(item, &pos);
        } catch (std::exception const&) {
            raise(ErrorCode::UsageError, what + ": expected a comma-separated integer list");
        }
        if (pos != item.size())
            raise(ErrorCode::UsageError, what + ": expected a comma-separated integer list");
        v.push_back(x);
    }
    if (v.empty())
        raise(ErrorCode::UsageError, what + ": empty list");
    return v;
}

std::string tuple(std::vector<long> const& v, char open = '(', char close = ')')
{
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + close;
}

json ints(std::vector<Int> const& v)
{
    json a = json::array();
    for (auto const& x : v)
        a.push_back(to_string(x));
    return a;
}

/* ----------------------------------------------------------------- weights */

Output cmd_weights(std::vector<long> const& k)
{
    auto const w = weights::make_weight(k);
    auto const hm = weights::hodge_multiset(w);
    auto const mw = weights::mw_check(w);
    auto const b = weights::prime_bounds(w);
    Output o;
    o.j["report"] = "weights";
    o.j["k"] = w.k;
    o.j["k0"] = w.k0;
    o.j["n"] = w.n;
    o.j["m"] = w.m;
    o.j["parallel"] = w.parallel();
    o.j["hodge_multiset"] = hm.sorted();
    o.j["motivic_weight"] = hm.motivic_weight;
    o.j["MW"] = mw.holds;
    o.j["MW_witness"] = mw.witness ? json(weights::subset_to_string(*mw.witness, w.d)) : json(nullptr);
    o.j["bounds"] = criteria::to_json(b);
    o.j["special_sets"] = json{{"2k-1", b.two_k_minus_one}, {"k+k'-1", b.pair_sums_minus_one}};

    std::ostringstream os;
    os << "k = " << tuple(w.k) << "\n"
       << "k0 = " << w.k0 << "\n"
       << "n = " << tuple(w.n) << "\n"
       << "m = " << tuple(w.m) << "\n"
       << "Hodge multiset = " << tuple(hm.sorted(), '{', '}') << " (weight " << hm.motivic_weight << ")\n"
       << "MW = " << (mw.holds ? "true" : "false");
    if (mw.witness)
        os << " (J = " << weights::subset_to_string(*mw.witness, w.d) << ")";
    os << "\nbounds (sigma = " << b.sigma << "):\n";
    std::vector<weights::Bound> rows{b.large_prime, b.theorem_a, b.exceptional, b.above_k0};
    if (b.corollary)
        rows.push_back(*b.corollary);
    if (b.theorem)
        rows.push_back(*b.theorem);
    std::size_t wl = 0, wc = 0;
    for (auto const& r : rows) {
        wl = std::max(wl, r.label.size());
        wc = std::max(wc, r.condition.size());
    }
    for (auto const& r : rows)
        os << "  " << std::left << std::setw(int(wl)) << r.label << "  " << std::setw(int(wc)) << r.condition
           << "  p >= " << r.smallest_prime << "\n";
    os << "admissible: p >= " << b.admissible << "\n"
       << "primes among 2k-1: " << tuple(b.two_k_minus_one, '{', '}') << "\n"
       << "primes among k+k'-1: " << tuple(b.pair_sums_minus_one, '{', '}') << "\n";
    o.text = os.str();
    return o;
}

/* --------------------------------------------------------------- bgg-table */

Output cmd_bgg(std::vector<long> const& k, std::optional<long> p)
{
    if (p && (*p < 2 || !is_prime(Int(*p))))
        raise(ErrorCode::InvalidArgument, "--p must be prime");
    auto const w = weights::make_weight(k);
    auto const t = bgg::bgg_table(w, p);
    Output o;
    o.j["report"] = "bgg-table";
    o.j["k"] = w.k;
    o.j["d"] = t.d;
    o.j["max_i"] = t.max_i;
    json cells = json::array();
    for (int r = 0; r <= t.d; ++r) {
        json row = json::array();
        for (long i = 0; i <= t.max_i; ++i) {
            json c = json::array();
            for (auto J : t.cells[r][i])
                c.push_back(weights::subset_to_string(J, t.d));
            row.push_back(c);
        }
        cells.push_back(row);
    }
    o.j["cells"] = cells;
    json fil = json::array();
    for (auto const& f : t.fil)
        fil.push_back(f.size());
    o.j["fil_counts"] = fil;
    o.j["prime"] = t.prime ? json(*t.prime) : json(nullptr);
    o.j["kostant_range"] = t.kostant_range ? json(*t.kostant_range) : json(nullptr);
    o.text = bgg::render_text(t);
    return o;
}

/* ---------------------------------------------------------- exclude-primes */

Output cmd_exclude(std::string const& path, Globals& g)
{
    auto const cfg = config::load_config(path);
    if (!g.format_given)
        g.format = cfg.format;
    auto in = config::to_inputs(cfg, g.seed);
    if (g.precision_cap > 0)
        in.norm.cap_bits = g.precision_cap;
    auto const rep = criteria::certify(in);
    Output o;
    o.j = criteria::to_json(rep);
    o.text = criteria::render_text(rep);
    o.code = rep.partial() ? kPartial : kOk;
    return o;
}

/* ------------------------------------------------------- congruence-module */

linalg::IntMatrix int_matrix(json const& j, std::string const& where)
{
    if (!j.is_array() || j.empty())
        raise(ErrorCode::ConfigError, where + ": expected a non-empty list of rows");
    std::vector<std::vector<Int>> rows;
    for (auto const& r : j) {
        if (!r.is_array())
            raise(ErrorCode::ConfigError, where + ": rows must be lists");
        std::vector<Int> row;
        for (auto const& x : r)
            row.push_back(config::json_int(x, where));
        if (!rows.empty() && row.size() != rows[0].size())
            raise(ErrorCode::ConfigError, where + ": ragged matrix");
        rows.push_back(row);
    }
    return linalg::IntMatrix(rows);
}

linalg::RatMatrix rat_matrix(json const& j, std::string const& where)
{
    if (!j.is_array() || j.empty())
        raise(ErrorCode::ConfigError, where + ": expected a non-empty list of rows");
    std::vector<std::vector<Rat>> rows;
    for (auto const& r : j) {
        auto row = config::json_elem(r, where);
        if (!rows.empty() && row.size() != rows[0].size())
            raise(ErrorCode::ConfigError, where + ": ragged matrix");
        rows.push_back(row);
    }
    return linalg::RatMatrix(rows);
}

void only_keys(json const& j, std::set<std::string> const& keys, std::string const& where)
{
    if (!j.is_object())
        raise(ErrorCode::ConfigError, where + ": expected an object");
    for (auto const& [key, _] : j.items())
        if (!keys.count(key))
            raise(ErrorCode::ConfigError, where + ": unknown key \"" + key + "\"");
}

Output cmd_congruence(std::string const& path)
{
    json const in = config::read_json_file(path);
    only_keys(in, {"p", "lattice", "v1", "v2", "operators"}, "congruence-module");
    for (char const* key : {"p", "lattice", "v1", "v2"})
        if (!in.contains(key))
            raise(ErrorCode::ConfigError, std::string("congruence-module: missing key \"") + key + "\"");
    Int const p = config::json_int(in.at("p"), "p");
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, "p must be prime");
    lattice::Lattice const L{int_matrix(in.at("lattice"), "lattice")};
    lattice::Split const s{rat_matrix(in.at("v1"), "v1"), rat_matrix(in.at("v2"), "v2")};
    auto const m = lattice::congruence_module(L, s, p);

    Output o;
    o.j["report"] = "congruence-module";
    o.j["p"] = to_string(p);
    o.j["invariant_factors"] = ints(m.invariant_factors);
    o.j["three_way"] = json::array({ints(m.three_way[0]), ints(m.three_way[1]), ints(m.three_way[2])});
    o.j["order_c0"] = to_string(m.order_c0);
    o.j["index_inner"] = to_string(m.index_inner);
    o.j["index_outer"] = to_string(m.index_outer);

    auto module_string = [](std::vector<Int> const& f) {
        if (f.empty())
            return std::string("0");
        std::string s;
        for (auto const& x : f)
            s += (s.empty() ? "" : " + ") + ("Z/" + to_string(x));
        return s;
    };
    std::ostringstream os;
    os << "p-part of C0: " << module_string(m.invariant_factors) << "\n"
       << "three-way: " << module_string(m.three_way[0]) << " | " << module_string(m.three_way[1]) << " | "
       << module_string(m.three_way[2]) << "\n"
       << "|L^1/L_1| = " << to_string(m.order_c0) << ", [L : L_1 + L_2] = " << to_string(m.index_inner)
       << ", [L^1 + L^2 : L] = " << to_string(m.index_outer) << "\n";

    if (in.contains("operators")) {
        std::vector<linalg::IntMatrix> ops;
        for (auto const& op : in.at("operators"))
            ops.push_back(int_matrix(op, "operators"));
        auto const r = lattice::find_congruences(ops, L, s, p);
        auto sys = [](std::vector<lattice::Eigensystem> const& v) {
            json a = json::array();
            for (auto const& e : v)
                a.push_back(json{{"values", ints(e.values)}, {"dimension", e.dimension}});
            return a;
        };
        json pairs = json::array();
        for (auto const& [a, b] : r.pairs)
            pairs.push_back(json::array({a, b}));
        json loc = json::array();
        for (bool b : r.localized_nonzero)
            loc.push_back(b);
        o.j["congruences"] = json{{"v1_systems", sys(r.v1_systems)},
                                  {"v2_systems", sys(r.v2_systems)},
                                  {"pairs", pairs},
                                  {"localized_nonzero", loc},
                                  {"needs_extension", r.needs_extension},
                                  {"consistent", r.deligne_serre_consistent}};
        auto vals = [](lattice::Eigensystem const& e) {
            std::string s;
            for (auto const& x : e.values)
                s += (s.empty() ? "" : ",") + to_string(x);
            return "(" + s + ")";
        };
        os << "congruent pairs mod " << to_string(p) << ":";
        if (r.pairs.empty())
            os << " none";
        os << "\n";
        for (auto const& [a, b] : r.pairs)
            os << "  " << vals(r.v1_systems[a]) << " ~ " << vals(r.v2_systems[b]) << "\n";
        if (r.needs_extension)
            os << "some eigenvalues are not integers: an extension of scalars is needed\n";
        if (!r.deligne_serre_consistent)
            os << "warning: a localized congruence module is nonzero without a congruent pair\n";
        if (r.needs_extension)
            o.code = kPartial;
    }
    o.text = os.str();
    return o;
}

/* ---------------------------------------------------------- classify-image */

int fq_entry(gl2img::Fq const& F, json const& x)
{
    if (x.is_number_integer())
        return F.from_int(x.get<long>());
    if (x.is_array()) {
        if (static_cast<int>(x.size()) > F.r())
            raise(ErrorCode::ConfigError, "matrix entry has more digits than the extension degree");
        int v = 0, scale = 1;
        for (auto const& digit : x) {
            if (!digit.is_number_integer())
                raise(ErrorCode::ConfigError, "matrix entry digits must be integers");
            v += F.from_int(digit.get<long>()) * scale;
            scale *= F.p();
        }
        return v;
    }
    raise(ErrorCode::ConfigError, "matrix entries must be integers or digit lists");
}

/* "a,b,c,d" with entries either integers or colon-separated digits */
json parse_generator(std::string const& s)
{
    json m = json::array();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find(':') == std::string::npos) {
            m.push_back(parse_longs(item, "--gen")[0]);
            continue;
        }
        json digits = json::array();
        std::stringstream ds(item);
        std::string dg;
        while (std::getline(ds, dg, ':'))
            digits.push_back(parse_longs(dg, "--gen")[0]);
        m.push_back(digits);
    }
    if (m.size() != 4)
        raise(ErrorCode::UsageError, "--gen expects four entries a,b,c,d");
    return m;
}

Output cmd_classify(json const& in)
{
    only_keys(in, {"p", "modulus", "generators"}, "classify-image");
    if (!in.contains("p") || !in.contains("generators"))
        raise(ErrorCode::ConfigError, "classify-image: p and generators are required");
    long const p = in.at("p").get<long>();
    if (p < 2 || !is_prime(Int(p)))
        raise(ErrorCode::InvalidArgument, "p must be prime");
    gl2img::Fq F = gl2img::Fq::make(static_cast<int>(p), 1);
    if (in.contains("modulus")) {
        std::vector<int> mod;
        for (auto const& c : in.at("modulus"))
            mod.push_back(static_cast<int>(c.get<long>()));
        F = gl2img::Fq::with_modulus(static_cast<int>(p), mod);
    }
    gl2img::FqMatrixGroup g{F, {}};
    for (auto const& m : in.at("generators")) {
        std::vector<int> e;
        if (m.is_array() && m.size() == 2 && m[0].is_array() && m[0].size() == 2) {
            for (auto const& row : m)
                for (auto const& x : row)
                    e.push_back(fq_entry(F, x));
        } else if (m.is_array() && m.size() == 4) {
            for (auto const& x : m)
                e.push_back(fq_entry(F, x));
        } else {
            raise(ErrorCode::ConfigError, "a generator is [a,b,c,d] or [[a,b],[c,d]]");
        }
        gl2img::Mat2 const M{e[0], e[1], e[2], e[3]};
        if (gl2img::mat_det(F, M) == 0)
            raise(ErrorCode::InvalidArgument, "generator is not invertible");
        g.generators.push_back(M);
    }
    if (g.generators.empty())
        raise(ErrorCode::InvalidArgument, "at least one generator is required");

    auto const c = gl2img::classify_projective_image(g);
    std::optional<int> li;
    std::string li_note;
    try {
        li = gl2img::li_check(g);
    } catch (Error const& e) {
        if (e.code() != ErrorCode::CapExceeded)
            throw;
        li_note = e.what();
    }
    Output o;
    o.j["report"] = "classify-image";
    o.j["q"] = F.q();
    o.j["image"] = c.label();
    o.j["order"] = c.order;
    o.j["projective_order"] = c.projective_order;
    o.j["q_prime"] = c.q_prime;
    json eo = json::object();
    for (auto const& [ord, count] : c.element_orders)
        eo[std::to_string(ord)] = count;
    o.j["element_orders"] = eo;
    o.j["LI"] = li ? json(*li) : json(nullptr);
    if (!li_note.empty())
        o.j["LI_note"] = li_note;

    std::ostringstream os;
    os << "F_" << F.q() << ": projective image " << c.label() << "\n"
       << "|H| = " << c.order << ", |PH| = " << c.projective_order << "\n"
       << "element orders:";
    for (auto const& [ord, count] : c.element_orders)
        os << " " << ord << "^" << count;
    os << "\nLI: ";
    if (li)
        os << "traps SL2(F_" << *li << ")";
    else if (!li_note.empty())
        os << "undecided (" << li_note << ")";
    else
        os << "no";
    os << "\n";
    o.text = os.str();
    if (!li && !li_note.empty())
        o.code = kPartial;
    return o;
}

/* ------------------------------------------------------------ adjoint-check */

Output cmd_adjoint(std::vector<long> const& qs, std::vector<long> const& k0s, int samples, std::uint64_t seed,
                   std::string const& qexp_path)
{
    using modform::cplx;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> re(0.6, 2.5), im(-6.0, 6.0);
    Output o;
    o.j["report"] = "adjoint-check";
    o.j["samples"] = samples;
    json rows = json::array();
    std::ostringstream os;
    os << std::left << std::setw(4) << "q" << std::setw(4) << "k0" << std::setw(14) << "genuine"
       << "broken\n";
    double worst = 0, control = INFINITY;
    for (long q : qs)
        for (long k0 : k0s) {
            if (q < 2 || k0 < 2)
                raise(ErrorCode::InvalidArgument, "q and k0 must be >= 2");
            double eg = 0, eb = 0;
            for (int i = 0; i < samples; ++i) {
                auto const e = modform::ramanujan_sample(angle(rng), std::polar(1.0, angle(rng)), q, k0);
                std::vector<cplx> const s{cplx(re(rng), im(rng))};
                eg = std::max(eg, modform::verify_dnaive(e, s));
                eb = std::max(eb, modform::verify_dnaive(e, s, modform::Conjugation::Broken));
            }
            worst = std::max(worst, eg);
            control = std::min(control, eb);
            rows.push_back(json{{"q", q}, {"k0", k0}, {"genuine", eg}, {"broken", eb}});
            std::ostringstream g, b;
            g << std::scientific << std::setprecision(2) << eg;
            b << std::scientific << std::setprecision(2) << eb;
            os << std::setw(4) << q << std::setw(4) << k0 << std::setw(14) << g.str() << b.str() << "\n";
        }
    bool const pass = worst < 1e-9 && control > 1e-3;
    o.j["table"] = rows;
    o.j["max_error"] = worst;
    o.j["min_control_error"] = control;
    o.j["pass"] = pass;
    os << "max genuine error " << worst << ", min broken error " << control << ": " << (pass ? "pass" : "FAIL")
       << "\n";

    if (!qexp_path.empty()) {
        json const in = config::read_json_file(qexp_path);
        only_keys(in, {"min_poly", "k", "eps0", "ideal", "coefficients", "query"}, "q-expansion");
        std::vector<Int> f;
        for (auto const& x : in.at("min_poly"))
            f.push_back(config::json_int(x, "min_poly"));
        auto const F = nfield::Field::make(f);
        std::vector<long> k;
        for (auto const& x : in.at("k"))
            k.push_back(x.get<long>());
        nfield::FieldElem const eps0(F, config::json_elem(in.at("eps0"), "eps0"));
        json body{{"ideal", in.value("ideal", std::string("c"))}, {"coefficients", in.at("coefficients")}};
        auto const qe = modform::QExpansion::from_json(body, F, weights::make_weight(k), eps0);
        json values = json::array();
        os << "q-expansion " << qe.ideal_label() << " (" << qe.size() << " orbits):\n";
        for (auto const& xi : in.value("query", json::array())) {
            nfield::FieldElem const x(F, config::json_elem(xi, "query"));
            cplx const c = qe.c_of_ideal(x);
            values.push_back(json{{"xi", xi}, {"re", c.real()}, {"im", c.imag()}});
            os << "  c(" << xi.dump() << ") = " << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag())
               << "i\n";
        }
        o.j["c_of_ideal"] = values;
    }
    o.text = os.str();
    o.code = pass ? kOk : kPartial;
    return o;
}

/* --------------------------------------------------------- recover-weights */

Output cmd_recover(std::vector<long> const& multiset, int d)
{
    auto const r = gl2img::recover_from_subset_sums(multiset, d);
    Output o;
    o.j["report"] = "recover-weights";
    o.j["a"] = r.a;
    o.j["parts"] = r.parts;
    o.text = "a = " + std::to_string(r.a) + "\nparts = " + tuple(r.parts, '{', '}') + "\n";
    return o;
}

void emit(Output const& o, Globals const& g, std::ostream& out)
{
    if (g.format == "json")
        out << o.j.dump(2) << "\n";
    else
        out << o.text;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certification toolkit for Hilbert modular forms", "hmfcert"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    auto* fmt = app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed for all randomness");
    app.add_option("--precision-cap", g.precision_cap, "certification precision cap in bits")
        ->check(CLI::Range(64L, 1L << 24));

    std::string kstr, multiset, config_path, modulus, qs = "2,3,5,7", k0s = "2,3,4,5,6", qexp;
    long prime = 0;
    int d = 0, samples = 200;
    std::vector<std::string> gens;

    auto* w = app.add_subcommand("weights", "weight calculus, Hodge multiset and prime bounds");
    w->add_option("--k", kstr, "weight, comma separated")->required();
    auto* b = app.add_subcommand("bgg-table", "E1 page of the dual BGG spectral sequence");
    b->add_option("--k", kstr, "weight, comma separated")->required();
    b->add_option("--p", prime, "prime for the Kostant range check");
    auto* x = app.add_subcommand("exclude-primes", "certify the finite exceptional prime set");
    x->add_option("--config", config_path, "JSON configuration")->required();
    auto* c = app.add_subcommand("congruence-module", "congruence module and congruent eigensystems");
    c->add_option("--config", config_path, "JSON file with p, lattice, v1, v2 and optional operators")->required();
    auto* ci = app.add_subcommand("classify-image", "projective image of a subgroup of GL2(F_q)");
    ci->add_option("--config", config_path, "JSON file with p, optional modulus and generators");
    ci->add_option("--p", prime, "characteristic");
    ci->add_option("--modulus", modulus, "monic modulus polynomial, low degree first");
    ci->add_option("--gen", gens, "generator a,b,c,d (digits of extension elements separated by ':')");
    auto* a = app.add_subcommand("adjoint-check", "sampled verification of the adjoint Euler factor identity");
    a->add_option("--samples", samples, "samples per (q, k0)")->check(CLI::Range(1, 100000));
    a->add_option("--q", qs, "residue field sizes");
    a->add_option("--k0", k0s, "values of k0");
    a->add_option("--qexp", qexp, "q-expansion JSON file to evaluate");
    auto* r = app.add_subcommand("recover-weights", "recover (a, parts) from a subset-sum multiset");
    r->add_option("--multiset", multiset, "comma separated multiset")->required();
    r->add_option("--d", d, "number of parts")->required();

    std::vector<std::string> argv_store{"hmfcert"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kOk;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (CLI::ParseError const& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kValidation;
    }
    g.format_given = fmt->count() > 0;

    try {
        Output o;
        if (w->parsed()) {
            o = cmd_weights(parse_longs(kstr, "--k"));
        } else if (b->parsed()) {
            o = cmd_bgg(parse_longs(kstr, "--k"), b->count("--p") ? std::optional<long>(prime) : std::nullopt);
        } else if (x->parsed()) {
            o = cmd_exclude(config_path, g);
        } else if (c->parsed()) {
            o = cmd_congruence(config_path);
        } else if (ci->parsed()) {
            json in;
            if (!config_path.empty()) {
                in = config::read_json_file(config_path);
            } else {
                if (!ci->count("--p") || gens.empty())
                    raise(ErrorCode::UsageError, "classify-image needs --config or --p with --gen");
                in["p"] = prime;
                if (!modulus.empty())
                    in["modulus"] = parse_longs(modulus, "--modulus");
                in["generators"] = json::array();
                for (auto const& s : gens)
                    in["generators"].push_back(parse_generator(s));
            }
            o = cmd_classify(in);
        } else if (a->parsed()) {
            o = cmd_adjoint(parse_longs(qs, "--q"), parse_longs(k0s, "--k0"), samples, g.seed, qexp);
        } else if (r->parsed()) {
            o = cmd_recover(parse_longs(multiset, "--multiset"), d);
        }
        emit(o, g, out);
        return o.code;
    } catch (Error const& e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::UsageError)
            err << app.help();
        return kValidation;
    } catch (json::exception const& e) {
        err << "error [ConfigError]: " << e.what() << "\n";
        return kValidation;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, out, err);
}

} // namespace hmfcert::cli
