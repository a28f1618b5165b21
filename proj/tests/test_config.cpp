#include "hmfcert/config.hpp"
#include "hmfcert/error.hpp"

#include <doctest.h>

#include <string>

using namespace hmfcert;
using namespace hmfcert::config;

namespace {

std::string const data_dir = HMFCERT_TEST_DATA;

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (Error const& e) {
        return e.code();
    }
    return ErrorCode::Indeterminate;
}

json q5() { return read_json_file(data_dir + "/q5.json"); }

} // namespace

TEST_CASE("scalar parsing")
{
    CHECK(json_int(json(12), "x") == 12);
    CHECK(json_int(json("-123456789012345678901234567890"), "x") == Int("-123456789012345678901234567890"));
    CHECK(json_rat(json("-3/6"), "x") == Rat(-1, 2));
    CHECK(json_rat(json(7), "x") == 7);
    CHECK(json_elem(json::parse(R"(["1/2", 3])"), "x") == ElemCoeffs{Rat(1, 2), Rat(3)});
    CHECK(code_of([] { json_rat(json("1/0"), "x"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { json_rat(json("abc"), "x"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { json_int(json(1.5), "x"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { json_int(json("2/3"), "x"); }) == ErrorCode::ConfigError);
}

TEST_CASE("the Q(sqrt 5) config")
{
    Config const c = load_config(data_dir + "/q5.json");
    CHECK(c.min_poly == std::vector<Int>{-5, 0, 1});
    REQUIRE(c.galois);
    CHECK(c.galois->size() == 1);
    REQUIRE(c.units.size() == 1);
    CHECK(c.units[0] == ElemCoeffs{Rat(3, 2), Rat(1, 2)});
    CHECK(c.k == std::vector<long>{4, 2});
    CHECK(c.Delta == 20);
    CHECK(c.h_F == Int(1));
    CHECK(c.format == "text");
    CHECK(c.precision_cap == (1L << 16));

    auto const in = to_inputs(c, 7);
    CHECK(in.field.degree() == 2);
    CHECK(in.weight.k0 == 4);
    CHECK(in.Delta == 20);
    REQUIRE(in.units.size() == 1);
    CHECK(nfield::norm(in.units[0]) == 1);
    CHECK(in.seed == 7);
}

TEST_CASE("config validation")
{
    auto j = q5();
    j["field"]["extra"] = 1;
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigError);

    j = q5();
    j["bogus"] = json::object();
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigError);

    j = q5();
    j["field"].erase("min_poly");
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigError);

    j = q5();
    j["field"]["units"] = json::parse(R"([["3/2", "x"]])");
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigError);

    j = q5();
    j["output"]["format"] = "xml";
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigError);

    CHECK(code_of([] { load_config(data_dir + "/does_not_exist.json"); }) == ErrorCode::ConfigError);

    /* module preconditions keep their own codes */
    j = q5();
    j["field"]["min_poly"] = json::parse("[1, 0, 1]");
    j["field"].erase("galois");
    CHECK(code_of([&] { to_inputs(parse_config(j), 0); }) == ErrorCode::NotTotallyReal);

    j = q5();
    j["weight"]["k"] = json::parse("[3, 2]");
    CHECK(code_of([&] { to_inputs(parse_config(j), 0); }) == ErrorCode::ParityMismatch);
}

TEST_CASE("quadratic extensions in the config")
{
    auto j = q5();
    j["criteria"] = json::parse(R"({"quadratic_extensions":[{"delta":[3,1],"units":[{"a":[1,0],"b":[0,0]}]}]})");
    Config const c = parse_config(j);
    REQUIRE(c.quadratic_extensions.size() == 1);
    CHECK(c.quadratic_extensions[0].delta == ElemCoeffs{3, 1});
    CHECK(c.quadratic_extensions[0].units.size() == 1);
}
