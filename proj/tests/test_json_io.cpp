#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torusrep/errors.hpp"
#include "torusrep/json_io.hpp"

using namespace torusrep;
using nlohmann::json;

TEST_CASE("weight system parsing") {
    const auto s = weight_system_from_json(json::parse(R"({"k":2,"fixed_dim":1,"weights":[[1,0],[-1,0],[0,1]]})"));
    CHECK(s == oracle::ws(2, 1, {{0, 1}, {1, 0}}, {1, 2}));
    const auto m = weight_system_from_json(json::parse(R"({"k":1,"fixed_dim":0,"weights":[[1],[2]],"multiplicities":[2,1]})"));
    CHECK(m.weights()[0].multiplicity == 2);
}

TEST_CASE("weight system schema errors") {
    for (const char* text : {
             R"({"k":2,"fixed_dim":0,"weights":[[1,0]],"multiplicities":[1,1]})",
             R"({"k":2,"fixed_dim":0,"weights":[[1,0.5]]})",
             R"({"k":2,"weights":[[1,0]]})",
             R"({"k":-1,"fixed_dim":0,"weights":[[1]]})",
             R"({"k":2,"fixed_dim":0,"weights":[[0,0]]})",
             R"({"k":2,"fixed_dim":0,"weights":[[1]]})",
             R"({"k":1,"fixed_dim":0,"weights":[[1]],"multiplicities":[0]})",
             R"([1,2])",
         }) {
        CAPTURE(text);
        CHECK_THROWS_AS(weight_system_from_json(json::parse(text)), InputError);
    }
}

TEST_CASE("weight system round trip") {
    const auto s = oracle::ws(2, 3, {{1, 2}, {0, 1}, {3, -1}}, {2, 1, 3});
    CHECK(weight_system_from_json(json::parse(to_json(s).dump())) == s);
}

TEST_CASE("extension parsing") {
    const json j = json::parse(R"({
        "weight_system": {"k":1,"fixed_dim":0,"weights":[[1]]},
        "A": [[-1]],
        "omega": [["1","0"],[0,"-2/2"]]})");
    const auto ext = extension_from_json(j);
    CHECK(ext.a == oracle::int_matrix({{-1}}));
    CHECK(ext.omega(1, 1) == Rational(-1));
    CHECK(validate(ext).valid);

    const auto other = oracle::ws(1, 0, {{2}});
    CHECK_THROWS_AS(extension_from_json(j, &other), InputError);
    const auto same = oracle::ws(1, 0, {{-1}});
    CHECK(extension_from_json(j, &same).ws == same);

    json no_ws = j;
    no_ws.erase("weight_system");
    CHECK_THROWS_AS(extension_from_json(no_ws), InputError);
    CHECK(extension_from_json(no_ws, &same).omega == ext.omega);

    json bad = j;
    bad["omega"][0][1] = "x/y";
    CHECK_THROWS_AS(extension_from_json(bad), InputError);
    bad = j;
    bad["omega"][0] = json::array({1});
    CHECK_THROWS_AS(extension_from_json(bad), InputError);
    bad = j;
    bad["A"] = json::array({json::array({0.5})});
    CHECK_THROWS_AS(extension_from_json(bad), InputError);
}

TEST_CASE("extension round trip keeps exact rationals") {
    InvolutiveExtension ext{canonicalize(1, 2, {{oracle::int_vector({1}), 1}}), oracle::int_matrix({{1}}),
                            RationalMatrix::identity(4)};
    ext.omega(0, 0) = Rational(-7, 25);
    ext.omega(0, 1) = Rational(24, 25);
    ext.omega(1, 0) = Rational(24, 25);
    ext.omega(1, 1) = Rational(7, 25);
    const Json j = to_json(ext);
    CHECK(j["omega"][0][1] == "24/25");
    const auto back = extension_from_json(json::parse(j.dump()));
    CHECK(back.omega == ext.omega);
    CHECK(back.ws == ext.ws);
}

TEST_CASE("report encodings") {
    const auto s = oracle::ws(2, 0, {{1, 0}, {0, 1}});
    const Json w = to_json(*find_split_witness(s));
    CHECK(w.dump() == R"({"theta1":[0],"theta2":[1]})");
    CHECK(to_json(indecomposable_blocks(s)).dump() == R"({"flat_dim":0,"blocks":[[0],[1]]})");
    const Json r = to_json(enumerate_strata(s).front());
    CHECK(r.contains("lattice_hnf"));
    CHECK(r["quotient_codim"].is_number_unsigned());
    CHECK(to_json(oracle::int_vector({1, -2})).dump() == "[1,-2]");
}

TEST_CASE("unreadable files") {
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}
