// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library strictly through the public C header, the
// way an external binding would.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nplc/nplc.h>

#include <json.hpp>  // report parsing only; the library surface stays C

#include <string>

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    nplc_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and error plumbing") {
    CHECK(std::string(nplc_version()) == "0.1.0");
    CHECK(nplc_last_error() != nullptr);
}

TEST_CASE("polynomial handles round-trip through JSON") {
    nplc_poly* p = nullptr;
    REQUIRE(nplc_poly_parse("x1^2 + 2*x1*x2 + x2^2 + x3^3", 3, &p) == NPLC_OK);
    CHECK(nplc_poly_nvars(p) == 3);
    CHECK(nplc_poly_axis_condition(p) == 1);
    std::string json = take(nplc_poly_to_json(p));
    nplc_poly* q = nullptr;
    REQUIRE(nplc_poly_from_json(json.c_str(), &q) == NPLC_OK);
    CHECK(take(nplc_poly_to_text(q)) == take(nplc_poly_to_text(p)));
    nplc_poly_free(p);
    nplc_poly_free(q);

    nplc_poly* bad = nullptr;
    CHECK(nplc_poly_parse("x1 + + *", 1, &bad) == NPLC_ERROR_PARSE);
    CHECK(std::string(nplc_last_error()).find("position") != std::string::npos);
    CHECK(nplc_poly_parse("x9", 2, &bad) == NPLC_ERROR_PARSE);
}

TEST_CASE("newton handles expose facets, membership and filtration values") {
    nplc_poly* f = nullptr;
    REQUIRE(nplc_poly_parse("x1^3+x1*x2+x2^3", 2, &f) == NPLC_OK);
    nplc_newton* np = nullptr;
    REQUIRE(nplc_newton_build(f, &np) == NPLC_OK);

    std::string json = take(nplc_newton_to_json(np));
    CHECK(json.find("\"normal\":[1,2]") != std::string::npos);
    CHECK(json.find("\"normal\":[2,1]") != std::string::npos);

    char* d1 = nullptr;
    REQUIRE(nplc_newton_delta1_json(np, 1, &d1) == NPLC_OK);
    std::string d1s = take(d1);
    CHECK(d1s.find("\"axis\":1") != std::string::npos);
    CHECK(d1s.find("[2,1]") != std::string::npos);
    CHECK(d1s.find("[1,2]") == std::string::npos);

    int inside = -1;
    REQUIRE(nplc_newton_member(np, "0,2", "1", &inside) == NPLC_OK);
    CHECK(inside == 0);
    REQUIRE(nplc_newton_member(np, "1,1", "1", &inside) == NPLC_OK);
    CHECK(inside == 1);
    REQUIRE(nplc_newton_member(np, "1/2,2", "1", &inside) == NPLC_OK);
    CHECK(inside == 1);

    char* fv = nullptr;
    REQUIRE(nplc_newton_filtration_value(np, "1,1", &fv) == NPLC_OK);
    CHECK(take(fv) == "1");

    nplc_newton_free(np);
    nplc_poly_free(f);
}

TEST_CASE("fan handles regularize and compare") {
    nplc_poly* f = nullptr;
    REQUIRE(nplc_poly_parse("x1^2+x2^3+x3^5", 3, &f) == NPLC_OK);
    nplc_newton* np = nullptr;
    REQUIRE(nplc_newton_build(f, &np) == NPLC_OK);
    nplc_fan* sigma0 = nullptr;
    REQUIRE(nplc_fan_dual(np, &sigma0) == NPLC_OK);
    CHECK(nplc_fan_is_regular(sigma0) == 0);  // E8 dual fan needs subdivision
    nplc_fan* sigma = nullptr;
    REQUIRE(nplc_fan_regularize(sigma0, &sigma) == NPLC_OK);
    CHECK(nplc_fan_is_regular(sigma) == 1);
    CHECK(nplc_fan_refines(sigma, sigma0) == 1);
    CHECK(nplc_fan_refines(sigma0, sigma) == 0);

    std::string fan_json = take(nplc_fan_to_json(sigma));
    nplc_fan* reparsed = nullptr;
    REQUIRE(nplc_fan_from_json(fan_json.c_str(), &reparsed) == NPLC_OK);
    CHECK(take(nplc_fan_to_json(reparsed)) == fan_json);

    nplc_fan* broken = nullptr;
    CHECK(nplc_fan_from_json("{\"dim\": 2, \"rays\": [[1]]}", &broken) == NPLC_ERROR_PARSE);

    nplc_fan_free(reparsed);
    nplc_fan_free(sigma);
    nplc_fan_free(sigma0);
    nplc_newton_free(np);
    nplc_poly_free(f);
}

TEST_CASE("command runner maps verdicts to statuses") {
    char* rep = nullptr;
    REQUIRE(nplc_run("newton", R"({"poly": "x1^2+x2^2+x3^2", "nvars": 3, "delta1_axis": 1})", &rep) == NPLC_OK);
    std::string newton = take(rep);
    CHECK(newton.find("\"compact\": true") != std::string::npos);
    CHECK(newton.find("\"version\": \"0.1.0\"") != std::string::npos);

    rep = nullptr;
    CHECK(nplc_run("newton", R"({"poly": "0", "nvars": 2})", &rep) == NPLC_ERROR_INVALID);
    take(rep);  // error report is still a document

    rep = nullptr;
    REQUIRE(nplc_run("extend",
                     R"({"F": "x1^2+x2^2+x3^2+x4", "H": "x1*x2*x3", "nvars": 4, "m": 1})",
                     &rep) == NPLC_OK);
    nlohmann::json extend = nlohmann::json::parse(take(rep));
    CHECK(extend.at("pass").get<bool>());
    bool saw_facet_ray = false;
    for (const auto& row : extend.at("rays"))
        if (row.at("ray") == nlohmann::json::array({1, 1, 1, 2})) saw_facet_ray = true;
    CHECK(saw_facet_ray);

    rep = nullptr;
    CHECK(nplc_run("extend", R"({"F": "x1^2+x2^2+x3^2+x4", "H": "1", "nvars": 4, "m": 1})", &rep) ==
          NPLC_VERIFICATION_FAILED);
    take(rep);

    rep = nullptr;
    CHECK(nplc_run("bogus", "{}", &rep) == NPLC_ERROR_INVALID);
    take(rep);

    rep = nullptr;
    CHECK(nplc_run("newton", "{not json", &rep) == NPLC_ERROR_PARSE);
}

TEST_CASE("reports are byte-identical across reruns with a pinned seed") {
    const char* cfg = R"({"poly": "x1^3+x1*x2+x2^3", "nvars": 2, "trials": 20,
                          "normalization_trials": 10, "seed": 12345})";
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(nplc_run("check", cfg, &a) == NPLC_OK);
    REQUIRE(nplc_run("check", cfg, &b) == NPLC_OK);
    CHECK(take(a) == take(b));
}
