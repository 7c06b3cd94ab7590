#include <doctest.h>

#include "polya/polya.h"

#include <json.hpp>

#include <cmath>
#include <string>

namespace {

std::string take(char* s) {
    std::string r = s ? s : "";
    polya_string_free(s);
    return r;
}

}  // namespace

TEST_SUITE("c_api") {

TEST_CASE("version, status names and limits") {
    CHECK(std::string(polya_version()).size() > 0);
    CHECK(std::string(polya_status_name(POLYA_OK)) == "ok");
    CHECK(std::string(polya_status_name(POLYA_LIMIT_EXCEEDED)) == "limit exceeded");
    CHECK(polya_max_order(0) == 3000);
    CHECK(polya_max_order(1) == 300);
    CHECK(polya_family_is_bivariate("ctree-poly") == 1);
    CHECK(polya_family_is_bivariate("polya") == 0);
}

TEST_CASE("Polya coefficients through the handle") {
    polya_series* s = nullptr;
    REQUIRE(polya_coeffs("polya", 20, nullptr, &s) == POLYA_OK);
    CHECK(polya_series_order(s) == 20);
    CHECK(polya_series_is_bivariate(s) == 0);
    char* c = nullptr;
    REQUIRE(polya_series_coeff(s, 20, 0, &c) == POLYA_OK);
    CHECK(take(c) == "12826228");
    CHECK(polya_series_coeff(s, 21, 0, &c) == POLYA_INVALID_ARGUMENT);
    CHECK(std::string(polya_last_error()).size() > 0);
    char* js = nullptr;
    REQUIRE(polya_series_json(s, &js) == POLYA_OK);
    const auto j = nlohmann::json::parse(take(js));
    CHECK(j["coefficients"][12] == "4766");
    char* csv = nullptr;
    REQUIRE(polya_series_csv(s, &csv) == POLYA_OK);
    CHECK(take(csv).rfind("n,coefficient\n", 0) == 0);
    polya_series_free(s);
    polya_series_free(nullptr);
}

TEST_CASE("polynomial families and omega") {
    polya_series* s = nullptr;
    REQUIRE(polya_coeffs("ctree-poly", 4, nullptr, &s) == POLYA_OK);
    CHECK(polya_series_is_bivariate(s) == 1);
    char* c = nullptr;
    REQUIRE(polya_series_coeff(s, 3, 1, &c) == POLYA_OK);
    CHECK(take(c) == "1/2");
    polya_series_free(s);

    REQUIRE(polya_coeffs("omega", 12, "all-1", &s) == POLYA_OK);
    REQUIRE(polya_series_coeff(s, 12, 0, &c) == POLYA_OK);
    CHECK(take(c) == "127");
    polya_series_free(s);
    CHECK(polya_coeffs("omega", 12, nullptr, &s) == POLYA_INVALID_ARGUMENT);
    CHECK(polya_coeffs("omega", 12, "0,,2", &s) == POLYA_INVALID_ARGUMENT);
}

TEST_CASE("argument and limit errors") {
    polya_series* s = nullptr;
    CHECK(polya_coeffs("nope", 10, nullptr, &s) == POLYA_INVALID_ARGUMENT);
    CHECK(std::string(polya_last_error()).find("nope") != std::string::npos);
    CHECK(polya_coeffs(nullptr, 10, nullptr, &s) == POLYA_INVALID_ARGUMENT);
    CHECK(polya_coeffs("polya", 10, nullptr, nullptr) == POLYA_INVALID_ARGUMENT);
    CHECK(polya_coeffs("polya", 3001, nullptr, &s) == POLYA_LIMIT_EXCEEDED);
    CHECK(polya_coeffs("ctree-poly", 301, nullptr, &s) == POLYA_LIMIT_EXCEEDED);
    CHECK(s == nullptr);
    polya_result* r = nullptr;
    CHECK(polya_sample(20000, 10, 1, 1, &r) == POLYA_LIMIT_EXCEEDED);
    CHECK(polya_sample(10, 0, 1, 1, &r) == POLYA_INVALID_ARGUMENT);
    CHECK(polya_singularity("polya", 0.0, &r) == POLYA_INVALID_ARGUMENT);
    CHECK(polya_singularity("unknown", 1e-12, &r) == POLYA_INVALID_ARGUMENT);
    CHECK(polya_table("other", 7, 300, 1e-12, &r) == POLYA_INVALID_ARGUMENT);
    CHECK(polya_lmax(nullptr, 1, 10, 0.5, 1, 1, &r) == POLYA_INVALID_ARGUMENT);
    CHECK(r == nullptr);
    CHECK(polya_result_json(nullptr) != nullptr);
    polya_result_free(nullptr);
}

TEST_CASE("reports through the handle") {
    polya_result* r = nullptr;
    REQUIRE(polya_singularity("polya", 1e-12, &r) == POLYA_OK);
    CHECK(polya_result_passed(r) == 1);
    const auto j = nlohmann::json::parse(polya_result_json(r));
    CHECK(std::fabs(j["rho"].get<double>() - 0.3383219) < 1e-6);
    CHECK(std::string(polya_result_csv(r)).rfind("name,value\n", 0) == 0);
    polya_result_free(r);

    REQUIRE(polya_sample(50, 100, 3, 2, &r) == POLYA_OK);
    const auto a = nlohmann::json::parse(polya_result_json(r));
    polya_result_free(r);
    REQUIRE(polya_sample(50, 100, 3, 1, &r) == POLYA_OK);
    const auto b = nlohmann::json::parse(polya_result_json(r));
    polya_result_free(r);
    CHECK(a["c_size"] == b["c_size"]);
    CHECK(a["seeds"] == b["seeds"]);

    REQUIRE(polya_verify(5, 0, 30, &r) == POLYA_OK);
    CHECK(polya_result_passed(r) == 1);
    polya_result_free(r);
}

}  // TEST_SUITE
