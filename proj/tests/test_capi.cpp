#include <doctest.h>

#include <string>

#include "saito_forge/saito_forge.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    sf_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("create, verify, export") {
    sf_instance* inst = nullptr;
    char* validation = nullptr;
    REQUIRE(sf_instance_create(5, 0, 0, "1", "x^2+x*y+y^2", "q", &inst, &validation) == SF_OK);
    CHECK(take(validation).find("\"x_not_divides_f2\"") != std::string::npos);

    char* f = nullptr;
    REQUIRE(sf_instance_polynomial(inst, &f) == SF_OK);
    CHECK(take(f) == "x^5 + x^2*y^3 + x*y^4 + y^5 + y^4*z");

    sf_verify_options opt;
    sf_verify_options_default(&opt);
    char* report = nullptr;
    int pass = 0;
    REQUIRE(sf_verify(inst, &opt, &report, &pass) == SF_OK);
    CHECK(pass == 1);
    CHECK(take(report).find("\"pass\": true") != std::string::npos);

    char* script = nullptr;
    REQUIRE(sf_export(inst, SF_CAS_MACAULAY2, SF_ROUTE_AUTO, &script) == SF_OK);
    CHECK(take(script).find("det A") != std::string::npos);
    REQUIRE(sf_export(inst, SF_CAS_COCOA, SF_ROUTE_AUTO, &script) == SF_OK);
    CHECK(take(script).find("Use R ::= QQ[x,y,z]") != std::string::npos);

    char* json = nullptr;
    REQUIRE(sf_instance_to_json(inst, &json) == SF_OK);
    std::string text = take(json);
    sf_instance* back = nullptr;
    REQUIRE(sf_instance_from_json(text.c_str(), 0, &back) == SF_OK);
    sf_instance_free(back);
    sf_instance_free(inst);
}

TEST_CASE("error codes") {
    sf_instance* inst = nullptr;
    CHECK(sf_instance_create(5, 1, 0, "x+y", "x+y", "q", &inst, nullptr) == SF_ERR_PARAMS);
    CHECK(inst == nullptr);
    CHECK(std::string(sf_last_error()).find("alpha_plus_beta_bound") != std::string::npos);
    CHECK(sf_instance_create(5, 0, 0, "1", "x^2+", "q", &inst, nullptr) == SF_ERR_PARSE);
    CHECK(sf_instance_create(5, 0, 0, "1", "x^2+z", "q", &inst, nullptr) == SF_ERR_PARSE);
    CHECK(sf_instance_create(5, 0, 0, "1", "x^2+x*y+y^2", "fp:100", &inst, nullptr) == SF_ERR_FIELD);
    CHECK(sf_instance_create(5, 0, 0, nullptr, "x", "q", &inst, nullptr) == SF_ERR_ARGUMENT);
    CHECK(sf_instance_from_json("{not json", 0, &inst) == SF_ERR_PARSE);
    CHECK(sf_verify(nullptr, nullptr, nullptr, nullptr) == SF_ERR_ARGUMENT);
    CHECK(std::string(sf_status_name(SF_ERR_CONSTRUCTION)) == "construction failed");
}

TEST_CASE("sweeps") {
    sf_sweep_config cfg;
    sf_sweep_config_default(&cfg);
    cfg.d_min = 5;
    cfg.d_max = 5;
    cfg.alpha_min = 1;
    cfg.alpha_max = 2;
    char* report = nullptr;
    int any_fail = 1;
    REQUIRE(sf_sweep(&cfg, &report, &any_fail) == SF_OK);
    CHECK(any_fail == 0);
    CHECK(take(report).find("\"total\": 0") != std::string::npos);

    sf_sweep_config_default(&cfg);
    cfg.d_min = 5;
    cfg.d_max = 7;
    cfg.trials = 2;
    cfg.seed = 3;
    cfg.field = "fp:1009";
    cfg.threads = 1;
    REQUIRE(sf_sweep(&cfg, &report, &any_fail) == SF_OK);
    CHECK(any_fail == 0);
    std::string serial = take(report);
    cfg.threads = 4;
    REQUIRE(sf_sweep(&cfg, &report, &any_fail) == SF_OK);
    CHECK(take(report) == serial);
}
