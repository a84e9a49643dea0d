#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gl2f/errors.hpp"
#include "gl2f/verify.hpp"

using namespace gl2f;

TEST_CASE("numeric pass rule with absolute fallback at numerical zeros") {
    auto big = VerificationCase::numeric("s", "l", {1.0, 0}, {1.0 + 1e-8, 0}, 1e-6);
    CHECK(big.pass);
    auto fail = VerificationCase::numeric("s", "l", {1.0, 0}, {1.01, 0}, 1e-6);
    CHECK_FALSE(fail.pass);
    // |lhs| < 1e-10: absolute criterion
    auto zero = VerificationCase::numeric("s", "l", {0, 0}, {5e-7, 0}, 1e-6);
    CHECK(zero.pass);
    auto zero_fail = VerificationCase::numeric("s", "l", {0, 0}, {5e-3, 0}, 1e-6);
    CHECK_FALSE(zero_fail.pass);
}

TEST_CASE("symbolic suite passes and is deterministic") {
    VerifyConfig cfg;
    cfg.homom_pairs = 10;
    VerificationReport rep1 = verify_symbolic(cfg);
    VerificationReport rep2 = verify_symbolic(cfg);
    CHECK(rep1.failures() == 0);
    CHECK(rep1.total() == rep2.total());
    for (int i = 0; i < rep1.total(); ++i) CHECK(rep1.cases[i].label == rep2.cases[i].label);
}

TEST_CASE("theorem1 suite at loose order and tolerance") {
    VerifyConfig cfg;
    cfg.order = 16;
    cfg.tol = 1e-2;
    cfg.points = 2;
    VerificationReport rep = verify_theorem1(cfg);
    CHECK(rep.total() == 9 * 2 * 2 * 4);
    for (const auto& c : rep.cases) {
        INFO(c.label);
        CHECK(c.pass);
    }
}

TEST_CASE("unknown suite is rejected") {
    VerifyConfig cfg;
    CHECK_THROWS_AS(run_suite("nope", cfg), UnknownSuite);
}

TEST_CASE("JSON report matches the schema") {
    VerifyConfig cfg;
    cfg.order = 16;
    cfg.tol = 1e-2;
    cfg.points = 1;
    VerificationReport rep = verify_theorem1(cfg);
    rep.append(verify_symbolic([&] {
        VerifyConfig c = cfg;
        c.homom_pairs = 2;
        return c;
    }()));
    const std::string text = report_to_json(rep, cfg);
    const auto j = nlohmann::json::parse(text);

    REQUIRE(j.contains("config"));
    CHECK(j["config"]["order"].is_number_integer());
    CHECK(j["config"]["tol"].is_number());
    CHECK(j["config"]["radius"].is_number());
    CHECK(j["config"]["mu1"].is_array());
    CHECK(j["config"]["mu1"].size() == 2);
    CHECK(j["config"]["mu2"].size() == 2);

    REQUIRE(j.contains("cases"));
    REQUIRE(j["cases"].is_array());
    REQUIRE(j["cases"].size() == static_cast<std::size_t>(rep.total()));
    bool saw_numeric = false, saw_symbolic = false;
    for (const auto& c : j["cases"]) {
        CHECK(c["suite"].is_string());
        CHECK(c["label"].is_string());
        REQUIRE((c["mode"] == "symbolic" || c["mode"] == "numeric"));
        CHECK(c["pass"].is_boolean());
        if (c["mode"] == "numeric") {
            saw_numeric = true;
            CHECK(c["lhs"].is_array());
            CHECK(c["rhs"].is_array());
            CHECK(c["abs_err"].is_number());
            CHECK(c["rel_err"].is_number());
            CHECK(c["tol"].is_number());
            if (!c["point"].is_null()) {
                CHECK(c["point"]["t"].is_number());
                CHECK(c["point"]["s"].is_number());
                CHECK(c["point"]["eps1"].is_number_integer());
                CHECK(c["point"]["eps2"].is_number_integer());
            }
        } else {
            saw_symbolic = true;
            CHECK(c["lhs"].is_null());
            CHECK(c["point"].is_null());
        }
    }
    CHECK(saw_numeric);
    CHECK(saw_symbolic);

    REQUIRE(j.contains("summary"));
    CHECK(j["summary"]["total"] == rep.total());
    CHECK(j["summary"]["failures"] == rep.failures());

    // stable key order: config, cases, summary
    auto keys = nlohmann::ordered_json::parse(text);
    std::vector<std::string> top;
    for (auto it = keys.begin(); it != keys.end(); ++it) top.push_back(it.key());
    CHECK(top == std::vector<std::string>{"config", "cases", "summary"});
}

TEST_CASE("numeric cases are reproducible bit for bit") {
    VerifyConfig cfg;
    cfg.order = 16;
    cfg.points = 1;
    cfg.tol = 1e-2;
    VerificationReport r1 = verify_theorem1(cfg);
    VerificationReport r2 = verify_theorem1(cfg);
    REQUIRE(r1.total() == r2.total());
    for (int i = 0; i < r1.total(); ++i) {
        CHECK(r1.cases[i].lhs == r2.cases[i].lhs);
        CHECK(r1.cases[i].rhs == r2.cases[i].rhs);
    }
}

TEST_CASE("toy suite via the verify layer") {
    VerifyConfig cfg;
    VerificationReport rep = verify_toy_suite(cfg);
    CHECK(rep.failures() == 0);
    CHECK(rep.total() >= 6);
}
