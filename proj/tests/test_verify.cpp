#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsmac/verify.hpp"

using namespace nsmac;

TEST_CASE("suite catalogue") {
    const auto& names = suite_names();
    REQUIRE(names.size() == 11);
    CHECK(names.front() == "polynomiality");
    CHECK(names.back() == "combinatorics");
    CHECK(default_systems("kl") == std::vector<std::string>{"A1", "A2", "B2", "G2", "A3"});
    CHECK(default_systems("orthogonality") == std::vector<std::string>{"A1", "A2"});
    Workbench wb;
    CHECK_THROWS_AS(run_suite(wb, "nonexistent", {"A1"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(wb, "kl", {"X1"}, {}), UnsupportedType);
}

TEST_CASE("every suite passes in rank one and on small A2 boxes") {
    Workbench wb;
    SuiteOptions opt;
    opt.radius = 1;
    opt.relation_radius = 2;
    opt.random_elements = 30;
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        SuiteResult r = run_suite(wb, name, {"A1", "A2"}, opt);
        CHECK(r.criterion >= 1);
        CHECK(r.systems.size() == 2);
        CHECK(r.failed() == 0);
        CHECK(r.passed() > 0);
        CHECK(r.ok());
        for (const auto& s : r.systems) CHECK(s.failures.empty());
    }
}

TEST_CASE("tallies keep the first failures") {
    SystemTally t;
    for (int i = 0; i < 20; ++i) t.check(i % 2 == 0, "case " + std::to_string(i));
    CHECK(t.passed == 10);
    CHECK(t.failed == 10);
    CHECK(t.failures.size() == 8);
    CHECK(t.failures.front() == "case 1");
    SuiteResult r;
    CHECK_FALSE(r.ok());  // nothing checked
    r.systems.push_back(t);
    CHECK(r.passed() == 10);
    CHECK_FALSE(r.ok());
}

TEST_CASE("the type B2 obstruction is counted, with the equal-parameter supplement") {
    Workbench wb;
    SuiteOptions opt;
    opt.radius = 1;
    SuiteResult r = run_suite(wb, "kl", {"B2"}, opt);
    REQUIRE(r.systems.size() == 1);
    CHECK(r.failed() > 0);
    bool equal_note = false;
    for (const auto& n : r.systems[0].notes)
        if (n.find("with t_s = t_l") != std::string::npos && n.find(", 0 failed") != std::string::npos)
            equal_note = true;
    CHECK(equal_note);
}
