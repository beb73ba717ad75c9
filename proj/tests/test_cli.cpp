#include "twistlab/cli/runner.hpp"

#include <doctest.h>

using namespace twistlab;
using namespace twistlab::cli;

TEST_CASE("suite expansion") {
    CHECK(expand_suites({}).empty());
    CHECK(expand_suites({""}).empty());
    CHECK(expand_suites({"all"}).size() == registry().size());
    auto a = expand_suites({"appendix-a"});
    CHECK(a == std::vector<std::string>{"lie-bialgebra", "axb_double_group", "poisson", "dressing-generators"});
    // registry order regardless of request order, no duplicates
    CHECK(expand_suites({"udf", "poisson", "udf"}) == std::vector<std::string>{"poisson", "udf"});
    CHECK_THROWS_AS(expand_suites({"bogus"}), UsageError);
}

TEST_CASE("run_suite") {
    SuiteConfig c;
    c.suites = {};
    RunReport empty = run_suite(c);
    CHECK(empty.results.empty());
    CHECK(empty.passed());

    c.suites = {"poisson", "twist-axioms"};
    c.order = 0;
    RunReport r = run_suite(c);
    REQUIRE(r.results.size() == 2);
    CHECK(r.passed());
    CHECK(r.results[1].order == 1);
    std::string j = r.to_json();
    CHECK(j.find("\"twist_semiclassical_coefficient\": \"1/2\"") != std::string::npos);
    CHECK(j.find("\"dressing_x_sign\": \"+1\"") != std::string::npos);
    CHECK(j.find("seconds") == std::string::npos);
    CHECK(r.summary_table(false).find("seconds") == std::string::npos);
    CHECK(r.summary_table(true).find("seconds") != std::string::npos);

    c.order = 5;
    CHECK_THROWS_AS(run_suite(c), UsageError);
}

TEST_CASE("reports repeat byte for byte") {
    SuiteConfig c;
    c.suites = {"axb_double_group", "classical-momentum"};
    c.seed = 99;
    std::string a = run_suite(c).to_json();
    c.jobs = 2;
    CHECK(run_suite(c).to_json() == a);
    c.seed = 100;
    CHECK(run_suite(c).to_json() != a);
}

TEST_CASE("star calculator") {
    // x * y has no first order term for the right module, y * x does
    auto xy = star_calc(Space::GStar, "x", "y", 1);
    CHECK(quantizeudf::series_str(xy) == "x*y");
    auto yx = star_calc(Space::GStar, "y", "x", 1);
    CHECK(quantizeudf::series_str(yx) == "x*y + hbar*(-y^2)");

    auto one = star_calc(Space::GStar, "1", "x^2*y + y", 3);
    for (int k = 1; k <= 3; ++k) CHECK(one[k].is_zero());
    CHECK(one[0] == exprcas::parse_scalar("x^2*y + y"));

    auto flat = star_calc(Space::Group, "a", "n", 0);
    CHECK(quantizeudf::series_str(flat) == "a*n");
    CHECK(quantizeudf::series_str(star_calc(Space::Group, "a", "n", 2)) == "a*n + hbar*(-1/2)");

    CHECK_THROWS_AS(star_calc(Space::GStar, "x +", "y", 1), ParseError);
    CHECK_THROWS_AS(star_calc(Space::GStar, "a", "y", 1), UnknownCoordinate);
    CHECK_THROWS_AS(parse_space("torus"), UsageError);
    CHECK(parse_space("gdual-coadjoint") == Space::GDualCoadjoint);
}
