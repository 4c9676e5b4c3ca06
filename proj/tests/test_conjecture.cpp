#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commperm/conjecture.hpp"

using namespace commperm;
using namespace commperm::conjecture;

TEST_CASE("delta closed form") {
    CHECK(delta_closed_form(2, 3) == 73);
    CHECK_THROWS_AS(delta_closed_form(2, 2), std::invalid_argument);

    // closed form equals the table expression
    for (int p = 1; p <= 4; ++p) {
        const auto table = counting::CountTable::build(p, 12);
        for (int n = 3; n <= 12; ++n) {
            const Int direct =
                table.at(n, n - 1) * table.at(n, n - 1) - table.at(n, n) * table.at(n, n - 2);
            CHECK(delta_closed_form(p, n) == direct);
        }
    }

    for (int n = 3; n <= 30; ++n) CHECK(delta_closed_form(1, n) >= 0);
}

TEST_CASE("power inequality") {
    CHECK(power_inequality_holds(2));  // 9 >= 8
    for (int p = 2; p <= 60; ++p) CHECK(power_inequality_holds(p));
}

TEST_CASE("proposition check") {
    CHECK(proposition_check(1, 10).ok);
    const auto report = proposition_check(3, 15);
    CHECK(report.ok);
    CHECK(report.failure.empty());
}

TEST_CASE("sweep finds no violations on small ranges") {
    for (int p = 1; p <= 3; ++p) {
        const auto report = logconcavity_sweep(p, 30);
        CHECK(report.clean());
        CHECK(report.p == p);
        CHECK(report.cells_checked == 28 * 29 / 2);  // sum over 3<=n<=30 of n-2
    }
}

TEST_CASE("sweep is deterministic across job counts") {
    const auto one = logconcavity_sweep(2, 40, 1);
    const auto four = logconcavity_sweep(2, 40, 4);
    CHECK(one.violations == four.violations);
    CHECK(one.cells_checked == four.cells_checked);
}

TEST_CASE("report serialization") {
    const auto report = logconcavity_sweep(2, 10);
    const auto json = sweep_report_json(report);
    CHECK(json.find("\"p\":2") != std::string::npos);
    CHECK(json.find("\"violations\":[]") != std::string::npos);
    CHECK(sweep_report_human(report).find("0 violations") != std::string::npos);

    // a fabricated violation renders as a counterexample candidate
    SweepReport fake;
    fake.p = 9;
    fake.n_max = 10;
    fake.violations.push_back({10, 5});
    CHECK(sweep_report_json(fake).find("{\"n\":10,\"k\":5}") != std::string::npos);
    CHECK(sweep_report_human(fake).find("counterexample candidate") != std::string::npos);
}
