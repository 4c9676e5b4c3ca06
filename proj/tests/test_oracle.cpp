#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "commperm/oracle.hpp"

using namespace commperm;
using namespace commperm::oracle;

TEST_CASE("enumeration counts") {
    int count = 0;
    enumerate_commuting(0, 3, [&](const CommutingTuple& t) {
        ++count;
        CHECK(t.p() == 0);
        CHECK(t.n() == 3);
    });
    CHECK(count == 1);

    count = 0;
    enumerate_commuting(1, 3, [&](const CommutingTuple&) { ++count; });
    CHECK(count == 6);

    count = 0;
    enumerate_commuting(2, 3, [&](const CommutingTuple&) { ++count; });
    CHECK(count == 18);
}

TEST_CASE("every emitted tuple commutes and no duplicates appear") {
    for (int p = 1; p <= 3; ++p)
        for (int n = 1; n <= 4; ++n) {
            std::set<CommutingTuple> seen;
            enumerate_commuting(p, n, [&](const CommutingTuple& t) {
                for (int i = 0; i < t.p(); ++i)
                    for (int j = i + 1; j < t.p(); ++j) CHECK(commutes(t[i], t[j]));
                CHECK(seen.insert(t).second);
            });
        }
}

TEST_CASE("histograms of small symmetric groups") {
    const auto h13 = histogram(1, 3);
    CHECK(h13.counts == std::vector<Int>{0, 2, 3, 1});

    const auto h23 = histogram(2, 3);
    CHECK(h23.counts == std::vector<Int>{0, 8, 9, 1});

    const auto h33 = histogram(3, 3);
    CHECK(h33.counts == std::vector<Int>{0, 26, 21, 1});
    CHECK(h33.total() == 48);
}

TEST_CASE("transitive enumeration") {
    int count = 0;
    enumerate_transitive(1, 5, [&](const CommutingTuple& t) {
        ++count;
        CHECK(is_transitive(t));
    });
    CHECK(count == 24);  // the (n-1)! n-cycles

    count = 0;
    enumerate_transitive(2, 2, [&](const CommutingTuple&) { ++count; });
    CHECK(count == 3);

    count = 0;
    enumerate_transitive(2, 3, [&](const CommutingTuple&) { ++count; });
    CHECK(count == 8);
}

TEST_CASE("histogram export matches the table shape") {
    const auto h = histogram(2, 3);
    std::ostringstream csv;
    write_csv(csv, h);
    CHECK(csv.str() == "p,n,k,value\n2,3,0,0\n2,3,1,8\n2,3,2,9\n2,3,3,1\n");
    std::ostringstream jsonl;
    write_jsonl(jsonl, h);
    CHECK(jsonl.str().find("{\"p\":2,\"n\":3,\"k\":2,\"value\":\"9\"}") != std::string::npos);
}

TEST_CASE("budget refusal") {
    CHECK(estimated_steps(1, 4) == 24);
    CHECK(estimated_steps(2, 4) == 24 * 5);
    Budget tiny{100};
    CHECK_THROWS_AS(histogram(2, 5, tiny), BudgetError);
    try {
        histogram(2, 5, tiny);
    } catch (const BudgetError& e) {
        CHECK(e.estimated_steps == 120u * 7u);
    }
    // huge requests refuse up front instead of running forever
    CHECK_THROWS_AS(enumerate_commuting(4, 12, [](const CommutingTuple&) {}), BudgetError);
}
