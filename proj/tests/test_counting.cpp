#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "commperm/counting.hpp"
#include "commperm/oracle.hpp"

using namespace commperm;
using namespace commperm::counting;

TEST_CASE("unsigned Stirling numbers") {
    CHECK(stirling_first_unsigned(0, 0) == 1);
    CHECK(stirling_first_unsigned(3, 3) == 1);
    CHECK(stirling_first_unsigned(3, 2) == 3);
    CHECK(stirling_first_unsigned(4, 2) == 11);
    CHECK(stirling_first_unsigned(5, 2) == 50);
    // row sums: sum_k c(n,k) = n!
    for (int n = 0; n <= 12; ++n) {
        Int total = 0;
        for (int k = 0; k <= n; ++k) total += stirling_first_unsigned(n, k);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("transitive counts") {
    for (int n = 1; n <= 8; ++n) CHECK(a_transitive(1, n) == factorial(n - 1));
    CHECK(a_transitive(2, 2) == 3);
    CHECK(a_transitive(2, 3) == 8);
    CHECK(a_transitive(3, 4) == 210);
}

TEST_CASE("count table anchors") {
    const auto t2 = CountTable::build(2, 6);
    CHECK(t2.at(0, 0) == 1);
    CHECK(t2.at(3, 1) == 8);
    CHECK(t2.at(3, 2) == 9);
    CHECK(t2.at(3, 3) == 1);
    CHECK(t2.at(2, 1) == 3);
    // out of range reads are zero
    CHECK(t2.at(3, 4) == 0);
    CHECK(t2.at(3, -1) == 0);
    CHECK(t2.at(9, 1) == 0);

    for (int p = 0; p <= 4; ++p) {
        const auto t = CountTable::build(p, 7);
        for (int n = 0; n <= 7; ++n) CHECK(t.at(n, n) == 1);
    }

    // A(0,n,k) = [k = n]: only the empty tuple, with n orbits
    const auto t0 = CountTable::build(0, 6);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) CHECK(t0.at(n, k) == (k == n ? 1 : 0));
}

TEST_CASE("table matches enumeration on small instances") {
    for (int p = 1; p <= 3; ++p) {
        const auto table = CountTable::build(p, 4);
        for (int n = 0; n <= 4; ++n) {
            const auto hist = oracle::histogram(p, n);
            for (int k = 0; k <= n; ++k) CHECK(table.at(n, k) == hist.counts[k]);
        }
    }
}

TEST_CASE("two routes agree") {
    for (int p = 1; p <= 3; ++p) {
        const auto table = CountTable::build(p, 10);
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(a_count_composition(p, n, k) == table.at(n, k));
    }
    CHECK(a_count_composition(2, 2, 1) == 3);
    CHECK(a_count_composition(2, 3, 3) == 1);
    CHECK(a_count_composition(1, 5, 2) == 50);
}

TEST_CASE("Stirling specialization at p = 1") {
    const auto table = CountTable::build(1, 15);
    for (int n = 0; n <= 15; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(table.at(n, k) == stirling_first_unsigned(n, k));
}

TEST_CASE("reduction identity") {
    CHECK(reduction_rhs(1, 1) == 1);
    CHECK(reduction_rhs(1, 2) == 3);
    CHECK(reduction_rhs(2, 4) == a_transitive(3, 4));
    for (int p = 1; p <= 3; ++p)
        for (long n = 1; n <= 20; ++n)
            CHECK(reduction_rhs(p, n) == a_transitive(p + 1, n));
}

TEST_CASE("totals") {
    for (int n = 0; n <= 6; ++n) CHECK(total_commuting(1, n) == factorial(n));
    CHECK(total_commuting(2, 3) == 18);
    CHECK(total_commuting(3, 3) == 48);
}

TEST_CASE("boundary closed forms") {
    for (int p = 1; p <= 6; ++p) {
        const auto table = CountTable::build(p, 40);
        const Int twop = pow_int(Int(2), p) - 1;
        const Int threep = pow_int(Int(3), p) - 1;
        for (int n = 1; n <= 40; ++n) {
            CHECK(table.at(n, n - 1) == binomial(n, 2) * twop);
            if (n >= 2)
                CHECK(table.at(n, n - 2) ==
                      binomial(n, 3) * threep + binomial(n, 4) * 3 * twop * twop);
        }
    }
}

TEST_CASE("parallel build matches serial build") {
    const auto serial = CountTable::build(2, 80, 1);
    const auto parallel = CountTable::build(2, 80, 4);
    for (int n = 0; n <= 80; ++n)
        for (int k = 0; k <= n; ++k) CHECK(serial.at(n, k) == parallel.at(n, k));
}

TEST_CASE("build_extend picks up where rows leave off") {
    const auto full = CountTable::build(2, 12);
    std::vector<std::vector<Int>> prefix;
    for (int n = 0; n <= 7; ++n) prefix.push_back(full.row(n));
    const auto extended = CountTable::build_extend(2, 12, std::move(prefix));
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(extended.at(n, k) == full.at(n, k));
}

TEST_CASE("csv and jsonl export") {
    const auto table = CountTable::build(2, 2);
    std::ostringstream csv;
    write_csv(csv, table);
    CHECK(csv.str() == "p,n,k,value\n"
                       "2,0,0,1\n"
                       "2,1,0,0\n"
                       "2,1,1,1\n"
                       "2,2,0,0\n"
                       "2,2,1,3\n"
                       "2,2,2,1\n");
    std::ostringstream jsonl;
    write_jsonl(jsonl, table);
    CHECK(jsonl.str().find("{\"p\":2,\"n\":2,\"k\":1,\"value\":\"3\"}") != std::string::npos);
}
