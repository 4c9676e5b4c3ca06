#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "commperm/perm_core.hpp"

using namespace commperm;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace

TEST_CASE("compose basics") {
    const auto id3 = Permutation::identity(3);
    CHECK(compose(id3, id3) == id3);

    const auto swap2 = Permutation::transposition(2, 0, 1);
    CHECK(compose(swap2, swap2) == Permutation::identity(2));

    const auto c123 = Permutation::from_cycles(3, {{0, 1, 2}});
    const auto c132 = Permutation::from_cycles(3, {{0, 2, 1}});
    CHECK(compose(c123, c132) == id3);

    CHECK_THROWS_AS(compose(id3, swap2), std::invalid_argument);
}

TEST_CASE("compose is associative and inverse cancels") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 7;
        const auto a = random_permutation(n, rng);
        const auto b = random_permutation(n, rng);
        const auto c = random_permutation(n, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, a.inverse()) == Permutation::identity(n));
        CHECK(compose(a.inverse(), a) == Permutation::identity(n));
    }
}

TEST_CASE("commutes") {
    std::mt19937 rng(99);
    const auto sigma = random_permutation(5, rng);
    CHECK(commutes(Permutation::identity(5), sigma));

    CHECK(commutes(Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})));
    CHECK_FALSE(commutes(Permutation::from_cycles(3, {{0, 1}}),
                         Permutation::from_cycles(3, {{1, 2}})));
}

TEST_CASE("permutation validation and one-based round trip") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);

    const auto c = Permutation::from_cycles(3, {{0, 1, 2}});
    CHECK(c.to_one_based() == "2 3 1");
    CHECK(Permutation::parse_one_based("2 3 1") == c);
    CHECK_THROWS_AS(Permutation::parse_one_based("2 3 x"), std::invalid_argument);
}

TEST_CASE("orbit partition") {
    SUBCASE("empty tuple gives singletons") {
        const auto part = orbit_partition(CommutingTuple(3, {}));
        CHECK(part.block_count() == 3);
        for (int b = 0; b < 3; ++b) CHECK(part.block(b) == std::vector<int>{b});
    }
    SUBCASE("a 3-cycle is transitive") {
        const CommutingTuple t(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
        CHECK(orbit_partition(t).block_count() == 1);
        CHECK(is_transitive(t));
    }
    SUBCASE("transposition plus identity") {
        const CommutingTuple t(3, {Permutation::from_cycles(3, {{0, 1}}),
                                   Permutation::identity(3)});
        const auto part = orbit_partition(t);
        REQUIRE(part.block_count() == 2);
        CHECK(part.block(0) == std::vector<int>{0, 1});
        CHECK(part.block(1) == std::vector<int>{2});
        CHECK(part.block_of(1) == 0);
        CHECK(part.block_of(2) == 1);
    }
    SUBCASE("single point always transitive") {
        CHECK(is_transitive(CommutingTuple(1, {})));
        CHECK(is_transitive(CommutingTuple(1, {Permutation::identity(1)})));
    }
    SUBCASE("identity is not transitive on two points") {
        CHECK_FALSE(is_transitive(CommutingTuple(2, {Permutation::identity(2)})));
    }
}

TEST_CASE("orbit partition ignores generator order and inversion") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 6;
        // independent generators need not commute for orbits to make sense
        std::vector<Permutation> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(random_permutation(n, rng));
        const auto base = orbit_partition(CommutingTuple(unchecked, n, gens));

        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(orbit_partition(CommutingTuple(unchecked, n, shuffled)) == base);

        auto inverted = gens;
        inverted[trial % 3] = inverted[trial % 3].inverse();
        CHECK(orbit_partition(CommutingTuple(unchecked, n, inverted)) == base);

        int covered = 0;
        for (int b = 0; b < base.block_count(); ++b)
            covered += static_cast<int>(base.block(b).size());
        CHECK(covered == n);
        for (int b = 1; b < base.block_count(); ++b)
            CHECK(base.block(b - 1).front() < base.block(b).front());
    }
}

TEST_CASE("commuting tuple validation") {
    CHECK_THROWS_AS(CommutingTuple(3, {Permutation::from_cycles(3, {{0, 1}}),
                                       Permutation::from_cycles(3, {{1, 2}})}),
                    std::invalid_argument);
    CHECK_NOTHROW(CommutingTuple(4, {Permutation::from_cycles(4, {{0, 1}}),
                                     Permutation::from_cycles(4, {{2, 3}})}));
}

TEST_CASE("block maps") {
    SUBCASE("restrict identity") {
        const auto m = restrict_to(Permutation::identity(4), {0, 1});
        CHECK(m == BlockMap::identity_on({0, 1}));
    }
    SUBCASE("restrict a 4-cycle to odd positions") {
        // (1 2 3 4) restricted to {1,3} in 1-based terms: 1 -> 2, 3 -> 4
        const auto sigma = Permutation::from_cycles(4, {{0, 1, 2, 3}});
        const auto m = restrict_to(sigma, {0, 2});
        CHECK(m.apply(0) == 1);
        CHECK(m.apply(2) == 3);
        CHECK(m.target() == std::vector<int>{1, 3});
    }
    SUBCASE("restrict a swap to its support") {
        const auto m = restrict_to(Permutation::from_cycles(2, {{0, 1}}), {0, 1});
        CHECK(m.apply(0) == 1);
        CHECK(m.apply(1) == 0);
        CHECK(m.target() == m.source());
    }
    SUBCASE("inverse and compose") {
        const auto sigma = Permutation::from_cycles(5, {{0, 2, 4}});
        const auto m = restrict_to(sigma, {0, 2, 4});
        CHECK(compose(m.inverse(), m) == BlockMap::identity_on({0, 2, 4}));
    }
    SUBCASE("relabel round trip") {
        const auto sigma = Permutation::from_cycles(6, {{1, 3, 5}});
        const auto m = restrict_to(sigma, {1, 3, 5});
        const auto relabeled = as_permutation(m);
        CHECK(relabeled == Permutation::from_cycles(3, {{0, 1, 2}}));
        CHECK(lift_to_block({1, 3, 5}, relabeled) == m);
    }
    SUBCASE("apply outside source throws") {
        const auto m = BlockMap::identity_on({0, 1});
        CHECK_THROWS_AS(m.apply(2), std::invalid_argument);
    }
}
