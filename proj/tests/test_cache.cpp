#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "commperm/cache.hpp"

using namespace commperm;
using namespace commperm::cache;

TEST_CASE("cache round trip is bit-exact") {
    CacheData data;
    merge_table(data, counting::CountTable::build(2, 8));
    merge_table(data, counting::CountTable::build(3, 5));

    std::stringstream buffer;
    write_cache(buffer, data);
    const std::string first = buffer.str();

    const CacheData reread = read_cache(buffer);
    CHECK(reread.p_max == data.p_max);
    CHECK(reread.n_max == data.n_max);
    CHECK(reread.a_values == data.a_values);
    CHECK(reread.b_values == data.b_values);

    std::ostringstream again;
    write_cache(again, reread);
    CHECK(again.str() == first);
}

TEST_CASE("extract_rows returns the contiguous prefix") {
    CacheData data;
    const auto table = counting::CountTable::build(2, 6);
    merge_table(data, table);

    auto rows = extract_rows(data, 2);
    REQUIRE(rows.size() == 7);
    for (int n = 0; n <= 6; ++n) CHECK(rows[n] == table.row(n));

    // a hole stops the prefix
    data.a_values.erase({2, 4, 2});
    rows = extract_rows(data, 2);
    CHECK(rows.size() == 4);

    // unknown p yields just the seed row
    CHECK(extract_rows(data, 9).size() == 1);

    // extending from the cached prefix matches a fresh build
    const auto resumed = counting::CountTable::build_extend(2, 6, extract_rows(data, 2));
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) CHECK(resumed.at(n, k) == table.at(n, k));
}

TEST_CASE("corrupted caches are rejected") {
    auto expect_error = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_cache(in), CacheError);
    };
    expect_error("");                                   // empty
    expect_error("something-else 1 2 2\nB 1 1 1\n");    // bad magic
    expect_error("commperm-cache 99 2 2\nB 1 1 1\n");   // future version
    expect_error("commperm-cache 1 2 2\nB 1 1 1\nB 1 1 1\n");    // duplicate key
    expect_error("commperm-cache 1 2 2\nB 1 1 -4\n");            // negative value
    expect_error("commperm-cache 1 2 2\nB 1 1 12x\n");           // junk value
    expect_error("commperm-cache 1 2 2\nA 1 1 2 1\n");           // k > n
    expect_error("commperm-cache 1 2 2\nB 1 9 1\n");             // out of bounds
    expect_error("commperm-cache 1 2 2\nC 1 1 1\n");             // unknown kind
    expect_error("commperm-cache 1 2 2\nB 1 1 1 7\n");           // trailing token

    std::istringstream good("commperm-cache 1 2 2\nB 1 2 1\nA 1 2 1 1\n");
    CHECK_NOTHROW(read_cache(good));
}

TEST_CASE("file save and load") {
    const std::string path = "test_cache_roundtrip.tmp";
    CacheData data;
    merge_table(data, counting::CountTable::build(1, 4));
    save_cache_file(path, data);
    const CacheData loaded = load_cache_file(path);
    CHECK(loaded.a_values == data.a_values);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_cache_file(path), CacheError);
}

TEST_CASE("default path honors the environment") {
    unsetenv("COMMPERM_CACHE");
    CHECK(default_cache_path() == "commperm.cache");
    setenv("COMMPERM_CACHE", "/tmp/somewhere.cache", 1);
    CHECK(default_cache_path() == "/tmp/somewhere.cache");
    unsetenv("COMMPERM_CACHE");
}
