#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "commperm/bigint.hpp"
#include "commperm/counting.hpp"

namespace commperm::cache {

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk value cache, versioned line format:
//   commperm-cache 1 <p_max> <n_max>
//   B <p> <n> <decimal>
//   A <p> <n> <k> <decimal>
// Readers reject unknown versions, duplicate keys, malformed records and
// records outside the header bounds.
struct CacheData {
    static constexpr int kVersion = 1;
    int p_max = 0;
    int n_max = 0;
    std::map<std::pair<int, int>, Int> b_values;        // (p,n) -> B(p,n)
    std::map<std::tuple<int, int, int>, Int> a_values;  // (p,n,k) -> A(p,n,k)
};

CacheData read_cache(std::istream& in);                   // throws CacheError
CacheData load_cache_file(const std::string& path);       // throws CacheError (incl. missing)
void write_cache(std::ostream& out, const CacheData& data);
void save_cache_file(const std::string& path, const CacheData& data);

// Fold a finished table into the cache (A triangle plus its B column).
void merge_table(CacheData& data, const counting::CountTable& table);

// Longest contiguous prefix of rows 0..m stored for this p, in the shape
// CountTable::build_extend expects.  Always contains at least row 0.
std::vector<std::vector<Int>> extract_rows(const CacheData& data, int p);

// $COMMPERM_CACHE when set, else "commperm.cache".
std::string default_cache_path();

}  // namespace commperm::cache
