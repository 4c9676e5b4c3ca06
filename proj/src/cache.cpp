#include "commperm/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace commperm::cache {

namespace {

Int parse_value(const std::string& token, int lineno) {
    try {
        return parse_decimal(token);
    } catch (const std::exception&) {
        throw CacheError("cache: bad value on line " + std::to_string(lineno));
    }
}

bool has_extra_tokens(std::istringstream& rec) {
    std::string extra;
    return static_cast<bool>(rec >> extra);
}

}  // namespace

CacheData read_cache(std::istream& in) {
    CacheData data;
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw CacheError("cache: empty file");
    ++lineno;
    {
        std::istringstream head(line);
        std::string magic;
        int version = -1;
        if (!(head >> magic >> version >> data.p_max >> data.n_max) || magic != "commperm-cache")
            throw CacheError("cache: bad header");
        if (version != CacheData::kVersion)
            throw CacheError("cache: unsupported format version " + std::to_string(version));
        if (data.p_max < 0 || data.n_max < 0) throw CacheError("cache: negative header bounds");
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream rec(line);
        std::string kind, value;
        rec >> kind;
        if (kind == "B") {
            int p, n;
            if (!(rec >> p >> n >> value) || has_extra_tokens(rec))
                throw CacheError("cache: malformed B record on line " + std::to_string(lineno));
            if (p < 0 || p > data.p_max || n < 0 || n > data.n_max)
                throw CacheError("cache: B record out of bounds on line " + std::to_string(lineno));
            if (!data.b_values.emplace(std::pair{p, n}, parse_value(value, lineno)).second)
                throw CacheError("cache: duplicate B key on line " + std::to_string(lineno));
        } else if (kind == "A") {
            int p, n, k;
            if (!(rec >> p >> n >> k >> value) || has_extra_tokens(rec))
                throw CacheError("cache: malformed A record on line " + std::to_string(lineno));
            if (p < 0 || p > data.p_max || n < 0 || n > data.n_max || k < 0 || k > n)
                throw CacheError("cache: A record out of bounds on line " + std::to_string(lineno));
            if (!data.a_values.emplace(std::tuple{p, n, k}, parse_value(value, lineno)).second)
                throw CacheError("cache: duplicate A key on line " + std::to_string(lineno));
        } else {
            throw CacheError("cache: unknown record kind on line " + std::to_string(lineno));
        }
    }
    return data;
}

CacheData load_cache_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cache: cannot open " + path);
    return read_cache(in);
}

void write_cache(std::ostream& out, const CacheData& data) {
    out << "commperm-cache " << CacheData::kVersion << ' ' << data.p_max << ' ' << data.n_max
        << '\n';
    for (const auto& [key, value] : data.b_values)
        out << "B " << key.first << ' ' << key.second << ' ' << to_decimal(value) << '\n';
    for (const auto& [key, value] : data.a_values)
        out << "A " << std::get<0>(key) << ' ' << std::get<1>(key) << ' ' << std::get<2>(key)
            << ' ' << to_decimal(value) << '\n';
}

void save_cache_file(const std::string& path, const CacheData& data) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw CacheError("cache: cannot write " + tmp);
        write_cache(out, data);
        if (!out) throw CacheError("cache: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw CacheError("cache: cannot move " + tmp + " into place");
}

void merge_table(CacheData& data, const counting::CountTable& table) {
    const int p = table.p();
    data.p_max = std::max(data.p_max, p);
    data.n_max = std::max(data.n_max, table.n_max());
    for (int m = 1; m <= table.n_max(); ++m)
        data.b_values.insert_or_assign({p, m}, table.b_value(m));
    for (int n = 0; n <= table.n_max(); ++n)
        for (int k = 0; k <= n; ++k) data.a_values.insert_or_assign({p, n, k}, table.at(n, k));
}

std::vector<std::vector<Int>> extract_rows(const CacheData& data, int p) {
    std::vector<std::vector<Int>> rows{{Int(1)}};
    for (int n = 1;; ++n) {
        std::vector<Int> row(n + 1);
        for (int k = 0; k <= n; ++k) {
            auto it = data.a_values.find({p, n, k});
            if (it == data.a_values.end()) return rows;
            row[k] = it->second;
        }
        rows.push_back(std::move(row));
    }
}

std::string default_cache_path() {
    if (const char* env = std::getenv("COMMPERM_CACHE"); env && *env) return env;
    return "commperm.cache";
}

}  // namespace commperm::cache
