#include "commperm/counting.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "commperm/numtheory.hpp"

namespace commperm::counting {

Int stirling_first_unsigned(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("stirling_first_unsigned: need 0 <= k <= n");
    std::vector<Int> row{1};  // c(0, .)
    for (int m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, Int(0));
        for (int j = 1; j <= m; ++j) {
            next[j] = row[j - 1];
            if (j < m) next[j] += (m - 1) * row[j];
        }
        next[0] = 0;
        row = std::move(next);
    }
    return row[k];
}

Int a_transitive(int p, long n) {
    if (p < 1 || n < 1) throw std::invalid_argument("a_transitive: bad arguments");
    return factorial(n - 1) * nt::b_multiplicative(p, n);
}

Int reduction_rhs(int p, long n) {
    if (p < 1 || n < 1) throw std::invalid_argument("reduction_rhs: bad arguments");
    Int total = 0;
    const Int n_fact = factorial(n);
    for (long r : nt::divisors(n)) {
        const long s = n / r;
        const Int s_fact = factorial(s);
        Int set_partitions = exact_div(n_fact, factorial(r) * pow_int(s_fact, r));
        total += a_transitive(p, s) * set_partitions * factorial(r - 1) *
                 pow_int(s_fact, r - 1) * s;
    }
    return total;
}

const Int& CountTable::at(int n, int k) const {
    static const Int zero = 0;
    if (n < 0 || n > n_max_ || k < 0 || k > n) return zero;
    return rows_[n][k];
}

Int CountTable::row_sum(int n) const {
    Int s = 0;
    for (const Int& v : rows_[n]) s += v;
    return s;
}

CountTable CountTable::build(int p, int n_max, int jobs) {
    return build_extend(p, n_max, {{Int(1)}}, jobs);
}

CountTable CountTable::build_extend(int p, int n_max, std::vector<std::vector<Int>> preloaded,
                                    int jobs) {
    if (p < 0 || n_max < 0) throw std::invalid_argument("CountTable: bad arguments");
    if (jobs < 1) jobs = 1;
    CountTable t;
    t.p_ = p;
    t.n_max_ = n_max;
    t.b_.assign(n_max + 1, Int(0));
    for (int m = 1; m <= n_max; ++m) t.b_[m] = nt::b_multiplicative(p, m);

    t.rows_ = std::move(preloaded);
    if (t.rows_.empty() || t.rows_[0] != std::vector<Int>{Int(1)})
        throw std::invalid_argument("CountTable: preloaded rows must start with A(p,0,0) = 1");
    for (std::size_t n = 0; n < t.rows_.size(); ++n)
        if (t.rows_[n].size() != n + 1)
            throw std::invalid_argument("CountTable: malformed preloaded row");
    if (static_cast<int>(t.rows_.size()) > n_max + 1) t.rows_.resize(n_max + 1);

    for (int n = static_cast<int>(t.rows_.size()); n <= n_max; ++n) {
        std::vector<Int>& row = t.rows_.emplace_back(n + 1, Int(0));
        row[1] = factorial(n - 1) * t.b_[n];
        // coef[m] = C(n-1,m-1) A(p,m,1) = B(p,m) * (n-1)(n-2)...(n-m+1)
        std::vector<Int> coef(n + 1);
        Int falling = 1;
        for (int m = 1; m <= n; ++m) {
            coef[m] = t.b_[m] * falling;
            falling *= n - m;
        }
        auto fill_cell = [&](int k) {
            Int acc = 0;
            for (int m = 1; m <= n - k + 1; ++m)
                acc += coef[m] * t.rows_[n - m][k - 1];
            row[k] = std::move(acc);
        };
        // cells of one row depend only on earlier rows, so k splits cleanly
        if (jobs > 1 && n >= 64) {
            std::vector<std::thread> workers;
            for (int w = 0; w < jobs; ++w)
                workers.emplace_back([&, w] {
                    for (int k = 2 + w; k <= n; k += jobs) fill_cell(k);
                });
            for (auto& th : workers) th.join();
        } else {
            for (int k = 2; k <= n; ++k) fill_cell(k);
        }
    }
    return t;
}

Int a_count(int p, int n, int k) {
    if (p < 0 || n < 0) throw std::invalid_argument("a_count: bad arguments");
    if (k < 0 || k > n) return 0;
    return CountTable::build(p, n).at(n, k);
}

Int a_count_composition(int p, int n, int k) {
    if (p < 1 || n < 0 || k < 0) throw std::invalid_argument("a_count_composition: bad arguments");
    if (k > n) return 0;
    // B from the flag-sum route, so this path shares nothing with the
    // table builder but the definition of the answer.
    std::vector<Rat> b_over(n + 1);
    for (int m = 1; m <= n; ++m) b_over[m] = Rat(nt::b_flag_sum(p, m)) / m;

    // weight(n,k) = sum over compositions (n_1..n_k) of n of prod B(p,n_i)/n_i
    std::map<std::pair<int, int>, Rat> memo;
    auto weight = [&](auto&& self, int rem_n, int rem_k) -> Rat {
        if (rem_k == 0) return rem_n == 0 ? Rat(1) : Rat(0);
        if (rem_n < rem_k) return 0;
        if (auto it = memo.find({rem_n, rem_k}); it != memo.end()) return it->second;
        Rat acc = 0;
        for (int m = 1; m <= rem_n - rem_k + 1; ++m)
            acc += b_over[m] * self(self, rem_n - m, rem_k - 1);
        memo.emplace(std::pair{rem_n, rem_k}, acc);
        return acc;
    };
    Rat value = Rat(factorial(n)) / factorial(k) * weight(weight, n, k);
    return rat_to_int(value);  // throws if the composition sum fails integrality
}

Int total_commuting(int p, int n) {
    if (p < 0 || n < 0) throw std::invalid_argument("total_commuting: bad arguments");
    return CountTable::build(p, n).row_sum(n);
}

void write_csv(std::ostream& out, const CountTable& table) {
    out << "p,n,k,value\n";
    for (int n = 0; n <= table.n_max(); ++n)
        for (int k = 0; k <= n; ++k)
            out << table.p() << ',' << n << ',' << k << ',' << to_decimal(table.at(n, k)) << '\n';
}

void write_jsonl(std::ostream& out, const CountTable& table) {
    for (int n = 0; n <= table.n_max(); ++n)
        for (int k = 0; k <= n; ++k)
            out << "{\"p\":" << table.p() << ",\"n\":" << n << ",\"k\":" << k << ",\"value\":\""
                << to_decimal(table.at(n, k)) << "\"}\n";
}

}  // namespace commperm::counting
