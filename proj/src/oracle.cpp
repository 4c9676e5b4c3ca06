#include "commperm/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace commperm::oracle {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return UINT64_MAX;
    return r;
}

// Partition count p(n) in saturating 64-bit arithmetic, for cost estimates.
std::uint64_t partition_count_u64(int n) {
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) {
            std::uint64_t s = p[m] + p[m - part];
            p[m] = s < p[m] ? UINT64_MAX : s;
        }
    return p[n];
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> all;
    do {
        all.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return all;
}

void extend_tuple(int p, int n, std::vector<Permutation>& prefix,
                  const std::vector<Permutation>& candidates,
                  const std::function<void(const CommutingTuple&)>& visit) {
    if (static_cast<int>(prefix.size()) == p) {
        visit(CommutingTuple(unchecked, n, prefix));
        return;
    }
    const bool last_level = static_cast<int>(prefix.size()) + 1 == p;
    for (const Permutation& sigma : candidates) {
        prefix.push_back(sigma);
        if (last_level) {
            visit(CommutingTuple(unchecked, n, prefix));
        } else {
            // centralizer of the extended prefix, by filtering
            std::vector<Permutation> next;
            next.reserve(candidates.size());
            for (const Permutation& c : candidates)
                if (commutes(c, sigma)) next.push_back(c);
            extend_tuple(p, n, prefix, next, visit);
        }
        prefix.pop_back();
    }
}

}  // namespace

std::uint64_t estimated_steps(int p, int n) {
    if (p <= 0 || n <= 1) return 1;
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact = saturating_mul(fact, static_cast<std::uint64_t>(i));
    std::uint64_t steps = fact;
    const std::uint64_t mean_centralizer = partition_count_u64(n);
    for (int i = 1; i < p; ++i) steps = saturating_mul(steps, mean_centralizer);
    return steps;
}

void enumerate_commuting(int p, int n, const std::function<void(const CommutingTuple&)>& visit,
                         Budget budget) {
    if (p < 0 || n < 0) throw std::invalid_argument("enumerate_commuting: negative argument");
    if (const auto est = estimated_steps(p, n); est > budget.max_steps) throw BudgetError(est);
    if (p == 0) {
        visit(CommutingTuple(unchecked, n, {}));
        return;
    }
    std::vector<Permutation> prefix;
    extend_tuple(p, n, prefix, symmetric_group(n), visit);
}

void enumerate_transitive(int p, int n, const std::function<void(const CommutingTuple&)>& visit,
                          Budget budget) {
    enumerate_commuting(
        p, n,
        [&](const CommutingTuple& t) {
            if (is_transitive(t)) visit(t);
        },
        budget);
}

Int OrbitHistogram::total() const {
    Int s = 0;
    for (const Int& c : counts) s += c;
    return s;
}

OrbitHistogram histogram(int p, int n, Budget budget) {
    OrbitHistogram h;
    h.p = p;
    h.n = n;
    h.counts.assign(n + 1, Int(0));
    enumerate_commuting(
        p, n, [&](const CommutingTuple& t) { h.counts[orbit_partition(t).block_count()] += 1; },
        budget);
    return h;
}

void write_csv(std::ostream& out, const OrbitHistogram& hist) {
    out << "p,n,k,value\n";
    for (int k = 0; k <= hist.n; ++k)
        out << hist.p << ',' << hist.n << ',' << k << ',' << to_decimal(hist.counts[k]) << '\n';
}

void write_jsonl(std::ostream& out, const OrbitHistogram& hist) {
    for (int k = 0; k <= hist.n; ++k)
        out << "{\"p\":" << hist.p << ",\"n\":" << hist.n << ",\"k\":" << k << ",\"value\":\""
            << to_decimal(hist.counts[k]) << "\"}\n";
}

}  // namespace commperm::oracle
