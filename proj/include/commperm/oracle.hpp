#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "commperm/bigint.hpp"
#include "commperm/perm_core.hpp"

namespace commperm::oracle {

// The enumeration refuses to start when its estimated work exceeds this
// many tuple-steps (default 1e9).  Intended budget: n <= 7, p <= 3.
struct Budget {
    std::uint64_t max_steps = 1'000'000'000;
};

struct BudgetError : std::runtime_error {
    std::uint64_t estimated_steps;
    explicit BudgetError(std::uint64_t est)
        : std::runtime_error("oracle: estimated " + std::to_string(est) +
                             " tuple-steps exceeds the enumeration budget"),
          estimated_steps(est) {}
};

// Upper bound n! * (mean centralizer size)^{p-1}; the mean centralizer size
// in S_n is the number of conjugacy classes, i.e. the partition count p(n).
// Saturates at UINT64_MAX.
std::uint64_t estimated_steps(int p, int n);

// Visit every commuting p-tuple on {0,...,n-1} exactly once.  Tuples are
// built by the centralizer chain: sigma_1 runs over S_n, sigma_2 over the
// centralizer of sigma_1, sigma_3 over the centralizer of {sigma_1, sigma_2},
// and so on, each centralizer obtained by plain filtering.
void enumerate_commuting(int p, int n, const std::function<void(const CommutingTuple&)>& visit,
                         Budget budget = {});

// The transitive subset of enumerate_commuting; visit count is A(p,n,1).
void enumerate_transitive(int p, int n, const std::function<void(const CommutingTuple&)>& visit,
                          Budget budget = {});

struct OrbitHistogram {
    int p = 0;
    int n = 0;
    std::vector<Int> counts;  // counts[k] = #tuples with k orbits, k = 0..n
    Int total() const;
    friend bool operator==(const OrbitHistogram&, const OrbitHistogram&) = default;
};

// counts[k] = |{ commuting p-tuples on [n] with exactly k orbits }|.
OrbitHistogram histogram(int p, int n, Budget budget = {});

// Same row shape as the CountTable exports, so the two diff cleanly.
void write_csv(std::ostream& out, const OrbitHistogram& hist);
void write_jsonl(std::ostream& out, const OrbitHistogram& hist);

}  // namespace commperm::oracle
