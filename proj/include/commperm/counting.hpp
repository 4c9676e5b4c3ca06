#pragma once

#include <iosfwd>
#include <vector>

#include "commperm/bigint.hpp"

namespace commperm::counting {

// Unsigned Stirling number of the first kind c(n,k), by the triangular
// recurrence c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
Int stirling_first_unsigned(int n, int k);

// A(p,n,1) = (n-1)! * B(p,n): transitive tuples.
Int a_transitive(int p, long n);

// The divisor-sum side of the p+1 -> p reduction:
// sum over rs = n of A(p,s,1) * n!/(r! s!^r) * (r-1)! * s!^{r-1} * s.
// Equals a_transitive(p+1, n).
Int reduction_rhs(int p, long n);

// Full triangle of A(p,n,k) for one p, 0 <= k <= n <= n_max, filled by the
// integer recurrence obtained by conditioning on the orbit of element 1:
//   A(p,n,k) = sum_{m=1}^{n-k+1} C(n-1,m-1) A(p,m,1) A(p,n-m,k-1),
// with A(p,0,0) = 1 and the k = 1 column seeded from a_transitive.
// Immutable once built; safe to share across threads.
class CountTable {
public:
    static CountTable build(int p, int n_max, int jobs = 1);
    // Continue a table whose rows 0..preloaded.size()-1 are already known
    // (cache resume); the preloaded rows are trusted as-is.
    static CountTable build_extend(int p, int n_max, std::vector<std::vector<Int>> preloaded,
                                   int jobs = 1);

    int p() const { return p_; }
    int n_max() const { return n_max_; }
    // A(p,n,k); zero outside 0 <= k <= n <= n_max.
    const Int& at(int n, int k) const;
    const std::vector<Int>& row(int n) const { return rows_[n]; }
    Int row_sum(int n) const;  // |C_{p,n}|
    const Int& b_value(int m) const { return b_[m]; }

private:
    CountTable() = default;
    int p_ = 0;
    int n_max_ = 0;
    std::vector<std::vector<Int>> rows_;  // rows_[n][k]
    std::vector<Int> b_;                  // B(p,m), m = 0 unused
};

// Convenience single-value routes.  a_count builds a table up to n; use
// CountTable directly when sweeping ranges.
Int a_count(int p, int n, int k);

// Independent cross-check route, straight from the composition sum:
//   A(p,n,k) = n!/k! * sum_{n_1+...+n_k = n, n_i >= 1} prod B(p,n_i)/n_i
// accumulated in exact rationals (memoized on remaining (n,k)); throws
// IntegralityError if the result fails to come out integral.
Int a_count_composition(int p, int n, int k);

// sum_k A(p,n,k) = |C_{p,n}|.
Int total_commuting(int p, int n);

// Table export: CSV rows "p,n,k,value" and JSON-lines records
// {"p":..,"n":..,"k":..,"value":".."}; values as decimal strings.
void write_csv(std::ostream& out, const CountTable& table);
void write_jsonl(std::ostream& out, const CountTable& table);

}  // namespace commperm::counting
