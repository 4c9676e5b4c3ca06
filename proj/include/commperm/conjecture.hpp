#pragma once

#include <string>
#include <vector>

#include "commperm/bigint.hpp"
#include "commperm/counting.hpp"

namespace commperm::conjecture {

struct Violation {
    int n = 0;
    int k = 0;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct SweepReport {
    int p = 0;
    int n_max = 0;
    long long cells_checked = 0;
    long long wall_time_ms = 0;
    std::vector<Violation> violations;  // sorted by (n, k)
    bool clean() const { return violations.empty(); }
};

// Checks A(p,n,k)^2 >= A(p,n,k-1) A(p,n,k+1) for 3 <= n <= n_max and
// 2 <= k <= n-1, by exact integer comparison.  A violation is a
// counterexample candidate, to be confirmed against the enumeration oracle
// before being believed.
SweepReport logconcavity_sweep(int p, int n_max, int jobs = 1);
SweepReport logconcavity_sweep(const counting::CountTable& table);

// [C(n,2)^2 - 3 C(n,4)] (2^p-1)^2 - C(n,3) (3^p-1); equals
// A(p,n,n-1)^2 - A(p,n,n) A(p,n,n-2).
Int delta_closed_form(int p, long n);

// (2^p - 1)^2 >= 3^p - 1 (holds for every p >= 2).
bool power_inequality_holds(int p);

struct PropositionReport {
    bool ok = true;
    std::string failure;  // human-readable description of the first failure
};

// Checks delta_closed_form against the table Delta and Delta > 0 for all
// 1 <= p <= p_max, 3 <= n <= n_max, plus the scalar power inequality for
// 2 <= p <= 60.
PropositionReport proposition_check(int p_max, int n_max);

std::string sweep_report_json(const SweepReport& report);
std::string sweep_report_human(const SweepReport& report);

}  // namespace commperm::conjecture
