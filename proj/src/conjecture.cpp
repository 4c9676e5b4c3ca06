#include "commperm/conjecture.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace commperm::conjecture {

SweepReport logconcavity_sweep(const counting::CountTable& table) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.p = table.p();
    report.n_max = table.n_max();
    for (int n = 3; n <= table.n_max(); ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            ++report.cells_checked;
            if (table.at(n, k) * table.at(n, k) < table.at(n, k - 1) * table.at(n, k + 1))
                report.violations.push_back({n, k});
        }
    }
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
}

SweepReport logconcavity_sweep(int p, int n_max, int jobs) {
    if (p < 1 || n_max < 3) throw std::invalid_argument("logconcavity_sweep: bad arguments");
    const auto start = std::chrono::steady_clock::now();
    const auto table = counting::CountTable::build(p, n_max, jobs);
    SweepReport report = logconcavity_sweep(table);
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
}

Int delta_closed_form(int p, long n) {
    if (p < 1 || n < 3) throw std::invalid_argument("delta_closed_form: bad arguments");
    const Int two_term = pow_int(Int(2), p) - 1;
    const Int three_term = pow_int(Int(3), p) - 1;
    const Int c2 = binomial(n, 2);
    return (c2 * c2 - 3 * binomial(n, 4)) * two_term * two_term - binomial(n, 3) * three_term;
}

bool power_inequality_holds(int p) {
    const Int lhs = pow_int(Int(2), p) - 1;
    return lhs * lhs >= pow_int(Int(3), p) - 1;
}

PropositionReport proposition_check(int p_max, int n_max) {
    if (p_max < 1 || n_max < 3) throw std::invalid_argument("proposition_check: bad arguments");
    PropositionReport report;
    for (int p = 2; p <= 60; ++p) {
        if (!power_inequality_holds(p)) {
            report.ok = false;
            report.failure = "(2^p-1)^2 >= 3^p-1 fails at p = " + std::to_string(p);
            return report;
        }
    }
    for (int p = 1; p <= p_max; ++p) {
        const auto table = counting::CountTable::build(p, n_max);
        for (int n = 3; n <= n_max; ++n) {
            const Int table_delta =
                table.at(n, n - 1) * table.at(n, n - 1) - table.at(n, n) * table.at(n, n - 2);
            const Int closed = delta_closed_form(p, n);
            if (table_delta != closed) {
                report.ok = false;
                report.failure = "closed form disagrees with table at p = " + std::to_string(p) +
                                 ", n = " + std::to_string(n);
                return report;
            }
            if (closed <= 0) {
                report.ok = false;
                report.failure =
                    "Delta(p,n) <= 0 at p = " + std::to_string(p) + ", n = " + std::to_string(n);
                return report;
            }
        }
    }
    return report;
}

std::string sweep_report_json(const SweepReport& report) {
    std::ostringstream out;
    out << "{\"p\":" << report.p << ",\"n_max\":" << report.n_max
        << ",\"max_n_checked\":" << report.n_max << ",\"cells_checked\":" << report.cells_checked
        << ",\"violations\":[";
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
        if (i) out << ',';
        out << "{\"n\":" << report.violations[i].n << ",\"k\":" << report.violations[i].k << '}';
    }
    out << "],\"wall_time_ms\":" << report.wall_time_ms << '}';
    return out.str();
}

std::string sweep_report_human(const SweepReport& report) {
    std::ostringstream out;
    out << "log-concavity sweep: p = " << report.p << ", 3 <= n <= " << report.n_max << "\n"
        << "cells checked: " << report.cells_checked << "\n";
    if (report.clean()) {
        out << "0 violations\n";
    } else {
        out << report.violations.size()
            << " violation(s) -- counterexample candidate(s), confirm against the enumeration "
               "oracle:\n";
        for (const auto& v : report.violations)
            out << "  n = " << v.n << ", k = " << v.k << "\n";
    }
    out << "wall time: " << report.wall_time_ms << " ms\n";
    return out.str();
}

}  // namespace commperm::conjecture
