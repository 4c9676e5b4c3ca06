// Command line front end: exact values of A(p,n,k) and B(p,n), polynomial
// output, identity verification suites, log-concavity sweeps, and the
// persistent value cache.
//
// Exit codes: 0 success/verified, 1 usage error, 2 verification mismatch,
// 3 enumeration budget refusal.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include "commperm/bigint.hpp"
#include "commperm/bijection.hpp"
#include "commperm/cache.hpp"
#include "commperm/conjecture.hpp"
#include "commperm/counting.hpp"
#include "commperm/numtheory.hpp"
#include "commperm/oracle.hpp"
#include "commperm/series_poly.hpp"

namespace {

using namespace commperm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_b(int p, long n, const std::string& method) {
    Int value;
    if (method == "multiplicative") value = nt::b_multiplicative(p, n);
    else if (method == "flag") value = nt::b_flag_sum(p, n);
    else value = nt::b_dirichlet(p, n);
    std::cout << to_decimal(value) << "\n";
    return kExitOk;
}

int run_a(int p, int n, int k, int table_n_max, const std::string& format, int jobs) {
    if (table_n_max >= 0) {
        const auto table = counting::CountTable::build(p, table_n_max, jobs);
        if (format == "csv") {
            counting::write_csv(std::cout, table);
        } else if (format == "json") {
            counting::write_jsonl(std::cout, table);
        } else {
            std::cout << "# A(p,n,k) for p = " << p << ", n <= " << table_n_max << "\n";
            for (int row = 0; row <= table_n_max; ++row)
                for (int col = 0; col <= row; ++col)
                    std::cout << p << ' ' << row << ' ' << col << ' '
                              << to_decimal(table.at(row, col)) << "\n";
        }
        return kExitOk;
    }
    std::cout << to_decimal(counting::a_count(p, n, k)) << "\n";
    return kExitOk;
}

int run_poly(const std::string& label, int n, const series::RatPolynomial& poly,
             const std::string& format) {
    if (format == "json") std::cout << series::poly_to_json(n, poly) << "\n";
    else std::cout << label << "_" << n << "(x) = " << poly.to_pretty() << "\n";
    return kExitOk;
}

int run_verify_oracle(int p, int n, std::uint64_t max_steps, const std::string& format) {
    const auto table = counting::CountTable::build(p, n);
    const auto hist = oracle::histogram(p, n, {max_steps});
    bool ok = true;
    for (int k = 0; k <= n; ++k) {
        if (table.at(n, k) != hist.counts[k]) {
            ok = false;
            if (format == "human")
                std::cout << "MISMATCH at k = " << k << ": table " << to_decimal(table.at(n, k))
                          << ", enumeration " << to_decimal(hist.counts[k]) << "\n";
        }
    }
    if (format == "csv") oracle::write_csv(std::cout, hist);
    else if (format == "json") oracle::write_jsonl(std::cout, hist);
    else
        std::cout << (ok ? "PASS" : "FAIL") << ": enumeration vs table, p = " << p
                  << ", n = " << n << " (" << to_decimal(hist.total()) << " tuples)\n";
    return ok ? kExitOk : kExitMismatch;
}

int run_verify_bijection(int p, int n, std::uint64_t max_steps) {
    // phase 1: reconstruct(decompose(t)) == t over all transitive (p+1)-tuples
    long round_trips = 0;
    bool ok = true;
    oracle::enumerate_transitive(p + 1, n,
                                 [&](const CommutingTuple& t) {
                                     const auto w = bijection::decompose(t);
                                     if (bijection::reconstruct(w) != t) {
                                         ok = false;
                                         std::cout << "MISMATCH: round trip failed\n";
                                     }
                                     ++round_trips;
                                 },
                                 {max_steps});
    std::cout << (ok ? "PASS" : "FAIL") << ": " << round_trips
              << " round trips on transitive (p+1)-tuples, p = " << p << ", n = " << n << "\n";

    // phase 2: witness counts reproduce each factor of the reduction formula
    Int across_all = 0;
    for (long r : nt::divisors(n)) {
        const long s = n / r;
        Int per_partition = 0;
        int partitions = 0;
        bijection::for_each_equal_partition(n, static_cast<int>(r), [&](const OrbitPartition& X) {
            ++partitions;
            Int count = 0;
            bijection::for_each_witness(p, X, [&](const bijection::BijectionWitness&) { ++count; });
            per_partition = count;
            across_all += count;
        });
        const Int expected = bijection::witness_count_formula(p, r, s);
        const bool match = per_partition == expected || partitions == 0;
        if (!match) ok = false;
        std::cout << (match ? "PASS" : "FAIL") << ": r = " << r << ", s = " << s << ": "
                  << to_decimal(per_partition) << " witnesses per partition (expected "
                  << to_decimal(expected) << ", " << partitions << " partitions)\n";
    }
    const Int transitive_total = counting::a_transitive(p + 1, n);
    const bool total_match = across_all == transitive_total;
    if (!total_match) ok = false;
    std::cout << (total_match ? "PASS" : "FAIL") << ": " << to_decimal(across_all)
              << " witnesses in total vs A(p+1,n,1) = " << to_decimal(transitive_total) << "\n";
    return ok ? kExitOk : kExitMismatch;
}

int run_verify_bryanfulman(int p, int order) {
    const auto report = series::verify_bryan_fulman(p, order);
    if (report.ok) {
        std::cout << "PASS: product and tuple series agree to order " << order << " for p = " << p
                  << "\n";
        return kExitOk;
    }
    std::cout << "FAIL: first mismatch at n = " << report.n << ", k = " << report.k
              << ": product side " << rat_to_string(report.lhs) << ", tuple side "
              << rat_to_string(report.rhs) << "\n";
    return kExitMismatch;
}

int run_verify_shift(int n_max) {
    const auto report = series::shift_check(n_max);
    if (report.ok) {
        std::cout << "PASS: Q_n(x) = P_n(x+1) for all n <= " << n_max << "\n";
        return kExitOk;
    }
    std::cout << "FAIL: shift identity breaks first at n = " << report.first_failure << "\n";
    return kExitMismatch;
}

int run_verify_reduction(int p_max, int n_max) {
    bool ok = true;
    for (int p = 1; p <= p_max; ++p)
        for (long n = 1; n <= n_max; ++n)
            if (counting::a_transitive(p + 1, n) != counting::reduction_rhs(p, n)) {
                ok = false;
                std::cout << "MISMATCH at p = " << p << ", n = " << n << "\n";
            }
    std::cout << (ok ? "PASS" : "FAIL") << ": A(p+1,n,1) agrees with the divisor sum for p <= "
              << p_max << ", n <= " << n_max << "\n";
    return ok ? kExitOk : kExitMismatch;
}

int run_conjecture(int p, int n_max, int jobs, bool resume, const std::string& cache_path,
                   const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    counting::CountTable table = [&] {
        if (resume) {
            cache::CacheData data;
            try {
                data = cache::load_cache_file(cache_path);
            } catch (const cache::CacheError& e) {
                std::cerr << "warning: " << e.what() << "; recomputing from scratch\n";
            }
            auto rows = cache::extract_rows(data, p);
            auto t = counting::CountTable::build_extend(p, n_max, std::move(rows), jobs);
            cache::merge_table(data, t);
            cache::save_cache_file(cache_path, data);
            return t;
        }
        return counting::CountTable::build(p, n_max, jobs);
    }();
    auto report = conjecture::logconcavity_sweep(table);
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    if (format == "json") std::cout << conjecture::sweep_report_json(report) << "\n";
    else std::cout << conjecture::sweep_report_human(report);
    return report.clean() ? kExitOk : kExitMismatch;
}

int run_cache_info(const std::string& path) {
    const auto data = cache::load_cache_file(path);
    std::cout << "cache " << path << ": version " << cache::CacheData::kVersion
              << ", p_max = " << data.p_max << ", n_max = " << data.n_max << ", "
              << data.b_values.size() << " B records, " << data.a_values.size()
              << " A records\n";
    return kExitOk;
}

int run_cache_build(int p, int n_max, int jobs, const std::string& path) {
    cache::CacheData data;
    try {
        data = cache::load_cache_file(path);
    } catch (const cache::CacheError&) {
        // absent or invalid: start fresh
    }
    auto rows = cache::extract_rows(data, p);
    const auto table = counting::CountTable::build_extend(p, n_max, std::move(rows), jobs);
    cache::merge_table(data, table);
    cache::save_cache_file(path, data);
    std::cout << "cached A(" << p << ",n,k) for n <= " << n_max << " in " << path << "\n";
    return kExitOk;
}

int run_cache_clear(const std::string& path) {
    if (std::remove(path.c_str()) != 0) {
        std::cerr << "error: cannot remove " << path << "\n";
        return kExitUsage;
    }
    std::cout << "removed " << path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting of commuting permutation tuples by orbit number"};
    app.require_subcommand(1);

    // b
    auto* cmd_b = app.add_subcommand("b", "evaluate the multiplicative function B(p,n)");
    int b_p = 2;
    long b_n = 1;
    std::string b_method = "multiplicative";
    cmd_b->add_option("--p", b_p, "tuple length")->required();
    cmd_b->add_option("--n", b_n, "argument n >= 1")->required();
    cmd_b->add_option("--method", b_method, "evaluation route")
        ->check(CLI::IsMember({"multiplicative", "flag", "dirichlet"}));

    // a
    auto* cmd_a = app.add_subcommand("a", "count commuting p-tuples with k orbits");
    int a_p = 2, a_n = 0, a_k = 0, a_table = -1, a_jobs = default_jobs();
    std::string a_format = "human";
    cmd_a->add_option("--p", a_p, "tuple length")->required();
    auto* a_n_opt = cmd_a->add_option("--n", a_n, "ground set size");
    auto* a_k_opt = cmd_a->add_option("--k", a_k, "orbit count");
    auto* a_table_opt =
        cmd_a->add_option("--table", a_table, "emit the full table up to this n");
    cmd_a->add_option("--format", a_format)->check(CLI::IsMember({"human", "csv", "json"}));
    cmd_a->add_option("--jobs", a_jobs, "worker threads");
    a_n_opt->needs(a_k_opt);
    a_k_opt->needs(a_n_opt);
    a_table_opt->excludes(a_n_opt);

    // darcais / nekrasov
    auto* cmd_darcais = app.add_subcommand("darcais", "coefficient polynomial of u^n");
    int d_p = 2, d_n = 0;
    std::string d_format = "human";
    cmd_darcais->add_option("--p", d_p, "tuple length")->required();
    cmd_darcais->add_option("--n", d_n, "degree in u")->required();
    cmd_darcais->add_option("--format", d_format)->check(CLI::IsMember({"human", "json"}));

    auto* cmd_nekrasov = app.add_subcommand("nekrasov", "hook length polynomial Q_n");
    int q_n = 0;
    std::string q_format = "human";
    cmd_nekrasov->add_option("--n", q_n, "partitioned integer")->required();
    cmd_nekrasov->add_option("--format", q_format)->check(CLI::IsMember({"human", "json"}));

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->require_subcommand(1);
    auto* v_oracle = cmd_verify->add_subcommand("oracle", "exhaustive enumeration vs table");
    int vo_p = 2, vo_n = 4;
    std::uint64_t vo_steps = oracle::Budget{}.max_steps;
    std::string vo_format = "human";
    v_oracle->add_option("--p", vo_p)->required();
    v_oracle->add_option("--n", vo_n)->required();
    v_oracle->add_option("--max-steps", vo_steps, "enumeration budget");
    v_oracle->add_option("--format", vo_format, "human report or histogram table")
        ->check(CLI::IsMember({"human", "csv", "json"}));

    auto* v_bij = cmd_verify->add_subcommand("bijection", "round trips and witness counts");
    int vb_p = 1, vb_n = 4;
    std::uint64_t vb_steps = oracle::Budget{}.max_steps;
    v_bij->add_option("--p", vb_p, "reduced tuple length (tuples carry p+1 permutations)")
        ->required();
    v_bij->add_option("--n", vb_n)->required();
    v_bij->add_option("--max-steps", vb_steps, "enumeration budget");

    auto* v_bf = cmd_verify->add_subcommand("bryanfulman", "product identity, truncated");
    int vf_p = 2, vf_order = 10;
    v_bf->add_option("--p", vf_p)->required();
    v_bf->add_option("--order", vf_order, "truncation order in u");

    auto* v_shift = cmd_verify->add_subcommand("shift", "Q_n(x) = P_n(x+1)");
    int vs_n_max = 10;
    v_shift->add_option("--n-max", vs_n_max);

    auto* v_red = cmd_verify->add_subcommand("reduction", "A(p+1,n,1) as a divisor sum");
    int vr_p_max = 3, vr_n_max = 20;
    v_red->add_option("--p-max", vr_p_max);
    v_red->add_option("--n-max", vr_n_max);

    // conjecture
    auto* cmd_conj = app.add_subcommand("conjecture", "log-concavity sweep over k");
    int c_p = 2, c_n_max = 100, c_jobs = default_jobs();
    bool c_resume = false;
    std::string c_cache = cache::default_cache_path();
    std::string c_format = "human";
    cmd_conj->add_option("--p", c_p)->required();
    cmd_conj->add_option("--n-max", c_n_max)->required();
    cmd_conj->add_option("--jobs", c_jobs, "worker threads");
    cmd_conj->add_flag("--resume", c_resume, "reuse and update the value cache");
    cmd_conj->add_option("--cache", c_cache, "cache file path");
    cmd_conj->add_option("--format", c_format)->check(CLI::IsMember({"human", "json"}));

    // cache
    auto* cmd_cache = app.add_subcommand("cache", "manage the persistent value cache");
    cmd_cache->require_subcommand(1);
    std::string cache_path = cache::default_cache_path();
    auto* cache_info = cmd_cache->add_subcommand("info", "print header and record counts");
    cache_info->add_option("--path", cache_path);
    auto* cache_build = cmd_cache->add_subcommand("build", "precompute and store a table");
    int cb_p = 2, cb_n_max = 50, cb_jobs = default_jobs();
    cache_build->add_option("--p", cb_p)->required();
    cache_build->add_option("--n-max", cb_n_max)->required();
    cache_build->add_option("--jobs", cb_jobs);
    cache_build->add_option("--path", cache_path);
    auto* cache_clear = cmd_cache->add_subcommand("clear", "delete the cache file");
    cache_clear->add_option("--path", cache_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_b->parsed()) return run_b(b_p, b_n, b_method);
        if (cmd_a->parsed()) {
            if (a_table < 0 && a_n_opt->count() == 0)
                throw CLI::RequiredError("a: need --n/--k or --table");
            return run_a(a_p, a_n, a_k, a_table, a_format, a_jobs);
        }
        if (cmd_darcais->parsed())
            return run_poly("P", d_n, series::darcais_poly(d_p, d_n), d_format);
        if (cmd_nekrasov->parsed())
            return run_poly("Q", q_n, series::nekrasov_okounkov_poly(q_n), q_format);
        if (cmd_verify->parsed()) {
            if (v_oracle->parsed()) return run_verify_oracle(vo_p, vo_n, vo_steps, vo_format);
            if (v_bij->parsed()) return run_verify_bijection(vb_p, vb_n, vb_steps);
            if (v_bf->parsed()) return run_verify_bryanfulman(vf_p, vf_order);
            if (v_shift->parsed()) return run_verify_shift(vs_n_max);
            if (v_red->parsed()) return run_verify_reduction(vr_p_max, vr_n_max);
        }
        if (cmd_conj->parsed())
            return run_conjecture(c_p, c_n_max, c_jobs, c_resume, c_cache, c_format);
        if (cmd_cache->parsed()) {
            if (cache_info->parsed()) return run_cache_info(cache_path);
            if (cache_build->parsed()) return run_cache_build(cb_p, cb_n_max, cb_jobs, cache_path);
            if (cache_clear->parsed()) return run_cache_clear(cache_path);
        }
    } catch (const oracle::BudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
