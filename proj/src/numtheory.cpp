#include "commperm/numtheory.hpp"

#include <stdexcept>

namespace commperm::nt {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Factorization factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int m = 0;
            while (n % d == 0) {
                n /= d;
                ++m;
            }
            f.push_back({d, m});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int q_binomial(int a, int b, const Int& q) {
    if (b < 0 || b > a) throw std::invalid_argument("q_binomial: need 0 <= b <= a");
    if (q < 2) throw std::invalid_argument("q_binomial: need q >= 2");
    // [a b]_q = prod_{i=1..b} (q^{a-b+i} - 1) / (q^i - 1); after step i the
    // partial product equals [a-b+i choose i]_q, an integer.
    Int result = 1;
    Int q_high = pow_int(q, a - b);  // q^{a-b+i}, advanced each step
    Int q_low = 1;                   // q^i
    for (int i = 1; i <= b; ++i) {
        q_high *= q;
        q_low *= q;
        result *= q_high - 1;
        result = exact_div(result, q_low - 1);
    }
    return result;
}

Int b_prime_power(int p, long q, int m) {
    if (p < 0 || m < 0) throw std::invalid_argument("b_prime_power: negative argument");
    if (!is_prime(q)) throw std::invalid_argument("b_prime_power: q is not prime");
    if (m == 0) return 1;
    if (p == 0) return 0;
    return q_binomial(m + p - 1, m, Int(q));
}

Int b_multiplicative(int p, long n) {
    if (p < 0 || n < 1) throw std::invalid_argument("b_multiplicative: bad arguments");
    Int result = 1;
    for (const auto& [q, m] : factorize(n)) result *= b_prime_power(p, q, m);
    return result;
}

Int b_flag_sum(int p, long n) {
    if (p < 1 || n < 1) throw std::invalid_argument("b_flag_sum: bad arguments");
    // Every flag element divides n, so work inside the divisor lattice of n.
    // F[d] after level L holds sum over chains s_1 | ... | s_L | d of the
    // chain products; F starts as the empty-chain value 1.
    const std::vector<long> div = divisors(n);
    const int nd = static_cast<int>(div.size());
    std::vector<Int> f(nd, Int(1)), next(nd);
    for (int level = 1; level <= p - 1; ++level) {
        for (int i = 0; i < nd; ++i) {
            next[i] = 0;
            for (int j = 0; j <= i; ++j)
                if (div[i] % div[j] == 0)
                    mpz_addmul_ui(next[i].get_mpz_t(), f[j].get_mpz_t(),
                                  static_cast<unsigned long>(div[j]));
        }
        f.swap(next);
    }
    return f[nd - 1];
}

namespace {

struct DirichletDfs {
    const std::vector<long>& div;          // divisors of the original n
    std::vector<std::vector<Int>> powers;  // powers[j][e] = div[j]^e
    Int acc = 0;

    // Sum over ordered factorizations e_1 ... e_levels = m of
    // e_1^{levels-1} e_2^{levels-2} ... e_{levels}^0.  Every e_i divides the
    // original n, so candidates come from its divisor list.
    void run(long m, int levels, const Int& partial) {
        if (levels == 1) {
            acc += partial;  // last factor e = m carries exponent 0
            return;
        }
        for (std::size_t j = 0; j < div.size() && div[j] <= m; ++j)
            if (m % div[j] == 0)
                run(m / div[j], levels - 1, partial * powers[j][levels - 1]);
    }
};

}  // namespace

Int b_dirichlet(int p, long n) {
    if (p < 1 || n < 1) throw std::invalid_argument("b_dirichlet: bad arguments");
    const std::vector<long> div = divisors(n);
    DirichletDfs dfs{div, {}, 0};
    dfs.powers.resize(div.size());
    for (std::size_t j = 0; j < div.size(); ++j) {
        dfs.powers[j].resize(p);
        for (int e = 0; e < p; ++e) dfs.powers[j][e] = pow_int(Int(div[j]), e);
    }
    dfs.run(n, p, Int(1));
    return dfs.acc;
}

Int divisor_sum(long n) {
    if (n < 1) throw std::invalid_argument("divisor_sum: n must be >= 1");
    Int s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

}  // namespace commperm::nt
