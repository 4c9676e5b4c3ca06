#pragma once

#include <vector>

#include "commperm/bigint.hpp"

namespace commperm::nt {

struct PrimePower {
    long prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};
// Canonical factorization, primes strictly increasing; empty for n = 1.
using Factorization = std::vector<PrimePower>;

bool is_prime(long n);
Factorization factorize(long n);  // n >= 1, trial division

// Divisors of n in increasing order.
std::vector<long> divisors(long n);

// Gaussian binomial [a choose b]_q evaluated at an integer q >= 2, computed
// by the product formula with exact divisions interleaved so intermediates
// stay integral (each partial product is itself a Gaussian binomial).
Int q_binomial(int a, int b, const Int& q);

// B(p, q^m) for prime q: the q-binomial [m+p-1 choose m]_q.
// Conventions at the boundary: m = 0 gives 1 for every p; p = 0 gives
// 1 if m = 0 and 0 otherwise, so that B(0, n) = [n = 1].
Int b_prime_power(int p, long q, int m);

// B(p, n) as a product of b_prime_power over the factorization of n.
// Accepts p = 0 with the convention above.
Int b_multiplicative(int p, long n);

// B(p, n) summed directly over arithmetic flags s_1 | s_2 | ... | s_{p-1} | n,
// each flag contributing s_1 * ... * s_{p-1}.  Reference route: no primality
// or factorization involved.
Int b_flag_sum(int p, long n);

// B(p, n) as the Dirichlet-convolution sum over ordered factorizations
// d_1 ... d_p = n of d_1^{p-1} d_2^{p-2} ... d_{p-1}.
Int b_dirichlet(int p, long n);

// sigma(n), by a plain divisor scan (kept independent of factorize).
Int divisor_sum(long n);

}  // namespace commperm::nt
