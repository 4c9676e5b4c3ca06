#pragma once

#include <functional>
#include <string>
#include <vector>

#include "commperm/bigint.hpp"

namespace commperm::series {

// Polynomial in one variable with exact rational coefficients;
// coeffs()[d] is the degree-d coefficient, trailing zeros stripped.
class RatPolynomial {
public:
    RatPolynomial() = default;  // zero polynomial
    explicit RatPolynomial(std::vector<Rat> coeffs);
    static RatPolynomial constant(Rat c);
    static RatPolynomial monomial(Rat c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int d) const;  // zero outside range
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    RatPolynomial& operator+=(const RatPolynomial& o);
    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b);
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    RatPolynomial scaled(const Rat& c) const;
    RatPolynomial times_x() const;
    // P(x + a)
    RatPolynomial shifted(const Rat& a) const;
    Rat evaluate(const Rat& x) const;

    std::string to_pretty(const std::string& var = "x") const;
    friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// Weakly decreasing positive parts summing to the partitioned integer.
using PartitionDiagram = std::vector<int>;

// Every partition of n exactly once, in reverse-lexicographic order
// ((n) first, (1,1,...,1) last).
void for_each_partition(int n, const std::function<void(const PartitionDiagram&)>& visit);
std::vector<PartitionDiagram> partitions(int n);

// p(n) by the Euler pentagonal-number recurrence (independent of the
// enumeration above; the two are cross-checked in tests).
Int partition_count(int n);

// hooks[i][j] = arm + leg + 1 for cell (i,j) of the Ferrers-Young diagram.
std::vector<std::vector<int>> hook_lengths(const PartitionDiagram& parts);

// P_n for the given p: the coefficient of u^n in exp(x sum_m B(p,m)/m u^m),
// computed by the recurrence n P_n = x sum_{m=1}^{n} B(p,m) P_{n-m}.
// For p = 2 these are the D'Arcais polynomials.
std::vector<RatPolynomial> darcais_polys(int p, int n_max);
RatPolynomial darcais_poly(int p, int n);

// Q_n(x) = sum_{lambda |- n} prod_cells (1 + x / h(cell)^2), expanded exactly.
RatPolynomial nekrasov_okounkov_poly(int n);

// Truncated series in u whose coefficients are polynomials in x.
class SeriesTruncation {
public:
    explicit SeriesTruncation(int order);  // zero series
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    RatPolynomial& operator[](int n) { return coeffs_[n]; }
    const RatPolynomial& operator[](int n) const { return coeffs_[n]; }
    SeriesTruncation operator*(const SeriesTruncation& o) const;
    friend bool operator==(const SeriesTruncation&, const SeriesTruncation&) = default;

private:
    std::vector<RatPolynomial> coeffs_;
};

// prod_{m=1}^{order} (1 - u^m)^{-x B(p-1,m)} truncated at u^order.
SeriesTruncation bryan_fulman_product(int p, int order);
// sum_n sum_k A(p,n,k)/n! x^k u^n truncated at u^order.
SeriesTruncation commuting_tuple_series(int p, int order);

struct BryanFulmanReport {
    bool ok = true;
    int n = -1, k = -1;  // first mismatching coefficient when !ok
    Rat lhs, rhs;
};
BryanFulmanReport verify_bryan_fulman(int p, int order);

struct ShiftReport {
    bool ok = true;
    int first_failure = -1;
};
// Q_n(x) == P_n(x+1) for all n <= n_max.
ShiftReport shift_check(int n_max);

// {"n":.., "coeffs":["num/den", ...]}
std::string poly_to_json(int n, const RatPolynomial& poly);

}  // namespace commperm::series
