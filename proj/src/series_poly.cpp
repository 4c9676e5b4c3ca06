#include "commperm/series_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "commperm/counting.hpp"
#include "commperm/numtheory.hpp"

namespace commperm::series {

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    // mpq values built from raw num/den pairs are not reduced automatically
    for (Rat& c : coeffs_) c.canonicalize();
    normalize();
}

RatPolynomial RatPolynomial::constant(Rat c) { return RatPolynomial({std::move(c)}); }

RatPolynomial RatPolynomial::monomial(Rat c, int degree) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = std::move(c);
    return RatPolynomial(std::move(v));
}

void RatPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& RatPolynomial::coeff(int d) const {
    static const Rat zero = 0;
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[d];
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) {
    a += b;
    return a;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::scaled(const Rat& c) const {
    std::vector<Rat> out = coeffs_;
    for (Rat& v : out) v *= c;
    return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::times_x() const {
    if (is_zero()) return {};
    std::vector<Rat> out(coeffs_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i];
    return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::shifted(const Rat& a) const {
    // Horner with respect to (x + a)
    RatPolynomial result;
    const RatPolynomial x_plus_a({a, Rat(1)});
    for (int d = degree(); d >= 0; --d)
        result = result * x_plus_a + RatPolynomial::constant(coeffs_[d]);
    return result;
}

Rat RatPolynomial::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (int d = degree(); d >= 0; --d) acc = acc * x + coeffs_[d];
    return acc;
}

std::string RatPolynomial::to_pretty(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rat& c = coeffs_[d];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Rat a = abs(c);
        const bool unit = a == 1;
        if (!unit || d == 0) out += rat_to_string(a);
        if (d > 0) {
            if (!unit) out += "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

namespace {

void partition_descend(int remaining, int max_part, PartitionDiagram& prefix,
                       const std::function<void(const PartitionDiagram&)>& visit) {
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partition_descend(remaining - part, part, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const PartitionDiagram&)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: negative n");
    PartitionDiagram prefix;
    partition_descend(n, n, prefix, visit);
}

std::vector<PartitionDiagram> partitions(int n) {
    std::vector<PartitionDiagram> out;
    for_each_partition(n, [&](const PartitionDiagram& d) { out.push_back(d); });
    return out;
}

Int partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: negative n");
    std::vector<Int> p(n + 1, Int(0));
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // p(m) = sum_{j>=1} (-1)^{j-1} [p(m - j(3j-1)/2) + p(m - j(3j+1)/2)]
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            if (j % 2 == 1) {
                p[m] += p[m - g1];
                if (g2 <= m) p[m] += p[m - g2];
            } else {
                p[m] -= p[m - g1];
                if (g2 <= m) p[m] -= p[m - g2];
            }
        }
    }
    return p[n];
}

std::vector<std::vector<int>> hook_lengths(const PartitionDiagram& parts) {
    const int rows = static_cast<int>(parts.size());
    for (int i = 0; i < rows; ++i) {
        if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1]))
            throw std::invalid_argument("hook_lengths: parts must be weakly decreasing positive");
    }
    // conjugate part lengths give the legs
    const int cols = rows == 0 ? 0 : parts[0];
    std::vector<int> conj(cols, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < parts[i]; ++j) ++conj[j];
    std::vector<std::vector<int>> hooks(rows);
    for (int i = 0; i < rows; ++i) {
        hooks[i].resize(parts[i]);
        for (int j = 0; j < parts[i]; ++j)
            hooks[i][j] = (parts[i] - 1 - j) + (conj[j] - 1 - i) + 1;
    }
    return hooks;
}

std::vector<RatPolynomial> darcais_polys(int p, int n_max) {
    if (p < 1 || n_max < 0) throw std::invalid_argument("darcais_polys: bad arguments");
    std::vector<Int> b(n_max + 1);
    for (int m = 1; m <= n_max; ++m) b[m] = nt::b_multiplicative(p, m);
    std::vector<RatPolynomial> polys(n_max + 1);
    polys[0] = RatPolynomial::constant(1);
    for (int n = 1; n <= n_max; ++n) {
        RatPolynomial acc;
        for (int m = 1; m <= n; ++m) acc += polys[n - m].scaled(Rat(b[m]));
        polys[n] = acc.times_x().scaled(Rat(1, n));
    }
    return polys;
}

RatPolynomial darcais_poly(int p, int n) { return darcais_polys(p, n).back(); }

RatPolynomial nekrasov_okounkov_poly(int n) {
    if (n < 0) throw std::invalid_argument("nekrasov_okounkov_poly: negative n");
    RatPolynomial total;
    for_each_partition(n, [&](const PartitionDiagram& parts) {
        RatPolynomial prod = RatPolynomial::constant(1);
        for (const auto& hook_row : hook_lengths(parts))
            for (int h : hook_row)
                prod = prod * RatPolynomial({Rat(1), Rat(1, static_cast<long>(h) * h)});
        total += prod;
    });
    return total;
}

SeriesTruncation::SeriesTruncation(int order) {
    if (order < 0) throw std::invalid_argument("SeriesTruncation: negative order");
    coeffs_.resize(order + 1);
}

SeriesTruncation SeriesTruncation::operator*(const SeriesTruncation& o) const {
    const int ord = std::min(order(), o.order());
    SeriesTruncation out(ord);
    for (int i = 0; i <= ord; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

SeriesTruncation bryan_fulman_product(int p, int order) {
    if (p < 1 || order < 1) throw std::invalid_argument("bryan_fulman_product: bad arguments");
    SeriesTruncation product(order);
    product[0] = RatPolynomial::constant(1);
    for (int m = 1; m <= order; ++m) {
        const Int c = nt::b_multiplicative(p - 1, m);
        if (c == 0) continue;
        // (1 - u^m)^{-cx} = sum_j (cx)(cx+1)...(cx+j-1)/j! u^{mj}
        SeriesTruncation factor(order);
        factor[0] = RatPolynomial::constant(1);
        RatPolynomial rising = RatPolynomial::constant(1);
        Int j_factorial = 1;
        for (int j = 1; m * j <= order; ++j) {
            rising = rising * RatPolynomial({Rat(j - 1), Rat(c)});
            j_factorial *= j;
            factor[m * j] = rising.scaled(Rat(1, j_factorial));
        }
        product = product * factor;
    }
    return product;
}

SeriesTruncation commuting_tuple_series(int p, int order) {
    if (p < 1 || order < 1) throw std::invalid_argument("commuting_tuple_series: bad arguments");
    const auto table = counting::CountTable::build(p, order);
    SeriesTruncation out(order);
    for (int n = 0; n <= order; ++n) {
        std::vector<Rat> coeffs(n + 1);
        const Rat inv_fact = Rat(1) / factorial(n);
        for (int k = 0; k <= n; ++k) coeffs[k] = Rat(table.at(n, k)) * inv_fact;
        out[n] = RatPolynomial(std::move(coeffs));
    }
    return out;
}

BryanFulmanReport verify_bryan_fulman(int p, int order) {
    const SeriesTruncation lhs = bryan_fulman_product(p, order);
    const SeriesTruncation rhs = commuting_tuple_series(p, order);
    BryanFulmanReport report;
    for (int n = 0; n <= order; ++n) {
        const int deg = std::max(lhs[n].degree(), rhs[n].degree());
        for (int k = 0; k <= deg; ++k) {
            if (lhs[n].coeff(k) != rhs[n].coeff(k)) {
                report.ok = false;
                report.n = n;
                report.k = k;
                report.lhs = lhs[n].coeff(k);
                report.rhs = rhs[n].coeff(k);
                return report;
            }
        }
    }
    return report;
}

ShiftReport shift_check(int n_max) {
    if (n_max < 0) throw std::invalid_argument("shift_check: negative n_max");
    const auto darcais = darcais_polys(2, n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (nekrasov_okounkov_poly(n) != darcais[n].shifted(1))
            return {false, n};
    }
    return {};
}

std::string poly_to_json(int n, const RatPolynomial& poly) {
    std::string out = "{\"n\":" + std::to_string(n) + ",\"coeffs\":[";
    for (int d = 0; d <= poly.degree(); ++d) {
        if (d) out += ',';
        out += '"' + rat_to_string(poly.coeff(d)) + '"';
    }
    out += "]}";
    return out;
}

}  // namespace commperm::series
