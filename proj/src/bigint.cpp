#include "commperm/bigint.hpp"

namespace commperm {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw IntegralityError("exact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw IntegralityError("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    return q;
}

Int rat_to_int(const Rat& r) {
    if (r.get_den() != 1)
        throw IntegralityError("rat_to_int: " + r.get_str() + " is not an integer");
    return r.get_num();
}

std::string to_decimal(const Int& v) { return v.get_str(); }

Int parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_decimal: empty string");
    for (char c : s)
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_decimal: invalid digit in \"" + s + "\"");
    return Int(s, 10);
}

std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: cannot parse \"" + s + "\"");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    r.canonicalize();
    return r;
}

}  // namespace commperm
