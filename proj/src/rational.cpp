#include "qcert/rational.hpp"

#include "qcert/errors.hpp"

namespace qcert {

Integer factorial(long m) {
    if (m < 0) throw domain_error("factorial of negative integer");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
}

Rational binomial(long m, long r) {
    if (r < 0 || m < 0 || r > m) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
    return Rational(b);
}

Integer pow_integer(long base, unsigned long exp) {
    Integer b(base), out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
    return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string decimal_string(const Rational& r, int digits) {
    if (digits < 1) digits = 1;
    const bool neg = sgn(r) < 0;
    Rational a = abs(r);
    Integer scale = pow_integer(10, static_cast<unsigned long>(digits));
    // round half away from zero
    Integer scaled = (a.get_num() * scale * 2 + a.get_den()) / (a.get_den() * 2);
    Integer ip = scaled / scale;
    Integer fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (!(fp == 0)) out += "." + frac;
    return out;
}

}  // namespace qcert
