#include "qcert/radial.hpp"

#include <string>

namespace qcert {

void RadialExpr::add_term(long i, long a, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(i, a);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RadialExpr RadialExpr::term(const Rational& c, long r_power, long inv_half_power) {
    if (r_power < 0) throw domain_error("negative r power in radial term");
    RadialExpr f;
    f.add_term(r_power, inv_half_power, c);
    return f;
}

RadialExpr RadialExpr::operator-() const {
    RadialExpr g;
    for (const auto& [key, c] : terms_) g.terms_.emplace(key, -c);
    return g;
}

RadialExpr operator+(const RadialExpr& f, const RadialExpr& g) {
    RadialExpr out = f;
    for (const auto& [key, c] : g.terms_) out.add_term(key.first, key.second, c);
    return out;
}

RadialExpr operator-(const RadialExpr& f, const RadialExpr& g) { return f + (-g); }

RadialExpr operator*(const RadialExpr& f, const RadialExpr& g) {
    RadialExpr out;
    for (const auto& [kf, cf] : f.terms_)
        for (const auto& [kg, cg] : g.terms_)
            out.add_term(kf.first + kg.first, kf.second + kg.second, cf * cg);
    return out;
}

RadialExpr operator*(const Rational& c, const RadialExpr& f) {
    RadialExpr out;
    if (c == 0) return out;
    for (const auto& [key, cf] : f.terms_) out.terms_.emplace(key, c * cf);
    return out;
}

RadialExpr RadialExpr::derivative() const {
    RadialExpr out;
    for (const auto& [key, c] : terms_) {
        const auto [i, a] = key;
        if (i > 0) out.add_term(i - 1, a, c * i);
        if (a != 0) out.add_term(i + 1, a + 2, c * Rational(-a));
    }
    return out;
}

RadialExpr RadialExpr::div_r(long k) const {
    RadialExpr out;
    for (const auto& [key, c] : terms_) {
        if (key.first < k)
            throw domain_error("division by r^" + std::to_string(k) + " is not exact here");
        out.add_term(key.first - k, key.second, c);
    }
    return out;
}

RadialExpr RadialExpr::fold_even_powers() const {
    RadialExpr out;
    for (const auto& [key, c] : terms_) {
        const long parity = key.first % 2;
        const long t = key.first / 2;  // r^i = r^parity * (r^2)^t
        for (long u = 0; u <= t; ++u) {
            const Rational w = binomial(t, u) * ((t - u) % 2 == 0 ? 1 : -1);
            out.add_term(parity, key.second - 2 * u, c * w);
        }
    }
    return out;
}

Rational RadialExpr::coefficient(long r_power, long inv_half_power) const {
    auto it = terms_.find({r_power, inv_half_power});
    return it == terms_.end() ? Rational(0) : it->second;
}

ScaledRational moment_integral(long i, long j) {
    if (i < 0) throw domain_error("moment integral needs i >= 0");
    if (!moment_converges(i, j))
        throw convergence_error("I^" + std::to_string(i) + "_" + std::to_string(j) + " diverges");
    // (1/2) Gamma((i+1)/2) Gamma(j - (i+1)/2) / Gamma(j)
    const ScaledRational num = gamma_half(i + 1) * gamma_half(2 * j - i - 1);
    const ScaledRational den = ScaledRational(Rational(2)) * gamma_half(2 * j);
    return num / den;
}

RadialExpr shifted_laplacian(const RadialExpr& f, long n, long b) {
    const RadialExpr fp = f.derivative();
    return fp.derivative() + Rational(n - 1 + 2 * b) * fp.div_r(1);
}

ScaledRational integrate_moment(const RadialExpr& f, long extra_r_power) {
    ScaledRational total;
    for (const auto& [key, c] : f.terms()) {
        const auto [i, a] = key;
        if (a % 2 != 0)
            throw domain_error("half-integer (1+r^2) exponent survived to integration");
        const long ieff = i + extra_r_power;
        if (ieff < 0) throw domain_error("negative net r power under the integral");
        total += c * moment_integral(ieff, a / 2);
    }
    return total;
}

bool check_moment_recurrences(long n, long l) {
    if (l < 0 || n < 1) throw domain_error("moment recurrence indices out of range");
    const ScaledRational base = moment_integral(l, n);
    bool ok = true;

    //  I^l_n = (2n-l-3)/(2n-2) I^l_{n-1}
    ok = ok && base == rat(2 * n - l - 3, 2 * n - 2) * moment_integral(l, n - 1);
    //  I^l_n = (2n-l-3)/(l+1) I^{l+2}_n
    ok = ok && base == rat(2 * n - l - 3, l + 1) * moment_integral(l + 2, n);
    //  I^l_n = (l-1)/(2n-l-1) I^{l-2}_n = (l-1)/(2n-2) I^{l-2}_{n-1}
    if (l >= 2) {
        ok = ok && base == rat(l - 1, 2 * n - l - 1) * moment_integral(l - 2, n);
        ok = ok && base == rat(l - 1, 2 * n - 2) * moment_integral(l - 2, n - 1);
    }
    //  int (1-r^2) r^l (1+r^2)^{-n} = (2n-2l-4)/(2n-l-3) I^l_n
    ok = ok && base - moment_integral(l + 2, n) == rat(2 * n - 2 * l - 4, 2 * n - l - 3) * base;
    return ok;
}

RadialExpr bubble_w(long n, int order) {
    if (order != 2 && order != 4 && order != 6) throw domain_error("bubble order must be 2, 4 or 6");
    if (n <= order) throw domain_error("bubble needs n > order");
    return RadialExpr::power_basis(n - order);
}

RadialExpr bubble_Z(long n, int order) {
    const RadialExpr w = bubble_w(n, order);
    return RadialExpr::term(Rational(1), 1, 0) * w.derivative() + rat(n - order, 2) * w;
}

}  // namespace qcert
